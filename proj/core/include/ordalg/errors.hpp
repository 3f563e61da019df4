#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ordalg {

// Base class for everything this library throws on bad input.  Catching
// ordalg::Error is enough to turn any library failure into a diagnostic.
class Error : public std::runtime_error {
public:
    explicit Error(std::string msg) : std::runtime_error(std::move(msg)) {}
};

// Text/JSON decoding failure.  Carries the 1-based line number when the
// offending location is known (0 when it is not, e.g. for JSON input).
class ParseError : public Error {
public:
    ParseError(int line, const std::string& reason)
        : Error(line > 0 ? "parse error (line " + std::to_string(line) + "): " + reason
                         : "parse error: " + reason),
          line_(line), reason_(reason) {}
    int line() const { return line_; }
    const std::string& reason() const { return reason_; }

private:
    int line_;
    std::string reason_;
};

class DuplicateLabel : public Error {
public:
    explicit DuplicateLabel(const std::string& label)
        : Error("duplicate label: " + label), label_(label) {}
    const std::string& label() const { return label_; }

private:
    std::string label_;
};

// A required table/block is absent (e.g. a complement table for an
// orthoposet check, or a binary table for a term that mentions it).
class MissingComponent : public Error {
public:
    explicit MissingComponent(const std::string& what)
        : Error("missing component: " + what), what_(what) {}
    const std::string& component() const { return what_; }

private:
    std::string what_;
};

// A row of a binary/unary table is absent or has the wrong arity.
class MissingTable : public Error {
public:
    explicit MissingTable(const std::string& what)
        : Error("missing or malformed table: " + what) {}
};

// The order relation fails one of the partial-order laws.  `axiom` names
// the first law violated ("reflexive", "antisymmetric", "transitive") and
// `witness` holds the offending element indices.
class NotAPoset : public Error {
public:
    NotAPoset(std::string axiom, std::vector<int> witness)
        : Error("order relation is not a partial order: fails " + axiom),
          axiom_(std::move(axiom)), witness_(std::move(witness)) {}
    const std::string& axiom() const { return axiom_; }
    const std::vector<int>& witness() const { return witness_; }

private:
    std::string axiom_;
    std::vector<int> witness_;
};

class NoTop : public Error {
public:
    NoTop() : Error("structure has no greatest element") {}
};

class NoBounds : public Error {
public:
    explicit NoBounds(const std::string& what)
        : Error("required bound is absent: " + what) {}
};

// Quotient construction refuses partitions that do not induce a partial
// order on the classes.  `witness` is the pair/tuple exhibiting the
// failure of the strong-congruence condition.
class NotStrongCongruence : public Error {
public:
    NotStrongCongruence(std::string why, std::vector<int> witness)
        : Error("partition is not a strong congruence: " + why),
          why_(std::move(why)), witness_(std::move(witness)) {}
    const std::string& why() const { return why_; }
    const std::vector<int>& witness() const { return witness_; }

private:
    std::string why_;
    std::vector<int> witness_;
};

// Enumeration/search size limits.
class CapExceeded : public Error {
public:
    explicit CapExceeded(const std::string& what) : Error("size cap exceeded: " + what) {}
};

// A term references a variable with no binding in the supplied environment.
class UnboundVariable : public Error {
public:
    explicit UnboundVariable(const std::string& name)
        : Error("unbound variable: " + name), name_(name) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

} // namespace ordalg
