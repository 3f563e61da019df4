#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordalg/structure.hpp"

namespace ordalg {

// Terms over the workbench signature.  Join and meet are partial on posets;
// ConeInf takes two cone arguments followed by any number of extra conjuncts
// and evaluates to the greatest lower bound of the pair's upper cone that
// also sits below every conjunct (when such an element exists).
struct Term {
    enum class Kind { Var, One, Star, Join, Meet, ConeInf };
    Kind kind = Kind::One;
    int var = -1;
    std::vector<Term> kids;

    static Term v(int i);
    static Term one();
    static Term star(Term a, Term b);
    static Term join(Term a, Term b);
    static Term meet(Term a, Term b);
    static Term cone_inf(Term a, Term b, std::vector<Term> extras = {});
};

// Prefix syntax: (star x y), (join x y), (meet x y), (coneinf x y e1 e2 ...),
// the constant 1, and identifiers as variables.  New variable names are
// appended to vars; repeated names reuse the same slot, so parsing both
// sides of an identity with one vars vector shares the bindings.
Term parse_term(const std::string& text, std::vector<std::string>& vars);
std::string print_term(const Term& t, const std::vector<std::string>& vars);

// env[i] binds variable i; a negative entry is unbound and raises
// UnboundVariable (named via vars when given).
std::optional<int> eval_term(const Term& t, const Structure& s, const std::vector<int>& env,
                             const std::vector<std::string>* vars = nullptr);

enum class IdentityMode { Strict, DefinedOnly };
std::string identity_mode_name(IdentityMode m);
std::optional<IdentityMode> identity_mode_from_name(std::string_view name);

// Check lhs ≈ rhs over all assignments of var_count variables.  Strict mode
// demands both sides defined and equal everywhere; DefinedOnly only rejects
// assignments where both sides are defined yet differ.  The witness is the
// offending assignment.
Verdict holds_identity(const Structure& s, const Term& lhs, const Term& rhs, int var_count,
                       IdentityMode mode);

// Majority-style certificate: on lattice structures, evaluates the two
// ternary lattice terms and checks p(x,x,y) = p(y,x,x) = y (likewise q); on
// strongly ordered structures, checks the partial cone term T1 at its two
// diagonal instances, T1(x,x,z) = z and T1(x,z,z) = x, in strict mode (an
// undefined instance fails — T1 need not be defined elsewhere).  Throws
// Error when neither applies.  Notes say which family ran.
Verdict maltsev_check(const Structure& s);

enum class IdealFamily { LatticeT, PartialT };
std::string ideal_family_name(IdealFamily f);
std::optional<IdealFamily> ideal_family_from_name(std::string_view name);

// Closure of f under the ideal-term family: first two arguments of the base
// quaternary term range over the carrier, the last two over f.  LatticeT
// requires a lattice and checks clauses t1..t4; PartialT uses the cone-based
// base term and checks T1..T3, where an undefined instance counts as a
// failure.  Witnesses are the eight offending arguments.
Verdict ideal_closure_check(const Structure& s, Bits f, IdealFamily family);

} // namespace ordalg
