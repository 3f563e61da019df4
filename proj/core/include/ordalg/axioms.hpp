#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordalg/structure.hpp"

namespace ordalg {

// Every axiom system the workbench can decide membership in.  Each tag
// carries a fixed clause list; checks scan clause by clause, each clause in
// lexicographic order over carrier indices, and report the first violation.
enum class System {
    Hilbert,
    SkewHilbert,
    StrongSkewHilbert,
    LatticeSkewHilbert,
    SectionallyPcPoset,
    StronglySectionallyPcPoset,
    RelativelyPcPoset,
    SectionallyPcLattice,
    Orthoposet,
    BooleanPoset,
    Oia,
    OmJoinSemilattice,
    SectionalOml,
    Goml,
    Psb,
    StrongPsb,
    LatticeSai,
    GomlAsSha,
};

inline constexpr int kSystemCount = 18;

std::vector<System> all_systems();
std::string system_name(System sys); // kebab-case, e.g. "strong-skew-hilbert"
std::optional<System> system_from_name(std::string_view name);

// One universally quantified condition: `holds` evaluated at every tuple of
// `arity` carrier indices.  Structure-level conditions (e.g. "has a least
// element") have arity 0.
struct Clause {
    std::string name;
    int arity = 0;
    std::function<bool(const std::vector<int>&)> holds;
};

// The clause list a tag expands to on a given structure.  Throws
// MissingComponent when the structure lacks a table the tag needs (binary
// table, complement, section maps).
std::vector<Clause> clauses(const Structure& s, System sys);

// Decide membership: every clause at every assignment, scanned clause by
// clause in lexicographic tuple order; the first violation is the witness.
Verdict check(const Structure& s, System sys);

struct Classification {
    std::vector<System> passed;
    std::vector<System> not_applicable; // MissingComponent for these tags
};
Classification classify(const Structure& s);

// Facts every structure passing SkewHilbert must satisfy: 1*x = x (D1),
// x <= y*x (D2), x*1 = 1 (D3), and the designated element is the top.
Verdict derived_facts(const Structure& s);

// Section maps used by the sectional tags.  sec[p][x] == -1 where the map
// is undefined.  These return the explicitly attached family when present;
// otherwise they derive one: x^p := x*p on [p,1] (or on the whole carrier
// when `total`), or x^p := comp(x) /\ p on [0,p].  Throws MissingComponent
// when neither an attached family nor the deriving table exists.
std::vector<std::vector<int>> upper_sectionals(const Structure& s, bool total = false);
std::vector<std::vector<int>> lower_sectionals(const Structure& s);

} // namespace ordalg
