#pragma once

#include <optional>
#include <vector>

#include "ordalg/axioms.hpp"
#include "ordalg/structure.hpp"

namespace ordalg {

// Exhaustive model search at desk scale.  Sizes are capped per family
// because the state spaces grow at very different rates:
//   - binary-table systems: order-first enumeration (every model's order is
//     recovered from the table, so orders with a greatest element are
//     enumerated up to isomorphism and tables are filled in by DFS)
//   - complement systems: orders plus involutions
//   - section-map systems: orders plus one map per section
// "labeled" counts structures on a fixed carrier whose last element is the
// designated unit; "iso" counts isomorphism classes.
constexpr int kSearchCapUnrestricted = 6;   // binary-table systems with the cone axiom
constexpr int kSearchCapGeneralTable = 5;   // binary-table systems without it
constexpr int kSearchCapFixedOrder = 8;     // table fill over a given order (cone systems)
constexpr int kSearchCapTableFirst = 3;     // independent brute-force strategy
constexpr int kSearchCapComplement = 6;     // complement systems
constexpr int kSearchCapSectional = 5;      // one map per section
constexpr int kSearchCapSectionalTotal = 4; // total section maps

struct CountResult {
    long long labeled = 0;
    long long iso = 0;
};

// Isomorphism-class representatives of all models of `sys` with exactly n
// elements, deterministically ordered.  Throws CapExceeded above the
// family's cap.
std::vector<Structure> enumerate_models(System sys, int n);

CountResult count_models(System sys, int n);

// All tables on the given order (labeled, no isomorphism folding).  Only
// binary-table systems; the unit is the order's top.
std::vector<Structure> enumerate_models_on(const Carrier& c, const Poset& po, System sys);

// Independent cross-check: enumerate raw tables with unit-diagonal, derive
// the order from each table, and count models.  Only binary-table systems,
// only up to kSearchCapTableFirst.
CountResult count_models_tablefirst(System sys, int n);

// Smallest model (by size, then canonical order) satisfying `passes` and
// violating `fails`; empty when none exists up to max_n.
std::optional<Structure> find_counterexample(System passes, System fails, int max_n);

// Orders with a greatest element on n points, one per isomorphism class,
// with the greatest element at the last index.
std::vector<Poset> posets_with_top(int n);

// Structure automorphisms (permutations preserving order and all tables;
// the unit is fixed automatically).
long long automorphism_count(const Structure& s);

} // namespace ordalg
