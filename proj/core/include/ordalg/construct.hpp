#pragma once

#include <utility>
#include <vector>

#include "ordalg/congruence.hpp"
#include "ordalg/structure.hpp"

namespace ordalg {

// The table forced by the order alone: x*y = 1 when x <= y, otherwise y.
Structure trivial_star(const Carrier& c, const Poset& po);

// Binary table induced by a complemented bounded poset: x*y = 1 when
// x <= y, x*0 = comp(x), and x*y = y otherwise.  Requires both bounds.
Structure pst_construct(const Carrier& c, const Poset& po, const std::vector<int>& comp);

// Elements fixed by double negation x -> (x*0)*0, packaged as a structure
// over the induced suborder with complement x -> x*0 and no binary table.
// Requires a bottom element.
Structure closed_elements(const Structure& s);

// Does rebuilding the table from closed_elements(s) give back s?  Fails
// with clause "closed-carrier" (some element not closed) or
// "table-mismatch" (first differing cell).
Verdict pst_reproduces(const Structure& s);

// Distinguished subsets read off the table (requires star and a bottom):
//   closed:        x = (x*0)*0
//   dense:         x*0 = 0
//   weakly_dense:  image of x -> ((x*0)*0)*x
//   fibers:        for each closed a, { x : (x*0)*0 = a }
struct SpecialSubsets {
    Bits closed = 0;
    Bits dense = 0;
    Bits weakly_dense = 0;
    std::vector<std::pair<int, Bits>> fibers; // keyed by closed element, ascending
};
SpecialSubsets special_subsets(const Structure& s);

// Restriction to the principal up-set [p, 1]: the binary table restricts
// (values never drop below the right argument), and x -> x*p becomes the
// complement of the section.
Structure upper_section(const Structure& s, int p);

// Term transports between the two binary signatures:
//   from a product table:  x*y = ((x.y).y).y
//   from a star table:     x.y = ((x*y)*y)*y
Structure product_to_star(const Structure& s);
Structure star_to_product(const Structure& s);

// Order-theoretic dual.  The original bottom becomes the unit; the binary
// table is dropped (it does not dualize), complement and section maps carry
// over unchanged.
Structure dualize(const Structure& s);

// Quotient by a congruence.  Classes become elements (labeled by their
// first member), the table acts on representatives, and the order holds
// between classes whose product falls in the unit class.  Unless
// force_preorder is set, theta must be a strong congruence (algebraic,
// min-stable, strongness biconditional) — otherwise NotStrongCongruence.
// With force_preorder, the induced relation is still required to be a
// partial order (NotAPoset names the broken law when it is not).
Structure quotient(const Structure& s, const Partition& theta, bool force_preorder = false);

// Candidates for a residual at (x, y): elements v whose adjunction to the
// upper cone of {x, y} cuts the lower cone down to exactly that of y.
Bits pc_candidates(const Poset& po, int x, int y);

// Pairs (x, y) whose candidate set has no greatest element, i.e. where no
// order-defined residual exists.
std::vector<std::pair<int, int>> pc_missing_pairs(const Poset& po);

// Residual table when every pair admits one.
std::optional<std::vector<std::vector<int>>> pc_star_table(const Poset& po);

} // namespace ordalg
