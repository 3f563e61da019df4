#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordalg/errors.hpp"

namespace ordalg {

// Subsets of a carrier are 64-bit masks; bit i == element with index i.
// Everything in the library assumes carriers of at most 64 elements, which
// is far beyond what exhaustive checking can touch anyway.
using Bits = std::uint64_t;

constexpr int kMaxCarrier = 64;

inline Bits bit(int i) { return Bits{1} << i; }
inline bool has(Bits s, int i) { return (s >> i) & 1u; }
inline Bits full_mask(int n) { return n >= 64 ? ~Bits{0} : (Bits{1} << n) - 1; }
inline int popcount(Bits s) { return __builtin_popcountll(s); }
inline int lowest(Bits s) { return __builtin_ctzll(s); } // undefined for 0

// Iterate set bits low to high: for (Bits t = s; t; t &= t - 1) { int i = lowest(t); ... }

std::vector<int> to_indices(Bits s);

// Named list of elements.  Labels are opaque strings; the index order is
// the order of first appearance and is the scan order used everywhere a
// "first witness" is reported.
class Carrier {
public:
    Carrier() = default;
    explicit Carrier(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }

    // -1 when absent.
    int index_of(const std::string& label) const;
    int require(const std::string& label) const; // throws ParseError when absent

private:
    std::vector<std::string> labels_;
};

// Finite partial order over 0..n-1 stored as cone bitmasks.  Construction
// validates the relation eagerly and names the first violated law.
class Poset {
public:
    Poset() = default;

    // leq[x][y] == true  iff  x <= y.  Throws NotAPoset on invalid input.
    static Poset from_leq(int n, const std::vector<std::vector<bool>>& leq);

    // Reflexive-transitive closure of the given cover/step pairs (x, y)
    // meaning x < y.  Throws NotAPoset if the closure is not antisymmetric.
    static Poset from_pairs(int n, const std::vector<std::pair<int, int>>& below);

    int size() const { return n_; }
    bool leq(int x, int y) const { return has(up_[x], y); }
    bool lt(int x, int y) const { return x != y && leq(x, y); }

    // Principal cones.
    Bits up(int x) const { return up_[x]; }     // { y : x <= y }
    Bits down(int x) const { return down_[x]; } // { y : y <= x }

    // Cones of a subset: lower(A) = { z : z <= a for all a in A }.
    // lower(empty) = upper(empty) = the whole carrier.
    Bits lower(Bits a) const;
    Bits upper(Bits a) const;

    std::optional<int> greatest(Bits a) const; // greatest element OF the set a
    std::optional<int> least(Bits a) const;
    std::vector<int> maximal(Bits a) const;
    std::vector<int> minimal(Bits a) const;

    std::optional<int> top() const { return top_; }
    std::optional<int> bottom() const { return bottom_; }

    // Binary bounds; empty when no greatest lower/least upper bound exists.
    std::optional<int> meet(int x, int y) const { return greatest(down_[x] & down_[y]); }
    std::optional<int> join(int x, int y) const { return least(up_[x] & up_[y]); }

    // True when every pair has both bounds; otherwise fills `witness` with
    // the first (element-order) pair missing one, and names which.
    bool is_lattice() const;
    bool is_lattice(std::pair<int, int>& witness, std::string& which) const;

    // Every pair has a join (top implies nonempty upper cones, but least
    // upper bounds can still be missing).
    bool is_join_semilattice(std::pair<int, int>& witness) const;

    // Cover pairs (x, y) with x < y and nothing strictly between.
    std::vector<std::pair<int, int>> covers() const;

    Poset dual() const;

    // Induced order on the elements of `keep`; `map_out[i]` = original index
    // of the i-th retained element (in original element order).
    Poset restrict(Bits keep, std::vector<int>& map_out) const;

    bool operator==(const Poset& o) const { return n_ == o.n_ && up_ == o.up_; }

private:
    int n_ = 0;
    std::vector<Bits> up_;
    std::vector<Bits> down_;
    std::optional<int> top_;
    std::optional<int> bottom_;

    void finish(); // fills down_, top_, bottom_ from validated up_
};

} // namespace ordalg
