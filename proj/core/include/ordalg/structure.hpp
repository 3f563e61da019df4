#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordalg/poset.hpp"

namespace ordalg {

// Outcome of a single check.  On failure, `clause` is the identifier of the
// first violated condition (in the documented clause order) and `witness`
// the first violating assignment in element-index scan order.
struct Verdict {
    bool pass = true;
    std::string clause;
    std::vector<int> witness;
    std::string detail;
    std::vector<std::string> notes;

    static Verdict ok() { return {}; }
    static Verdict fail(std::string clause, std::vector<int> witness, std::string detail) {
        Verdict v;
        v.pass = false;
        v.clause = std::move(clause);
        v.witness = std::move(witness);
        v.detail = std::move(detail);
        return v;
    }
};

std::string render_witness(const Carrier& c, const std::vector<int>& w);

// Build the order "x <= y iff x*y = one" from a binary table and validate
// it as a partial order (throws NotAPoset naming the first violated law).
Poset induced_poset(const std::vector<std::vector<int>>& star, int one);

// A finite carrier with a partial order, a designated greatest element, and
// optional tables: the binary operation, a complement, and (in memory only)
// a family of one-argument section maps.
class Structure {
public:
    Structure() = default;
    // `star`/`comp` may be empty to mean "absent".  If no order is supplied
    // use induced_poset first.  Validates: top exists and equals `one`;
    // table arities; comp arity.
    Structure(Carrier carrier, Poset poset, std::vector<std::vector<int>> star,
              int one, std::vector<int> comp = {});

    const Carrier& carrier() const { return carrier_; }
    const Poset& poset() const { return poset_; }
    int size() const { return poset_.size(); }
    int one() const { return one_; }
    std::optional<int> zero() const { return poset_.bottom(); }

    bool has_star() const { return !star_.empty(); }
    int star(int x, int y) const { return star_[x][y]; }
    const std::vector<std::vector<int>>& star_table() const { return star_; }
    void set_star(std::vector<std::vector<int>> t);

    bool has_comp() const { return !comp_.empty(); }
    int comp(int x) const { return comp_[x]; }
    const std::vector<int>& comp_table() const { return comp_; }
    void set_comp(std::vector<int> t);

    // sectionals()[p][x] = image of x under the section map at p, or -1
    // where the map is undefined.  Never serialized; carried by value for
    // constructions that produce one (duals, section restrictions).
    bool has_sectionals() const { return !sectionals_.empty(); }
    const std::vector<std::vector<int>>& sectionals() const { return sectionals_; }
    void set_sectionals(std::vector<std::vector<int>> s) { sectionals_ = std::move(s); }

    bool leq(int x, int y) const { return poset_.leq(x, y); }
    std::optional<int> meet(int x, int y) const { return poset_.meet(x, y); }
    std::optional<int> join(int x, int y) const { return poset_.join(x, y); }

    // Greatest lower bound of upper(a, b) ∪ {extra...}: the "cone infimum"
    // used by partial term operations.  Empty when no greatest element of
    // the lower cone exists.
    std::optional<int> cone_inf(int a, int b, const std::vector<int>& extra) const;

    // Does "x <= y iff x*y = one" hold for the stored order and table?
    // Requires star.  Clause id "order-table-agreement".
    Verdict order_agrees_with_table() const;

    std::string label(int i) const { return carrier_.label(i); }

    bool operator==(const Structure& o) const {
        return carrier_.labels() == o.carrier_.labels() && poset_ == o.poset_ &&
               star_ == o.star_ && one_ == o.one_ && comp_ == o.comp_ &&
               sectionals_ == o.sectionals_;
    }

private:
    Carrier carrier_;
    Poset poset_;
    std::vector<std::vector<int>> star_;
    int one_ = -1;
    std::vector<int> comp_;
    std::vector<std::vector<int>> sectionals_;
};

} // namespace ordalg
