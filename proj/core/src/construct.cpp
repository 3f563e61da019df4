#include "ordalg/construct.hpp"

#include <algorithm>

#include "ordalg/errors.hpp"

namespace ordalg {

namespace {

int require_top(const Poset& po) {
    auto t = po.top();
    if (!t) throw NoTop();
    return *t;
}

int require_bottom(const Poset& po) {
    auto b = po.bottom();
    if (!b) throw NoBounds("bottom");
    return *b;
}

} // namespace

Structure trivial_star(const Carrier& c, const Poset& po) {
    const int n = po.size();
    const int one = require_top(po);
    std::vector<std::vector<int>> star(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) star[x][y] = po.leq(x, y) ? one : y;
    return Structure(c, po, std::move(star), one);
}

Structure pst_construct(const Carrier& c, const Poset& po, const std::vector<int>& comp) {
    const int n = po.size();
    const int one = require_top(po);
    const int zero = require_bottom(po);
    if (static_cast<int>(comp.size()) != n) throw MissingTable("complement");
    std::vector<std::vector<int>> star(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            star[x][y] = po.leq(x, y) ? one : (y == zero ? comp[x] : y);
    return Structure(c, po, std::move(star), one, comp);
}

namespace {

// double negation x -> (x*0)*0; requires star and a bottom
int ddn(const Structure& s, int zero, int x) { return s.star(s.star(x, zero), zero); }

Bits closed_set(const Structure& s) {
    if (!s.has_star()) throw MissingComponent("binary table");
    const int zero = require_bottom(s.poset());
    Bits out = 0;
    for (int x = 0; x < s.size(); ++x)
        if (ddn(s, zero, x) == x) out |= bit(x);
    return out;
}

} // namespace

Structure closed_elements(const Structure& s) {
    const int zero = require_bottom(s.poset());
    const Bits cl = closed_set(s);
    std::vector<int> members;
    Poset sub = s.poset().restrict(cl, members);
    std::vector<std::string> labels;
    for (int m : members) labels.push_back(s.label(m));
    std::vector<int> comp(members.size());
    int one_pos = -1;
    for (size_t i = 0; i < members.size(); ++i) {
        const int image = s.star(members[i], zero);
        auto it = std::find(members.begin(), members.end(), image);
        if (it == members.end())
            throw Error("complement of closed element '" + s.label(members[i]) +
                        "' is not closed");
        comp[i] = static_cast<int>(it - members.begin());
        if (members[i] == s.one()) one_pos = static_cast<int>(i);
    }
    if (one_pos < 0) throw Error("the unit is not closed");
    return Structure(Carrier(std::move(labels)), std::move(sub), {}, one_pos, std::move(comp));
}

Verdict pst_reproduces(const Structure& s) {
    const int zero = require_bottom(s.poset());
    const Bits cl = closed_set(s);
    for (int x = 0; x < s.size(); ++x)
        if (!has(cl, x))
            return Verdict::fail("closed-carrier", {x},
                                 "element is not fixed by double negation");
    std::vector<int> comp(s.size());
    for (int x = 0; x < s.size(); ++x) comp[x] = s.star(x, zero);
    const Structure rebuilt = pst_construct(s.carrier(), s.poset(), comp);
    for (int x = 0; x < s.size(); ++x)
        for (int y = 0; y < s.size(); ++y)
            if (rebuilt.star(x, y) != s.star(x, y))
                return Verdict::fail("table-mismatch", {x, y},
                                     "rebuilt table differs from the stored one");
    return Verdict::ok();
}

SpecialSubsets special_subsets(const Structure& s) {
    if (!s.has_star()) throw MissingComponent("binary table");
    const int zero = require_bottom(s.poset());
    SpecialSubsets out;
    out.closed = closed_set(s);
    for (int x = 0; x < s.size(); ++x) {
        if (s.star(x, zero) == zero) out.dense |= bit(x);
        out.weakly_dense |= bit(s.star(ddn(s, zero, x), x));
    }
    for (int a : to_indices(out.closed)) {
        Bits fiber = 0;
        for (int x = 0; x < s.size(); ++x)
            if (ddn(s, zero, x) == a) fiber |= bit(x);
        out.fibers.emplace_back(a, fiber);
    }
    return out;
}

Structure upper_section(const Structure& s, int p) {
    if (!s.has_star()) throw MissingComponent("binary table");
    if (p < 0 || p >= s.size()) throw Error("section base out of range");
    const Bits keep = s.poset().up(p);
    std::vector<int> members;
    Poset sub = s.poset().restrict(keep, members);
    const int k = static_cast<int>(members.size());
    std::vector<int> pos(s.size(), -1);
    for (int i = 0; i < k; ++i) pos[members[i]] = i;
    auto local = [&](int original) {
        if (original < 0 || pos[original] < 0)
            throw Error("section of '" + s.label(p) + "' is not closed under the table");
        return pos[original];
    };
    std::vector<std::vector<int>> star(k, std::vector<int>(k));
    std::vector<int> comp(k);
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i) {
        labels.push_back(s.label(members[i]));
        comp[i] = local(s.star(members[i], p));
        for (int j = 0; j < k; ++j) star[i][j] = local(s.star(members[i], members[j]));
    }
    return Structure(Carrier(std::move(labels)), std::move(sub), std::move(star),
                     local(s.one()), std::move(comp));
}

namespace {

Structure retable(const Structure& s) {
    if (!s.has_star()) throw MissingComponent("binary table");
    const int n = s.size();
    std::vector<std::vector<int>> out(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            out[x][y] = s.star(s.star(s.star(x, y), y), y);
    Structure r(s.carrier(), s.poset(), std::move(out), s.one(), s.comp_table());
    if (s.has_sectionals()) r.set_sectionals(s.sectionals());
    return r;
}

} // namespace

// both transports are the same triple application of the stored table
Structure product_to_star(const Structure& s) { return retable(s); }
Structure star_to_product(const Structure& s) { return retable(s); }

Structure dualize(const Structure& s) {
    const int one = require_bottom(s.poset());
    Structure d(s.carrier(), s.poset().dual(), {}, one, s.comp_table());
    if (s.has_sectionals()) d.set_sectionals(s.sectionals());
    return d;
}

Structure quotient(const Structure& s, const Partition& theta, bool force_preorder) {
    if (!s.has_star()) throw MissingComponent("binary table");
    if (!force_preorder) {
        if (auto v = is_congruence(s, theta, CongruenceMode::Strong); !v.pass)
            throw NotStrongCongruence(v.clause + " fails at " +
                                          render_witness(s.carrier(), v.witness),
                                      v.witness);
    }
    const int k = theta.block_count();
    std::vector<int> rep(k, -1);
    std::vector<std::string> labels(k);
    for (int x = 0; x < s.size(); ++x)
        if (rep[theta.block_of(x)] < 0) {
            rep[theta.block_of(x)] = x;
            labels[theta.block_of(x)] = "[" + s.label(x) + "]";
        }
    const Bits unit = theta.class_of(s.one());
    std::vector<std::vector<int>> star(k, std::vector<int>(k));
    std::vector<std::vector<bool>> leq(k, std::vector<bool>(k));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            star[a][b] = theta.block_of(s.star(rep[a], rep[b]));
            leq[a][b] = has(unit, s.star(rep[a], rep[b]));
        }
    Poset po = Poset::from_leq(k, leq); // throws NotAPoset on a broken order
    return Structure(Carrier(std::move(labels)), std::move(po), std::move(star),
                     theta.block_of(s.one()));
}

Bits pc_candidates(const Poset& po, int x, int y) {
    const Bits cone = po.lower(po.up(x) & po.up(y));
    Bits out = 0;
    for (int v = 0; v < po.size(); ++v)
        if ((cone & po.down(v)) == po.down(y)) out |= bit(v);
    return out;
}

std::vector<std::pair<int, int>> pc_missing_pairs(const Poset& po) {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < po.size(); ++x)
        for (int y = 0; y < po.size(); ++y)
            if (!po.greatest(pc_candidates(po, x, y))) out.emplace_back(x, y);
    return out;
}

std::optional<std::vector<std::vector<int>>> pc_star_table(const Poset& po) {
    const int n = po.size();
    std::vector<std::vector<int>> star(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto g = po.greatest(pc_candidates(po, x, y));
            if (!g) return std::nullopt;
            star[x][y] = *g;
        }
    return star;
}

} // namespace ordalg
