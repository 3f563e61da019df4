#include "ordalg/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "ordalg/axioms.hpp"
#include "ordalg/errors.hpp"

namespace ordalg {

namespace {

bool comparable(const Poset& po, int a, int b) { return po.leq(a, b) || po.leq(b, a); }
int min_of(const Poset& po, int a, int b) { return po.leq(a, b) ? a : b; }

std::string trim(std::string t) {
    auto issp = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!t.empty() && issp(t.front())) t.erase(t.begin());
    while (!t.empty() && issp(t.back())) t.pop_back();
    return t;
}

} // namespace

// ---------------------------------------------------------------------------
// Partition
// ---------------------------------------------------------------------------

Partition::Partition(std::vector<int> block_of) : block_(std::move(block_of)) {
    // normalize block ids to first-occurrence order
    std::vector<int> remap(block_.size(), -1);
    int next = 0;
    for (int& b : block_) {
        if (b < 0 || b >= static_cast<int>(block_.size()))
            throw Error("partition block id out of range");
        if (remap[b] < 0) remap[b] = next++;
        b = remap[b];
    }
    blocks_ = next;
}

Partition Partition::identity(int n) {
    std::vector<int> b(n);
    std::iota(b.begin(), b.end(), 0);
    return Partition(std::move(b));
}

Partition Partition::full(int n) { return Partition(std::vector<int>(n, 0)); }

Partition Partition::parse(const Carrier& c, const std::string& text) {
    std::string body = trim(text);
    if (body.size() >= 2 && body.front() == '{' && body.back() == '}')
        body = body.substr(1, body.size() - 2);
    std::vector<int> block_of(c.size(), -1);
    int id = 0;
    std::stringstream blocks(body);
    std::string blk;
    while (std::getline(blocks, blk, '|')) {
        std::stringstream members(blk);
        std::string label;
        bool any = false;
        while (std::getline(members, label, ',')) {
            label = trim(label);
            if (label.empty()) continue;
            int x = c.require(label);
            if (block_of[x] != -1) throw Error("element '" + label + "' listed twice in partition");
            block_of[x] = id;
            any = true;
        }
        if (any) ++id;
    }
    for (int x = 0; x < c.size(); ++x)
        if (block_of[x] == -1) throw Error("element '" + c.label(x) + "' missing from partition");
    return Partition(std::move(block_of));
}

std::string Partition::print(const Carrier& c) const {
    std::string out = "{";
    bool first_block = true;
    for (const auto& blk : blocks()) {
        if (!first_block) out += '|';
        first_block = false;
        bool first = true;
        for (int x : blk) {
            if (!first) out += ',';
            first = false;
            out += c.label(x);
        }
    }
    out += '}';
    return out;
}

Bits Partition::class_of(int x) const {
    Bits out = 0;
    for (int y = 0; y < size(); ++y)
        if (block_[y] == block_[x]) out |= bit(y);
    return out;
}

std::vector<std::vector<int>> Partition::blocks() const {
    std::vector<std::vector<int>> out(blocks_);
    for (int x = 0; x < size(); ++x) out[block_[x]].push_back(x);
    return out;
}

bool Partition::refines(const Partition& coarser) const {
    if (coarser.size() != size()) return false;
    // two elements in a common block here must share a block there
    std::vector<int> image(blocks_, -1);
    for (int x = 0; x < size(); ++x) {
        int b = block_[x];
        if (image[b] == -1) image[b] = coarser.block_[x];
        else if (image[b] != coarser.block_[x]) return false;
    }
    return true;
}

std::string congruence_mode_name(CongruenceMode m) {
    switch (m) {
        case CongruenceMode::Algebraic: return "algebraic";
        case CongruenceMode::MinStable: return "min-stable";
        case CongruenceMode::Strong: return "strong";
        case CongruenceMode::FullSignature: return "full-signature";
    }
    return "?";
}

std::optional<CongruenceMode> congruence_mode_from_name(std::string_view name) {
    std::string t(name);
    std::replace(t.begin(), t.end(), '_', '-');
    if (t == "algebraic") return CongruenceMode::Algebraic;
    if (t == "min-stable") return CongruenceMode::MinStable;
    if (t == "strong") return CongruenceMode::Strong;
    if (t == "full-signature") return CongruenceMode::FullSignature;
    return std::nullopt;
}

std::string filter_kind_name(FilterKind k) {
    switch (k) {
        case FilterKind::LatticeFilter: return "lattice";
        case FilterKind::StarFilter: return "star";
        case FilterKind::Filter: return "filter";
        case FilterKind::StrongFilter: return "strong";
    }
    return "?";
}

std::optional<FilterKind> filter_kind_from_name(std::string_view name) {
    std::string t(name);
    std::replace(t.begin(), t.end(), '_', '-');
    if (t == "lattice" || t == "lattice-filter") return FilterKind::LatticeFilter;
    if (t == "star" || t == "star-filter") return FilterKind::StarFilter;
    if (t == "filter") return FilterKind::Filter;
    if (t == "strong" || t == "strong-filter") return FilterKind::StrongFilter;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Congruence predicates
// ---------------------------------------------------------------------------

Verdict is_algebraic_congruence(const Structure& s, const Partition& theta) {
    if (!s.has_star()) throw MissingComponent("binary table");
    const int n = s.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!theta.same(a, b)) continue;
            for (int c = 0; c < n; ++c) {
                if (!theta.same(s.star(a, c), s.star(b, c)))
                    return Verdict::fail("star-compatibility", {a, b, c},
                                         "left arguments produce unrelated values");
                if (!theta.same(s.star(c, a), s.star(c, b)))
                    return Verdict::fail("star-compatibility", {a, b, c},
                                         "right arguments produce unrelated values");
            }
        }
    return Verdict::ok();
}

Verdict is_min_stable(const Structure& s, const Partition& theta) {
    const Poset& po = s.poset();
    const int n = s.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!theta.same(a, b)) continue;
            for (int c = 0; c < n; ++c) {
                if (!comparable(po, a, c)) continue;
                for (int d = 0; d < n; ++d) {
                    if (!theta.same(c, d) || !comparable(po, b, d)) continue;
                    if (!theta.same(min_of(po, a, c), min_of(po, b, d)))
                        return Verdict::fail("min-stability", {a, b, c, d},
                                             "minima of comparable related pairs are unrelated");
                }
            }
        }
    return Verdict::ok();
}

Verdict is_lattice_compatible(const Structure& s, const Partition& theta) {
    const Poset& po = s.poset();
    if (!po.is_lattice()) throw MissingComponent("lattice");
    const int n = s.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !theta.same(a, b)) continue;
            for (int c = 0; c < n; ++c) {
                if (!theta.same(*po.meet(a, c), *po.meet(b, c)))
                    return Verdict::fail("meet-compatibility", {a, b, c},
                                         "meets with a common element are unrelated");
                if (!theta.same(*po.join(a, c), *po.join(b, c)))
                    return Verdict::fail("join-compatibility", {a, b, c},
                                         "joins with a common element are unrelated");
            }
        }
    return Verdict::ok();
}

Verdict is_strong_congruence(const Structure& s, const Partition& theta) {
    if (auto alg = is_algebraic_congruence(s, theta); !alg.pass) {
        alg.notes.push_back("not an algebraic congruence, strongness is undefined");
        return alg;
    }
    const Poset& po = s.poset();
    const int n = s.size();
    const Bits unit = theta.class_of(s.one());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            bool quotient_le = has(unit, s.star(a, b));
            bool bound = false;
            for (int c = 0; c < n && !bound; ++c)
                bound = theta.same(c, b) && po.leq(a, c) && po.leq(b, c);
            if (quotient_le && !bound)
                return Verdict::fail("strongness", {a, b},
                                     "quotient order holds but the target class has no common upper bound");
            if (!quotient_le && bound)
                return Verdict::fail("strongness", {a, b},
                                     "a common upper bound exists but the quotient order fails");
        }
    return Verdict::ok();
}

Verdict classes_up_directed(const Structure& s, const Partition& theta) {
    const Poset& po = s.poset();
    const int n = s.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!theta.same(a, b)) continue;
            bool bound = false;
            for (int c = 0; c < n && !bound; ++c)
                bound = theta.same(c, a) && po.leq(a, c) && po.leq(b, c);
            if (!bound)
                return Verdict::fail("up-directed-classes", {a, b},
                                     "related pair has no upper bound inside its class");
        }
    return Verdict::ok();
}

Verdict quotient_cone_formula(const Structure& s, const Partition& theta) {
    if (auto alg = is_algebraic_congruence(s, theta); !alg.pass) {
        alg.notes.push_back("not an algebraic congruence, the quotient order is undefined");
        return alg;
    }
    const int n = s.size();
    const int k = theta.block_count();
    const Bits unit = theta.class_of(s.one());
    // quotient order: class A below class B when a representative product lands
    // in the unit class (representative-independent by compatibility)
    std::vector<int> rep(k, -1);
    for (int x = 0; x < n; ++x)
        if (rep[theta.block_of(x)] == -1) rep[theta.block_of(x)] = x;
    auto leq_q = [&](int A, int B) { return has(unit, s.star(rep[A], rep[B])); };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Bits image = 0; // classes of common upper bounds in the structure
            for (int x = 0; x < n; ++x)
                if (s.poset().leq(a, x) && s.poset().leq(b, x)) image |= bit(theta.block_of(x));
            Bits cone = 0; // common upper bounds in the quotient order
            for (int C = 0; C < k; ++C)
                if (leq_q(theta.block_of(a), C) && leq_q(theta.block_of(b), C)) cone |= bit(C);
            if (image != cone)
                return Verdict::fail("quotient-cone-formula", {a, b},
                                     "upper cone in the quotient is not the image of the upper cone");
        }
    return Verdict::ok();
}

std::optional<int> class_greatest(const Structure& s, const Partition& theta, int x) {
    Bits cls = theta.class_of(x);
    return s.poset().greatest(cls);
}

Verdict is_congruence(const Structure& s, const Partition& theta, CongruenceMode mode) {
    switch (mode) {
        case CongruenceMode::Algebraic:
            return is_algebraic_congruence(s, theta);
        case CongruenceMode::MinStable: {
            if (auto v = is_algebraic_congruence(s, theta); !v.pass) return v;
            return is_min_stable(s, theta);
        }
        case CongruenceMode::Strong: {
            if (auto v = is_algebraic_congruence(s, theta); !v.pass) return v;
            if (auto v = is_min_stable(s, theta); !v.pass) return v;
            return is_strong_congruence(s, theta);
        }
        case CongruenceMode::FullSignature: {
            if (auto v = is_algebraic_congruence(s, theta); !v.pass) return v;
            return is_lattice_compatible(s, theta);
        }
    }
    throw Error("unknown congruence mode");
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

namespace {

constexpr int kBruteForcePartitionCap = 9;

template <typename Fn>
void for_each_partition(int n, Fn&& fn) {
    // restricted growth strings: a[0]=0, a[i] <= max(a[0..i-1]) + 1
    std::vector<int> a(n, 0);
    while (true) {
        fn(a);
        int i = n - 1;
        int mx = 0;
        for (; i > 0; --i) {
            mx = 0;
            for (int j = 0; j < i; ++j) mx = std::max(mx, a[j]);
            if (a[i] <= mx) break; // room to grow at position i
        }
        if (i == 0) return;
        ++a[i];
        std::fill(a.begin() + i + 1, a.end(), 0);
    }
}

void sort_by_refinement(std::vector<Partition>& out) {
    std::sort(out.begin(), out.end(), [](const Partition& x, const Partition& y) {
        if (x.block_count() != y.block_count()) return x.block_count() > y.block_count();
        return x.raw() < y.raw();
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
}

// join in the congruence lattice: op-closure of the union of the two
Partition congruence_join(const Structure& s, const Partition& x, const Partition& y) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < s.size(); ++a)
        for (int b = a + 1; b < s.size(); ++b)
            if (x.same(a, b) || y.same(a, b)) pairs.emplace_back(a, b);
    return principal_congruence(s, pairs);
}

} // namespace

std::vector<Partition> enumerate_congruences(const Structure& s, CongruenceMode mode) {
    if (mode == CongruenceMode::FullSignature && !s.poset().is_lattice())
        throw MissingComponent("lattice");
    const int n = s.size();
    std::vector<Partition> out;
    if (n <= kBruteForcePartitionCap) {
        for_each_partition(n, [&](const std::vector<int>& a) {
            Partition p(a);
            if (is_congruence(s, p, mode).pass) out.push_back(std::move(p));
        });
    } else {
        // every congruence is a join of principal ones, so close the set of
        // principal congruences under binary joins
        std::vector<Partition> pool{Partition::identity(n)};
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                pool.push_back(principal_congruence(s, {{a, b}}));
        sort_by_refinement(pool);
        bool grew = true;
        while (grew) {
            grew = false;
            const auto snapshot = pool;
            for (size_t i = 0; i < snapshot.size(); ++i)
                for (size_t j = i + 1; j < snapshot.size(); ++j) {
                    Partition joined = congruence_join(s, snapshot[i], snapshot[j]);
                    if (std::find(pool.begin(), pool.end(), joined) == pool.end()) {
                        pool.push_back(std::move(joined));
                        grew = true;
                    }
                }
        }
        for (const auto& p : pool)
            if (is_congruence(s, p, mode).pass) out.push_back(p);
    }
    sort_by_refinement(out);
    return out;
}

// ---------------------------------------------------------------------------
// Filters
// ---------------------------------------------------------------------------

Verdict is_filter(const Structure& s, Bits f, FilterKind kind) {
    if (!s.has_star()) throw MissingComponent("binary table");
    const Poset& po = s.poset();
    const int n = s.size();
    if (kind == FilterKind::LatticeFilter && !po.is_lattice()) throw MissingComponent("lattice");
    auto in = [&](int x) { return has(f, x); };
    if (!in(s.one())) return Verdict::fail("unit", {s.one()}, "the unit is missing");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (!in(s.star(x, y)) || !in(s.star(y, x))) continue;
            for (int z = 0; z < n; ++z)
                for (int v = 0; v < n; ++v) {
                    if (!in(s.star(z, v)) || !in(s.star(v, z))) continue;
                    if (kind == FilterKind::LatticeFilter) {
                        if (!in(s.star(*po.join(x, z), *po.join(y, v))))
                            return Verdict::fail("join", {x, y, z, v}, "join translate escapes the set");
                        if (!in(s.star(*po.meet(x, z), *po.meet(y, v))))
                            return Verdict::fail("meet", {x, y, z, v}, "meet translate escapes the set");
                        if (!in(s.star(s.star(x, z), s.star(y, v))))
                            return Verdict::fail("star", {x, y, z, v}, "star translate escapes the set");
                    } else {
                        if (!in(s.star(s.star(x, z), s.star(y, v))))
                            return Verdict::fail("F1", {x, y, z, v}, "star translate escapes the set");
                        if (kind != FilterKind::StarFilter && comparable(po, x, z) &&
                            comparable(po, y, v) &&
                            !in(s.star(min_of(po, x, z), min_of(po, y, v))))
                            return Verdict::fail("F2", {x, y, z, v}, "minima translate escapes the set");
                    }
                }
        }
    if (kind == FilterKind::StrongFilter) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (!in(s.star(x, y))) continue;
                bool ok = false;
                for (int z = 0; z < n && !ok; ++z)
                    ok = po.leq(x, z) && po.leq(y, z) && in(s.star(z, y));
                if (!ok)
                    return Verdict::fail("F3", {x, y},
                                         "no common upper bound maps back into the set");
            }
    }
    return Verdict::ok();
}

std::vector<Bits> enumerate_filters(const Structure& s, FilterKind kind) {
    const int n = s.size();
    if (n > 12) throw CapExceeded("filter enumeration beyond 12 elements");
    std::vector<Bits> out;
    for (Bits f = 0; f < (Bits{1} << n); ++f)
        if (is_filter(s, f, kind).pass) out.push_back(f);
    std::sort(out.begin(), out.end(), [](Bits a, Bits b) {
        if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
        return a < b;
    });
    return out;
}

std::vector<Bits> phi(const Structure& s, Bits m) {
    if (!s.has_star()) throw MissingComponent("binary table");
    const int n = s.size();
    std::vector<Bits> rel(n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (has(m, s.star(x, y)) && has(m, s.star(y, x))) rel[x] |= bit(y);
    return rel;
}

std::optional<Partition> relation_as_partition(const std::vector<Bits>& rel) {
    const int n = static_cast<int>(rel.size());
    for (int x = 0; x < n; ++x) {
        if (!has(rel[x], x)) return std::nullopt; // not reflexive
        for (int y : to_indices(rel[x])) {
            if (!has(rel[y], x)) return std::nullopt;       // not symmetric
            if ((rel[y] & ~rel[x]) != 0) return std::nullopt; // not transitive
        }
    }
    std::vector<int> block(n, -1);
    int next = 0;
    for (int x = 0; x < n; ++x) {
        if (block[x] != -1) continue;
        for (int y : to_indices(rel[x])) block[y] = next;
        ++next;
    }
    return Partition(std::move(block));
}

Bits generate_filter(const Structure& s, Bits m) {
    const Poset& po = s.poset();
    if (!po.is_lattice()) throw MissingComponent("lattice");
    if (!s.has_star()) throw MissingComponent("binary table");
    const int n = s.size();
    Bits f = m | bit(s.one());
    bool grew = true;
    while (grew) {
        grew = false;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (!has(f, s.star(x, y)) || !has(f, s.star(y, x))) continue;
                for (int z = 0; z < n; ++z)
                    for (int v = 0; v < n; ++v) {
                        if (!has(f, s.star(z, v)) || !has(f, s.star(v, z))) continue;
                        for (int w : {s.star(*po.join(x, z), *po.join(y, v)),
                                      s.star(*po.meet(x, z), *po.meet(y, v)),
                                      s.star(s.star(x, z), s.star(y, v))}) {
                            if (!has(f, w)) {
                                f |= bit(w);
                                grew = true;
                            }
                        }
                    }
            }
    }
    return f;
}

Partition principal_congruence(const Structure& s,
                               const std::vector<std::pair<int, int>>& pairs) {
    if (!s.has_star()) throw MissingComponent("binary table");
    const Poset& po = s.poset();
    const bool lat = po.is_lattice();
    const int n = s.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    };
    for (auto [a, b] : pairs) unite(a, b);
    bool grew = true;
    while (grew) {
        grew = false;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                if (find(a) != find(b)) continue;
                for (int c = 0; c < n; ++c) {
                    grew |= unite(s.star(a, c), s.star(b, c));
                    grew |= unite(s.star(c, a), s.star(c, b));
                    if (lat) {
                        grew |= unite(*po.join(a, c), *po.join(b, c));
                        grew |= unite(*po.meet(a, c), *po.meet(b, c));
                    }
                }
            }
    }
    std::vector<int> block(n);
    for (int x = 0; x < n; ++x) block[x] = find(x);
    return Partition(std::move(block));
}

// ---------------------------------------------------------------------------
// Correspondence
// ---------------------------------------------------------------------------

Verdict verify_correspondence(const Structure& s) {
    if (!s.has_star()) throw MissingComponent("binary table");
    const bool lat = s.poset().is_lattice();
    const auto congs = enumerate_congruences(
        s, lat ? CongruenceMode::FullSignature : CongruenceMode::MinStable);
    const auto filters = enumerate_filters(
        s, lat ? FilterKind::LatticeFilter : FilterKind::Filter);
    Verdict v = Verdict::ok();
    v.notes.push_back(lat ? "pairing full-signature congruences with lattice filters"
                          : "pairing min-stable congruences with filters");
    v.notes.push_back("congruences: " + std::to_string(congs.size()) +
                      ", filters: " + std::to_string(filters.size()));

    // Φ of every filter must be an equivalence (checked, not assumed)
    for (Bits f : filters)
        if (!relation_as_partition(phi(s, f)))
            return Verdict::fail("phi-not-equivalence", to_indices(f),
                                 "the induced relation of a filter is not an equivalence");

    std::vector<Bits> image;
    for (const auto& theta : congs) {
        const Bits f = unit_class(s, theta);
        if (std::find(filters.begin(), filters.end(), f) == filters.end())
            return Verdict::fail("unit-class-filter", to_indices(f),
                                 "unit class of " + theta.print(s.carrier()) +
                                     " is not a filter of the matching kind");
        const auto rel = phi(s, f);
        for (int x = 0; x < s.size(); ++x)
            if (rel[x] != theta.class_of(x)) {
                const Bits diff = rel[x] ^ theta.class_of(x);
                return Verdict::fail("phi-roundtrip", {x, lowest(diff)},
                                     "the unit class of " + theta.print(s.carrier()) +
                                         " induces a different relation");
            }
        image.push_back(f);
    }
    auto sorted = image;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return Verdict::fail("bijection", {}, "two congruences share a unit class");
    if (sorted.size() != filters.size())
        return Verdict::fail("bijection", {},
                             "some filter is not the unit class of any congruence");
    for (size_t i = 0; i < congs.size(); ++i)
        for (size_t j = 0; j < congs.size(); ++j) {
            const bool finer = congs[i].refines(congs[j]);
            const bool below = (image[i] & ~image[j]) == 0;
            if (finer != below)
                return Verdict::fail("order-isomorphism", {},
                                     congs[i].print(s.carrier()) + " vs " +
                                         congs[j].print(s.carrier()) +
                                         ": refinement and inclusion disagree");
        }
    if (check(s, System::StrongSkewHilbert).pass) {
        for (const auto& theta : congs)
            if (!is_strong_congruence(s, theta).pass)
                return Verdict::fail("strong-congruence", {},
                                     theta.print(s.carrier()) + " should be strong here");
        for (Bits f : filters)
            if (!is_filter(s, f, FilterKind::StrongFilter).pass)
                return Verdict::fail("strong-filter", to_indices(f),
                                     "every filter should be strong here");
        v.notes.push_back("all congruences and filters are strong");
    }
    return v;
}

// ---------------------------------------------------------------------------
// Deductive systems and filter consequences
// ---------------------------------------------------------------------------

Verdict is_deductive_system(const Structure& s, Bits d) {
    if (!s.has_star()) throw MissingComponent("binary table");
    const int n = s.size();
    Verdict v = Verdict::ok();
    if (!has(d, s.one())) return Verdict::fail("unit", {s.one()}, "the unit is missing");
    for (int a = 0; a < n; ++a) {
        if (!has(d, a)) continue;
        for (int b = 0; b < n; ++b)
            if (has(d, s.star(a, b)) && !has(d, b))
                return Verdict::fail("modus-ponens", {a, b},
                                     "detachment leads outside the set");
    }
    bool pointwise = true;
    std::vector<int> w;
    for (int m1 = 0; m1 < n && pointwise; ++m1) {
        if (!has(d, m1)) continue;
        for (int m2 = 0; m2 < n && pointwise; ++m2) {
            if (!has(d, m2)) continue;
            for (int x = 0; x < n; ++x)
                if (!has(d, s.star(s.star(m1, s.star(m2, x)), x))) {
                    pointwise = false;
                    w = {m1, m2, x};
                    break;
                }
        }
    }
    v.notes.push_back(pointwise
                          ? "pointwise closure (D*(D*x))*x stays inside the set"
                          : "pointwise closure (D*(D*x))*x fails at " +
                                render_witness(s.carrier(), w));
    return v;
}

Verdict filter_section_containments(const Structure& s, Bits f) {
    if (!s.has_star()) throw MissingComponent("binary table");
    const Poset& po = s.poset();
    const int n = s.size();
    for (int c = 0; c < n; ++c)
        for (int x = 0; x < n; ++x) {
            if (!has(f, x)) continue;
            if (auto m = po.meet(x, c); m && !has(f, s.star(c, *m)))
                return Verdict::fail("meet-translate", {x, c},
                                     "c*(F∧c) leaves the filter");
            for (int y = 0; y < n; ++y)
                if (has(f, y) && !has(f, s.star(s.star(x, s.star(y, c)), c)))
                    return Verdict::fail("double-star", {x, y, c},
                                         "(F*(F*c))*c leaves the filter");
        }
    return Verdict::ok();
}

// ---------------------------------------------------------------------------
// Helpers
// ---------------------------------------------------------------------------

Bits unit_class(const Structure& s, const Partition& theta) {
    return theta.class_of(s.one());
}

std::string render_set(const Carrier& c, Bits f) {
    std::string out = "{";
    bool first = true;
    for (int x : to_indices(f)) {
        if (!first) out += ',';
        first = false;
        out += c.label(x);
    }
    out += '}';
    return out;
}

Bits parse_set(const Carrier& c, const std::string& text) {
    std::string body = trim(text);
    if (body.size() >= 2 && body.front() == '{' && body.back() == '}')
        body = body.substr(1, body.size() - 2);
    Bits out = 0;
    std::stringstream ss(body);
    std::string label;
    while (std::getline(ss, label, ',')) {
        label = trim(label);
        if (label.empty()) continue;
        out |= bit(c.require(label));
    }
    return out;
}

} // namespace ordalg
