#include "ordalg/search.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "ordalg/errors.hpp"

namespace ordalg {

namespace {

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

bool is_star_system(System sys) {
    switch (sys) {
        case System::Hilbert:
        case System::SkewHilbert:
        case System::StrongSkewHilbert:
        case System::LatticeSkewHilbert:
        case System::SectionallyPcPoset:
        case System::StronglySectionallyPcPoset:
        case System::RelativelyPcPoset:
        case System::SectionallyPcLattice:
        case System::Oia:
        case System::GomlAsSha:
            return true;
        default:
            return false;
    }
}

// systems whose axioms contain the cone equation, so the per-cell candidate
// filter below cannot lose models
bool has_cone_axiom(System sys) {
    switch (sys) {
        case System::SkewHilbert:
        case System::StrongSkewHilbert:
        case System::LatticeSkewHilbert:
        case System::SectionallyPcPoset:
        case System::StronglySectionallyPcPoset:
        case System::GomlAsSha:
            return true;
        default:
            return false;
    }
}

bool is_complement_system(System sys) {
    return sys == System::Orthoposet || sys == System::BooleanPoset;
}

bool upper_section_system(System sys) {
    return sys == System::Psb || sys == System::LatticeSai ||
           sys == System::OmJoinSemilattice;
}

bool lower_section_system(System sys) {
    return sys == System::SectionalOml || sys == System::Goml;
}

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Carrier gen_carrier(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i + 1 < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
    labels.push_back("1");
    return Carrier(std::move(labels));
}

// ---------------------------------------------------------------------------
// Canonical forms
// ---------------------------------------------------------------------------

// all permutations fixing `fixed`, as old-index -> new-index maps
std::vector<std::vector<int>> perms_fixing(int n, int fixed) {
    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
        if (i != fixed) rest.push_back(i);
    std::vector<int> values = rest;
    std::vector<std::vector<int>> out;
    do {
        std::vector<int> perm(n);
        perm[fixed] = fixed;
        for (size_t k = 0; k < rest.size(); ++k) perm[rest[k]] = values[k];
        out.push_back(perm);
    } while (std::next_permutation(values.begin(), values.end()));
    return out;
}

std::string encode_under(const Structure& s, const std::vector<int>& perm) {
    const int n = s.size();
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    std::string out;
    auto push = [&](int v) { out += static_cast<char>('0' + v + 1); }; // -1 -> '0'
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) push(s.poset().leq(inv[i], inv[j]) ? 1 : 0);
    out += '|';
    if (s.has_star())
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) push(perm[s.star(inv[i], inv[j])]);
    out += '|';
    if (s.has_comp())
        for (int i = 0; i < n; ++i) push(perm[s.comp(inv[i])]);
    out += '|';
    if (s.has_sectionals())
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const int v = s.sectionals()[inv[i]][inv[j]];
                push(v < 0 ? -1 : perm[v]);
            }
    return out;
}

// canonical key and |Aut| in one pass
std::pair<std::string, long long> canonical(const Structure& s) {
    const auto perms = perms_fixing(s.size(), s.one());
    std::vector<int> ident(s.size());
    for (int i = 0; i < s.size(); ++i) ident[i] = i;
    const std::string id = encode_under(s, ident);
    std::string best = id;
    long long aut = 0;
    for (const auto& p : perms) {
        std::string key = encode_under(s, p);
        if (key == id) ++aut;
        if (key < best) best = key;
    }
    return {best, aut};
}

// ---------------------------------------------------------------------------
// Order enumeration
// ---------------------------------------------------------------------------

std::string poset_key(const Poset& po) {
    const int n = po.size();
    const int top = *po.top();
    std::string best;
    for (const auto& perm : perms_fixing(n, top)) {
        std::vector<int> inv(n);
        for (int i = 0; i < n; ++i) inv[perm[i]] = i;
        std::string key;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) key += po.leq(inv[i], inv[j]) ? '1' : '0';
        if (best.empty() || key < best) best = key;
    }
    return best;
}

} // namespace

std::vector<Poset> posets_with_top(int n) {
    std::vector<Poset> out;
    if (n <= 0) return out;
    if (n == 1) {
        out.push_back(Poset::from_leq(1, {{true}}));
        return out;
    }
    // strict pairs among the n-1 non-top elements, compatible with index order
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i + 1 < n; ++i)
        for (int j = i + 1; j + 1 < n; ++j) slots.emplace_back(i, j);
    std::set<std::string> seen;
    for (Bits mask = 0; mask < (Bits{1} << slots.size()); ++mask) {
        std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
        for (int i = 0; i < n; ++i) {
            leq[i][i] = true;
            leq[i][n - 1] = true;
        }
        for (size_t k = 0; k < slots.size(); ++k)
            if (has(mask, static_cast<int>(k))) leq[slots[k].first][slots[k].second] = true;
        // keep only transitively closed relations (each closure shows up as
        // its own mask, so nothing is lost)
        bool closed = true;
        for (int a = 0; a < n && closed; ++a)
            for (int b = 0; b < n && closed; ++b) {
                if (!leq[a][b]) continue;
                for (int c = 0; c < n; ++c)
                    if (leq[b][c] && !leq[a][c]) {
                        closed = false;
                        break;
                    }
            }
        if (!closed) continue;
        Poset po = Poset::from_leq(n, leq);
        if (seen.insert(poset_key(po)).second) out.push_back(std::move(po));
    }
    return out;
}

namespace {

// ---------------------------------------------------------------------------
// Table fill (binary-table systems)
// ---------------------------------------------------------------------------

// every candidate value keeps "x <= y iff x*y = 1" and "y <= x*y" true, and
// the unit row is forced to the identity; systems with the cone equation
// additionally restrict each cell to the cone-equation solutions
void fill_tables(const Poset& po, bool cone_filter,
                 const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
    const int n = po.size();
    const int one = *po.top();
    std::vector<std::vector<int>> table(n, std::vector<int>(n, -1));
    std::vector<std::pair<int, int>> cells;
    std::vector<std::vector<int>> cands;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (po.leq(x, y)) {
                table[x][y] = one;
                continue;
            }
            cells.emplace_back(x, y);
            std::vector<int> cand;
            for (int v = 0; v < n; ++v) {
                if (!po.leq(y, v) || v == one) continue;
                if (x == one && v != y) continue;
                if (cone_filter &&
                    (po.lower(po.up(x) & po.up(y)) & po.down(v)) != po.down(y))
                    continue;
                cand.push_back(v);
            }
            cands.push_back(std::move(cand));
        }
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == cells.size()) {
            emit(table);
            return;
        }
        auto [x, y] = cells[k];
        for (int v : cands[k]) {
            table[x][y] = v;
            rec(k + 1);
        }
        table[x][y] = -1;
    };
    rec(0);
}

void collect_star_models(System sys, int n, const std::function<void(Structure&&)>& sink) {
    const bool cone_filter = has_cone_axiom(sys);
    const Carrier c = gen_carrier(n);
    for (const Poset& po : posets_with_top(n)) {
        fill_tables(po, cone_filter, [&](const std::vector<std::vector<int>>& t) {
            Structure s(c, po, t, *po.top());
            if (check(s, sys).pass) sink(std::move(s));
        });
    }
}

// ---------------------------------------------------------------------------
// Complement fill
// ---------------------------------------------------------------------------

void collect_complement_models(System sys, int n, const std::function<void(Structure&&)>& sink) {
    const Carrier c = gen_carrier(n);
    for (const Poset& po : posets_with_top(n)) {
        if (!po.bottom()) continue;
        std::vector<int> comp(n, -1);
        std::function<void(int)> rec = [&](int x) {
            if (x == n) {
                Structure s(c, po, {}, *po.top(), comp);
                if (check(s, sys).pass) sink(std::move(s));
                return;
            }
            if (comp[x] != -1) {
                rec(x + 1);
                return;
            }
            for (int y = x; y < n; ++y) {
                if (comp[y] != -1) continue;
                comp[x] = y;
                comp[y] = x;
                rec(x + 1);
                comp[x] = comp[y] = -1;
            }
        };
        rec(0);
    }
}

// ---------------------------------------------------------------------------
// Section-map fill
// ---------------------------------------------------------------------------

void collect_sectional_models(System sys, int n, const std::function<void(Structure&&)>& sink) {
    const Carrier c = gen_carrier(n);
    const bool total = sys == System::StrongPsb;
    const bool involutive = sys == System::SectionalOml || sys == System::Goml ||
                            sys == System::OmJoinSemilattice || sys == System::LatticeSai;
    for (const Poset& po : posets_with_top(n)) {
        // cheap order prefilters straight from the axiom bundles
        if (lower_section_system(sys) && (!po.bottom() || !po.is_lattice())) continue;
        if (sys == System::LatticeSai && (!po.bottom() || !po.is_lattice())) continue;
        if (sys == System::OmJoinSemilattice) {
            std::pair<int, int> w;
            if (!po.is_join_semilattice(w)) continue;
        }
        std::vector<std::pair<int, int>> slots; // (section base p, argument x)
        for (int p = 0; p < n; ++p) {
            const Bits dom = total ? full_mask(n)
                                   : (lower_section_system(sys) ? po.down(p) : po.up(p));
            for (int x : to_indices(dom)) slots.emplace_back(p, x);
        }
        std::vector<std::vector<int>> sec(n, std::vector<int>(n, -1));
        std::function<void(size_t)> rec = [&](size_t k) {
            if (k == slots.size()) {
                Structure s(c, po, {}, *po.top());
                s.set_sectionals(sec);
                if (check(s, sys).pass) sink(std::move(s));
                return;
            }
            auto [p, x] = slots[k];
            const Bits range = lower_section_system(sys) ? po.down(p) : po.up(p);
            for (int v : to_indices(range)) {
                if (involutive && sec[p][v] != -1 && sec[p][v] != x) continue;
                sec[p][x] = v;
                rec(k + 1);
            }
            sec[p][x] = -1;
        };
        rec(0);
    }
}

// ---------------------------------------------------------------------------
// Shared driver
// ---------------------------------------------------------------------------

int family_cap(System sys) {
    if (is_star_system(sys))
        return has_cone_axiom(sys) ? kSearchCapUnrestricted : kSearchCapGeneralTable;
    if (is_complement_system(sys)) return kSearchCapComplement;
    if (sys == System::StrongPsb) return kSearchCapSectionalTotal;
    return kSearchCapSectional;
}

void collect_models(System sys, int n, const std::function<void(Structure&&)>& sink) {
    if (n < 1) throw Error("model size must be positive");
    if (n > family_cap(sys))
        throw CapExceeded("enumeration of " + std::string(system_name(sys)) + " at size " +
                          std::to_string(n));
    if (is_star_system(sys)) collect_star_models(sys, n, sink);
    else if (is_complement_system(sys)) collect_complement_models(sys, n, sink);
    else collect_sectional_models(sys, n, sink);
}

} // namespace

std::vector<Structure> enumerate_models(System sys, int n) {
    std::map<std::string, Structure> reps;
    collect_models(sys, n, [&](Structure&& s) {
        auto [key, aut] = canonical(s);
        (void)aut;
        reps.emplace(std::move(key), std::move(s));
    });
    std::vector<Structure> out;
    out.reserve(reps.size());
    for (auto& [key, s] : reps) out.push_back(std::move(s));
    return out;
}

CountResult count_models(System sys, int n) {
    CountResult r;
    std::set<std::string> seen;
    collect_models(sys, n, [&](Structure&& s) {
        auto [key, aut] = canonical(s);
        if (seen.insert(key).second) {
            ++r.iso;
            r.labeled += factorial(n - 1) / aut;
        }
    });
    return r;
}

std::vector<Structure> enumerate_models_on(const Carrier& c, const Poset& po, System sys) {
    if (!is_star_system(sys))
        throw Error("fixed-order enumeration needs a binary-table system");
    const int cap = has_cone_axiom(sys) ? kSearchCapFixedOrder : kSearchCapGeneralTable;
    if (po.size() > cap)
        throw CapExceeded("table fill beyond " + std::to_string(cap) + " elements");
    if (!po.top()) throw NoTop();
    std::vector<Structure> out;
    fill_tables(po, has_cone_axiom(sys), [&](const std::vector<std::vector<int>>& t) {
        Structure s(c, po, t, *po.top());
        if (check(s, sys).pass) out.push_back(std::move(s));
    });
    return out;
}

CountResult count_models_tablefirst(System sys, int n) {
    if (!is_star_system(sys))
        throw Error("the table-first strategy needs a binary-table system");
    if (n > kSearchCapTableFirst)
        throw CapExceeded("table-first enumeration beyond " +
                          std::to_string(kSearchCapTableFirst) + " elements");
    const Carrier c = gen_carrier(n);
    const int one = n - 1;
    std::vector<std::pair<int, int>> cells;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y) cells.emplace_back(x, y); // the diagonal is forced to 1
    CountResult r;
    std::set<std::string> seen;
    std::vector<std::vector<int>> table(n, std::vector<int>(n, one));
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == cells.size()) {
            try {
                Structure s(c, induced_poset(table, one), table, one);
                if (!check(s, sys).pass) return;
                auto [key, aut] = canonical(s);
                (void)aut;
                ++r.labeled;
                seen.insert(key);
            } catch (const Error&) {
                // tables whose induced relation is not an order with top 1
                // cannot satisfy any of these systems
            }
            return;
        }
        auto [x, y] = cells[k];
        for (int v = 0; v < n; ++v) {
            table[x][y] = v;
            rec(k + 1);
        }
        table[x][y] = one;
    };
    rec(0);
    r.iso = static_cast<long long>(seen.size());
    return r;
}

std::optional<Structure> find_counterexample(System passes, System fails, int max_n) {
    for (int n = 1; n <= max_n; ++n)
        for (const Structure& s : enumerate_models(passes, n))
            if (!check(s, fails).pass) return s;
    return std::nullopt;
}

long long automorphism_count(const Structure& s) { return canonical(s).second; }

} // namespace ordalg
