#include "ordalg/axioms.hpp"

#include <array>

namespace ordalg {
namespace {

struct NameEntry {
    System sys;
    const char* name;
};

constexpr std::array<NameEntry, kSystemCount> kNames{{
    {System::Hilbert, "hilbert"},
    {System::SkewHilbert, "skew-hilbert"},
    {System::StrongSkewHilbert, "strong-skew-hilbert"},
    {System::LatticeSkewHilbert, "lattice-skew-hilbert"},
    {System::SectionallyPcPoset, "sectionally-pc-poset"},
    {System::StronglySectionallyPcPoset, "strongly-sectionally-pc-poset"},
    {System::RelativelyPcPoset, "relatively-pc-poset"},
    {System::SectionallyPcLattice, "sectionally-pc-lattice"},
    {System::Orthoposet, "orthoposet"},
    {System::BooleanPoset, "boolean-poset"},
    {System::Oia, "oia"},
    {System::OmJoinSemilattice, "om-join-semilattice"},
    {System::SectionalOml, "sectional-oml"},
    {System::Goml, "goml"},
    {System::Psb, "psb"},
    {System::StrongPsb, "strong-psb"},
    {System::LatticeSai, "lattice-sai"},
    {System::GomlAsSha, "goml-as-sha"},
}};

} // namespace

std::vector<System> all_systems() {
    std::vector<System> out;
    for (const auto& e : kNames) out.push_back(e.sys);
    return out;
}

std::string system_name(System sys) {
    for (const auto& e : kNames)
        if (e.sys == sys) return e.name;
    return "?";
}

std::optional<System> system_from_name(std::string_view name) {
    for (const auto& e : kNames)
        if (name == e.name) return e.sys;
    return std::nullopt;
}

std::vector<std::vector<int>> upper_sectionals(const Structure& s, bool total) {
    if (s.has_sectionals()) return s.sectionals();
    if (!s.has_star()) throw MissingComponent("section maps (none attached, no binary table)");
    int n = s.size();
    std::vector<std::vector<int>> sec(n, std::vector<int>(n, -1));
    for (int p = 0; p < n; ++p)
        for (int x = 0; x < n; ++x)
            if (total || s.leq(p, x)) sec[p][x] = s.star(x, p);
    return sec;
}

std::vector<std::vector<int>> lower_sectionals(const Structure& s) {
    if (s.has_sectionals()) return s.sectionals();
    if (!s.has_comp()) throw MissingComponent("section maps (none attached, no complement table)");
    int n = s.size();
    std::vector<std::vector<int>> sec(n, std::vector<int>(n, -1));
    for (int p = 0; p < n; ++p)
        for (int x = 0; x < n; ++x) {
            if (!s.leq(x, p)) continue;
            if (auto m = s.meet(s.comp(x), p)) sec[p][x] = *m;
        }
    return sec;
}

namespace {

// Convenience wrappers used by the clause bodies.  Every lambda captures a
// copy of this (cheap: pointers/ints) so a Clause stays valid on its own.
struct Ctx {
    const Structure* s;
    int n;
    int one;

    int st(int x, int y) const { return s->star(x, y); }
    bool leq(int x, int y) const { return s->leq(x, y); }
    const Poset& po() const { return s->poset(); }
    // set equality L(U(x,y) ∪ {z}) == L(y)
    bool cone_eq(int x, int y, int z) const {
        Bits low = po().lower(po().up(x) & po().up(y)) & po().down(z);
        return low == po().down(y);
    }
};

using Tup = std::vector<int>;

Clause mk(std::string name, int arity, std::function<bool(const Tup&)> f) {
    return Clause{std::move(name), arity, std::move(f)};
}

void require_star(const Structure& s) {
    if (!s.has_star()) throw MissingComponent("binary table");
}

void require_comp(const Structure& s) {
    if (!s.has_comp()) throw MissingComponent("complement table");
}

void add_hilbert(std::vector<Clause>& cl, Ctx c) {
    cl.push_back(mk("H1", 1, [c](const Tup& t) { return c.st(t[0], t[0]) == c.one; }));
    cl.push_back(mk("H2", 2, [c](const Tup& t) {
        return !(c.st(t[0], t[1]) == c.one && c.st(t[1], t[0]) == c.one && t[0] != t[1]);
    }));
    cl.push_back(mk("H3", 3, [c](const Tup& t) {
        return !(c.st(t[0], t[1]) == c.one && c.st(t[1], t[2]) == c.one &&
                 c.st(t[0], t[2]) != c.one);
    }));
    cl.push_back(mk("H4", 2, [c](const Tup& t) { return c.st(t[0], c.st(t[1], t[0])) == c.one; }));
    cl.push_back(mk("H5", 3, [c](const Tup& t) {
        int x = t[0], y = t[1], z = t[2];
        return c.st(c.st(x, c.st(y, z)), c.st(c.st(x, y), c.st(x, z))) == c.one;
    }));
}

Clause s1_clause(Ctx c) {
    return mk("S1", 2, [c](const Tup& t) {
        return (c.st(t[0], t[1]) == c.one) == c.leq(t[0], t[1]);
    });
}

Clause s2_clause(Ctx c) {
    return mk("S2", 2, [c](const Tup& t) {
        int x = t[0], y = t[1];
        if (c.st(y, x) != c.one) return true;
        return c.st(x, c.st(c.st(x, y), y)) == c.one;
    });
}

Clause s2p_clause(Ctx c) {
    return mk("S2'", 2, [c](const Tup& t) {
        int x = t[0], y = t[1];
        return c.st(x, c.st(c.st(x, y), y)) == c.one;
    });
}

Clause s3_clause(Ctx c) {
    return mk("S3", 3, [c](const Tup& t) {
        int x = t[0], y = t[1], z = t[2];
        if (c.st(x, y) != c.one) return true;
        return c.st(c.st(y, z), c.st(x, z)) == c.one;
    });
}

Clause s4_clause(Ctx c) {
    return mk("S4", 2,
              [c](const Tup& t) { return c.cone_eq(t[0], t[1], c.st(t[0], t[1])); });
}

Clause lattice_clause(Ctx c) {
    return mk("lattice", 2, [c](const Tup& t) {
        return c.po().meet(t[0], t[1]).has_value() && c.po().join(t[0], t[1]).has_value();
    });
}

void add_lattice_sha(std::vector<Clause>& cl, Ctx c) {
    cl.push_back(lattice_clause(c));
    cl.push_back(mk("L1", 2, [c](const Tup& t) {
        auto j = c.po().join(t[0], t[1]);
        return !j || c.st(t[0], *j) == c.one;
    }));
    auto l2 = s2p_clause(c);
    l2.name = "L2";
    cl.push_back(std::move(l2));
    cl.push_back(mk("L3", 3, [c](const Tup& t) {
        auto j = c.po().join(t[0], t[1]);
        return !j || c.st(c.st(*j, t[2]), c.st(t[0], t[2])) == c.one;
    }));
    cl.push_back(mk("L4", 2, [c](const Tup& t) {
        auto j = c.po().join(t[0], t[1]);
        if (!j) return true;
        auto m = c.po().meet(*j, c.st(t[0], t[1]));
        return m && *m == t[1];
    }));
}

void add_spc_poset(std::vector<Clause>& cl, Ctx c) {
    cl.push_back(mk("P1", 1, [c](const Tup& t) {
        return c.st(t[0], t[0]) == c.one && c.st(t[0], c.one) == c.one;
    }));
    cl.push_back(mk("P2", 2, [c](const Tup& t) {
        return !(c.st(t[0], t[1]) == c.one && c.st(t[1], t[0]) == c.one && t[0] != t[1]);
    }));
    cl.push_back(mk("P3", 3, [c](const Tup& t) {
        return !(c.st(t[0], t[1]) == c.one && c.st(t[1], t[2]) == c.one &&
                 c.st(t[0], t[2]) != c.one);
    }));
    auto p4 = s4_clause(c);
    p4.name = "P4";
    cl.push_back(std::move(p4));
    cl.push_back(mk("P5", 3, [c](const Tup& t) {
        int x = t[0], y = t[1], z = t[2];
        if (!c.cone_eq(x, y, z)) return true;
        return c.st(z, c.st(x, y)) == c.one;
    }));
}

// Section-map clause bundle shared by the sectional tags.  `in_dom(p, x)`
// says where the map must be defined; `zero_of(p)` is the expected least
// element of the section (-1 = no complementation clauses wanted).
struct SectionSpec {
    std::function<bool(int, int)> in_dom;
    bool want_complement = false;
    bool want_orthomodular = false;
    std::function<int(int)> sect_bottom; // least element of section at p
    std::function<int(int)> sect_top;    // greatest element of section at p
};

void add_section_clauses(std::vector<Clause>& cl, Ctx c,
                         const std::vector<std::vector<int>>& sec, const SectionSpec& sp,
                         bool meets_inside_section) {
    // sec is captured by value: Clause objects must not dangle.
    cl.push_back(mk("section", 2, [c, sec, sp](const Tup& t) {
        int p = t[0], x = t[1];
        bool dom = sp.in_dom(p, x);
        if ((sec[p][x] >= 0) != dom) return false;
        if (!dom) return true;
        return sp.in_dom(p, sec[p][x]);
    }));
    cl.push_back(mk("involution", 2, [c, sec, sp](const Tup& t) {
        int p = t[0], x = t[1];
        if (!sp.in_dom(p, x)) return true;
        int y = sec[p][x];
        return y >= 0 && sec[p][y] == x;
    }));
    cl.push_back(mk("antitone", 3, [c, sec, sp](const Tup& t) {
        int p = t[0], x = t[1], y = t[2];
        if (!sp.in_dom(p, x) || !sp.in_dom(p, y) || !c.leq(x, y)) return true;
        return c.leq(sec[p][y], sec[p][x]);
    }));
    // Meet of two section elements, inside the section when asked for
    // (join-semilattice sections may lack global meets).
    auto sect_meet = [c, sp, meets_inside_section](int p, int x, int y) -> std::optional<int> {
        if (!meets_inside_section) return c.po().meet(x, y);
        Bits dom = 0;
        for (int z = 0; z < c.n; ++z)
            if (sp.in_dom(p, z)) dom |= bit(z);
        return c.po().greatest(dom & c.po().down(x) & c.po().down(y));
    };
    if (meets_inside_section) {
        cl.push_back(mk("section-lattice", 3, [c, sp, sect_meet](const Tup& t) {
            int p = t[0], x = t[1], y = t[2];
            if (!sp.in_dom(p, x) || !sp.in_dom(p, y)) return true;
            return c.po().join(x, y).has_value() && sect_meet(p, x, y).has_value();
        }));
    }
    if (sp.want_complement) {
        cl.push_back(mk("complementation", 2, [c, sec, sp, sect_meet](const Tup& t) {
            int p = t[0], x = t[1];
            if (!sp.in_dom(p, x)) return true;
            auto m = sect_meet(p, x, sec[p][x]);
            auto j = c.po().join(x, sec[p][x]);
            return m && *m == sp.sect_bottom(p) && j && *j == sp.sect_top(p);
        }));
    }
    if (sp.want_orthomodular) {
        cl.push_back(mk("orthomodular", 3, [c, sec, sp, sect_meet](const Tup& t) {
            int p = t[0], x = t[1], y = t[2];
            if (!sp.in_dom(p, x) || !sp.in_dom(p, y) || !c.leq(x, y)) return true;
            auto m = sect_meet(p, y, sec[p][x]);
            if (!m) return false;
            auto j = c.po().join(x, *m);
            return j && *j == y;
        }));
    }
}

} // namespace

std::vector<Clause> clauses(const Structure& s, System sys) {
    Ctx c{&s, s.size(), s.one()};
    std::vector<Clause> cl;
    switch (sys) {
    case System::Hilbert:
        require_star(s);
        add_hilbert(cl, c);
        break;
    case System::SkewHilbert:
        require_star(s);
        cl.push_back(s1_clause(c));
        cl.push_back(s2_clause(c));
        cl.push_back(s3_clause(c));
        cl.push_back(s4_clause(c));
        break;
    case System::StrongSkewHilbert:
        require_star(s);
        cl.push_back(s1_clause(c));
        cl.push_back(s2p_clause(c));
        cl.push_back(s3_clause(c));
        cl.push_back(s4_clause(c));
        break;
    case System::LatticeSkewHilbert:
        require_star(s);
        add_lattice_sha(cl, c);
        break;
    case System::SectionallyPcPoset:
        require_star(s);
        add_spc_poset(cl, c);
        break;
    case System::StronglySectionallyPcPoset:
        require_star(s);
        add_spc_poset(cl, c);
        cl.push_back(mk("vi", 2, [c](const Tup& t) {
            return c.leq(t[0], c.st(c.st(t[0], t[1]), t[1]));
        }));
        break;
    case System::RelativelyPcPoset:
        require_star(s);
        cl.push_back(mk("R1", 2, [c](const Tup& t) {
            int x = t[0], y = t[1];
            Bits l = c.po().down(x) & c.po().down(c.st(x, y));
            return (l & ~c.po().down(y)) == 0;
        }));
        cl.push_back(mk("R2", 3, [c](const Tup& t) {
            int x = t[0], y = t[1], z = t[2];
            Bits l = c.po().down(x) & c.po().down(z);
            if ((l & ~c.po().down(y)) != 0) return true;
            return c.leq(z, c.st(x, y));
        }));
        break;
    case System::SectionallyPcLattice:
        require_star(s);
        cl.push_back(lattice_clause(c));
        cl.push_back(mk("P-lat-1", 3, [c](const Tup& t) {
            int x = t[0], y = t[1], z = t[2];
            auto xy = c.po().join(x, y), zy = c.po().join(z, y);
            if (!xy || !zy) return true;
            auto m = c.po().meet(*xy, *zy);
            return m && c.leq(*zy, c.st(x, *m));
        }));
        cl.push_back(mk("P-lat-2", 2, [c](const Tup& t) {
            int x = t[0], y = t[1];
            auto j = c.po().join(x, y);
            if (!j) return true;
            auto m = c.po().meet(*j, c.st(x, y));
            return m && *m == t[1];
        }));
        break;
    case System::Orthoposet:
    case System::BooleanPoset: {
        require_comp(s);
        cl.push_back(mk("bounded", 0, [c](const Tup&) { return c.s->zero().has_value(); }));
        cl.push_back(mk("involution", 1, [c](const Tup& t) {
            return c.s->comp(c.s->comp(t[0])) == t[0];
        }));
        cl.push_back(mk("antitone", 2, [c](const Tup& t) {
            if (!c.leq(t[0], t[1])) return true;
            return c.leq(c.s->comp(t[1]), c.s->comp(t[0]));
        }));
        cl.push_back(mk("complementation", 1, [c](const Tup& t) {
            auto z = c.s->zero();
            if (!z) return false;
            int x = t[0], xc = c.s->comp(t[0]);
            return (c.po().down(x) & c.po().down(xc)) == bit(*z) &&
                   (c.po().up(x) & c.po().up(xc)) == bit(c.one);
        }));
        if (sys == System::BooleanPoset) {
            cl.push_back(mk("LU", 3, [c](const Tup& t) {
                int x = t[0], y = t[1], z = t[2];
                Bits lhs = c.po().upper(c.po().down(x) & c.po().down(y)) & c.po().up(z);
                Bits uni = (c.po().up(x) & c.po().up(z)) | (c.po().up(y) & c.po().up(z));
                Bits rhs = c.po().upper(c.po().lower(uni));
                return lhs == rhs;
            }));
        }
        break;
    }
    case System::Oia: {
        require_star(s);
        // The binary table is read as the product of an implication algebra.
        auto d = [c](int x, int y) { return c.st(x, y); };
        cl.push_back(mk("O1", 1, [c, d](const Tup& t) { return d(t[0], t[0]) == c.one; }));
        cl.push_back(mk("O2", 2, [c, d](const Tup& t) {
            return d(t[0], d(t[1], t[0])) == c.one;
        }));
        cl.push_back(mk("O3", 2, [d](const Tup& t) {
            return d(d(t[0], t[1]), t[0]) == t[0];
        }));
        cl.push_back(mk("O4", 2, [d](const Tup& t) {
            return d(d(t[0], t[1]), t[1]) == d(d(t[1], t[0]), t[0]);
        }));
        cl.push_back(mk("O5", 3, [c, d](const Tup& t) {
            int x = t[0], y = t[1], z = t[2];
            return d(d(d(d(x, y), y), z), d(x, z)) == c.one;
        }));
        cl.push_back(mk("O6", 3, [d](const Tup& t) {
            int x = t[0], y = t[1], z = t[2];
            int r = d(d(d(d(x, y), y), z), z);
            int l = d(d(d(d(r, z), x), x), z);
            l = d(d(l, x), x);
            return l == r;
        }));
        break;
    }
    case System::OmJoinSemilattice: {
        auto sec = upper_sectionals(s);
        cl.push_back(mk("join-semilattice", 2, [c](const Tup& t) {
            return c.po().join(t[0], t[1]).has_value();
        }));
        SectionSpec sp;
        sp.in_dom = [c](int p, int x) { return c.leq(p, x); };
        sp.want_complement = true;
        sp.want_orthomodular = true;
        sp.sect_bottom = [](int p) { return p; };
        sp.sect_top = [c](int) { return c.one; };
        add_section_clauses(cl, c, sec, sp, /*meets_inside_section=*/true);
        break;
    }
    case System::SectionalOml:
    case System::Goml: {
        auto sec = lower_sectionals(s);
        cl.push_back(lattice_clause(c));
        cl.push_back(mk("bounded", 0, [c](const Tup&) { return c.s->zero().has_value(); }));
        SectionSpec sp;
        sp.in_dom = [c](int p, int x) { return c.leq(x, p); };
        sp.want_complement = true;
        sp.want_orthomodular = true;
        sp.sect_bottom = [c](int) { return c.s->zero() ? *c.s->zero() : -1; };
        sp.sect_top = [](int p) { return p; };
        add_section_clauses(cl, c, sec, sp, /*meets_inside_section=*/false);
        if (sys == System::Goml) {
            cl.push_back(mk("goml", 3, [c, sec](const Tup& t) {
                int x = t[0], a = t[1], b = t[2];
                auto xa = c.po().meet(x, a);
                auto ab = c.po().join(a, b);
                if (!xa || !ab) return true;
                int lhs = sec[a][*xa];
                int r1 = sec[*ab][*xa];
                if (lhs < 0 || r1 < 0) return false;
                auto rhs = c.po().meet(r1, a);
                return rhs && *rhs == lhs;
            }));
        }
        break;
    }
    case System::Psb:
    case System::StrongPsb: {
        bool strong = sys == System::StrongPsb;
        auto sec = upper_sectionals(s, /*total=*/strong);
        if (strong) {
            cl.push_back(mk("section", 2, [sec](const Tup& t) {
                return sec[t[0]][t[1]] >= 0;
            }));
            cl.push_back(mk("BP1", 3, [c, sec](const Tup& t) {
                int p = t[0], x = t[1], y = t[2];
                if (!c.leq(x, y)) return true;
                return c.leq(sec[p][y], sec[p][x]);
            }));
            cl.push_back(mk("BP2", 2, [c, sec](const Tup& t) {
                int p = t[0], x = t[1];
                int xp = sec[p][x];
                return xp >= 0 && sec[p][xp] >= 0 && c.leq(x, sec[p][xp]);
            }));
        } else {
            cl.push_back(mk("section", 2, [c, sec](const Tup& t) {
                int p = t[0], x = t[1];
                bool dom = c.leq(p, x);
                if ((sec[p][x] >= 0) != dom) return false;
                return !dom || c.leq(p, sec[p][x]);
            }));
            cl.push_back(mk("BP1", 3, [c, sec](const Tup& t) {
                int p = t[0], x = t[1], y = t[2];
                if (!c.leq(p, x) || !c.leq(p, y) || !c.leq(x, y)) return true;
                return c.leq(sec[p][y], sec[p][x]);
            }));
            cl.push_back(mk("BP2", 2, [c, sec](const Tup& t) {
                int p = t[0], x = t[1];
                if (!c.leq(p, x)) return true;
                int xp = sec[p][x];
                return xp >= 0 && sec[p][xp] >= 0 && c.leq(x, sec[p][xp]);
            }));
        }
        cl.push_back(mk("BP3", 2, [c, sec](const Tup& t) {
            int p = t[0], x = t[1];
            if (!c.leq(p, x)) return true;
            int xp = sec[p][x];
            if (xp < 0) return false;
            return (c.po().down(x) & c.po().down(xp)) == c.po().down(p);
        }));
        break;
    }
    case System::LatticeSai: {
        auto sec = upper_sectionals(s);
        cl.push_back(mk("bounded-lattice", 2, [c](const Tup& t) {
            return c.s->zero().has_value() && c.po().meet(t[0], t[1]).has_value() &&
                   c.po().join(t[0], t[1]).has_value();
        }));
        SectionSpec sp;
        sp.in_dom = [c](int p, int x) { return c.leq(p, x); };
        add_section_clauses(cl, c, sec, sp, /*meets_inside_section=*/false);
        break;
    }
    case System::GomlAsSha: {
        require_star(s);
        add_lattice_sha(cl, c);
        cl.push_back(mk("i", 2, [c](const Tup& t) {
            int x = t[0], y = t[1];
            return c.st(c.st(x, y), y) == c.st(c.st(y, x), x);
        }));
        cl.push_back(mk("ii", 3, [c](const Tup& t) {
            int x = t[0], y = t[1], z = t[2];
            int r = c.st(c.st(c.st(c.st(x, y), y), z), z);
            int l = c.st(c.st(c.st(c.st(r, z), x), x), z);
            l = c.st(c.st(l, x), x);
            return l == r;
        }));
        // x*y = ((x∨y)·(y∧z)) ∨ y where u·v = ((u*v)*v)*v is the induced
        // implication product.
        cl.push_back(mk("iii", 3, [c](const Tup& t) {
            int x = t[0], y = t[1], z = t[2];
            auto u = c.po().join(x, y);
            auto v = c.po().meet(y, z);
            if (!u || !v) return true;
            int uv = c.st(c.st(c.st(*u, *v), *v), *v);
            auto j = c.po().join(uv, y);
            return j && *j == c.st(x, y);
        }));
        break;
    }
    }
    return cl;
}

namespace {

// Lexicographic scan of all `arity`-tuples; nullopt when the clause holds
// everywhere, else the first violating tuple.
std::optional<Tup> first_violation(const Clause& cl, int n) {
    Tup t(cl.arity, 0);
    if (cl.arity == 0) return cl.holds(t) ? std::nullopt : std::make_optional(t);
    while (true) {
        if (!cl.holds(t)) return t;
        int i = cl.arity - 1;
        while (i >= 0 && t[i] == n - 1) t[i--] = 0;
        if (i < 0) return std::nullopt;
        ++t[i];
    }
}

} // namespace

Verdict check(const Structure& s, System sys) {
    auto cls = clauses(s, sys);
    for (const auto& cl : cls) {
        if (auto w = first_violation(cl, s.size())) {
            return Verdict::fail(cl.name, *w,
                                 "clause " + cl.name + " fails at " +
                                     render_witness(s.carrier(), *w));
        }
    }
    return Verdict::ok();
}

Classification classify(const Structure& s) {
    Classification out;
    for (System sys : all_systems()) {
        try {
            if (check(s, sys).pass) out.passed.push_back(sys);
        } catch (const MissingComponent&) {
            out.not_applicable.push_back(sys);
        }
    }
    return out;
}

Verdict derived_facts(const Structure& s) {
    if (!s.has_star()) throw MissingComponent("binary table");
    Ctx c{&s, s.size(), s.one()};
    std::vector<Clause> cls;
    cls.push_back(mk("D1", 1, [c](const Tup& t) { return c.st(c.one, t[0]) == t[0]; }));
    cls.push_back(mk("D2", 2, [c](const Tup& t) { return c.leq(t[0], c.st(t[1], t[0])); }));
    cls.push_back(mk("D3", 1, [c](const Tup& t) { return c.st(t[0], c.one) == c.one; }));
    cls.push_back(mk("top", 1, [c](const Tup& t) { return c.leq(t[0], c.one); }));
    for (const auto& cl : cls)
        if (auto w = first_violation(cl, s.size()))
            return Verdict::fail(cl.name, *w,
                                 "derived fact " + cl.name + " fails at " +
                                     render_witness(s.carrier(), *w));
    return Verdict::ok();
}

} // namespace ordalg
