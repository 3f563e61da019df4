#include "ordalg/terms.hpp"

#include <algorithm>

#include "ordalg/axioms.hpp"
#include "ordalg/errors.hpp"

namespace ordalg {

// ---------------------------------------------------------------------------
// Construction helpers
// ---------------------------------------------------------------------------

Term Term::v(int i) {
    Term t;
    t.kind = Kind::Var;
    t.var = i;
    return t;
}

Term Term::one() {
    Term t;
    t.kind = Kind::One;
    return t;
}

static Term binary(Term::Kind k, Term a, Term b) {
    Term t;
    t.kind = k;
    t.kids.push_back(std::move(a));
    t.kids.push_back(std::move(b));
    return t;
}

Term Term::star(Term a, Term b) { return binary(Kind::Star, std::move(a), std::move(b)); }
Term Term::join(Term a, Term b) { return binary(Kind::Join, std::move(a), std::move(b)); }
Term Term::meet(Term a, Term b) { return binary(Kind::Meet, std::move(a), std::move(b)); }

Term Term::cone_inf(Term a, Term b, std::vector<Term> extras) {
    Term t = binary(Kind::ConeInf, std::move(a), std::move(b));
    for (auto& e : extras) t.kids.push_back(std::move(e));
    return t;
}

// ---------------------------------------------------------------------------
// Parsing and printing
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) out.push_back(cur);
        cur.clear();
    };
    for (char c : text) {
        if (c == '(' || c == ')') {
            flush();
            out.push_back(std::string(1, c));
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            flush();
        } else {
            cur += c;
        }
    }
    flush();
    return out;
}

bool is_operator(const std::string& tok) {
    return tok == "star" || tok == "join" || tok == "meet" || tok == "coneinf";
}

Term parse_tokens(const std::vector<std::string>& toks, size_t& pos,
                  std::vector<std::string>& vars) {
    if (pos >= toks.size()) throw ParseError(0, "unexpected end of term");
    const std::string tok = toks[pos++];
    if (tok == ")") throw ParseError(0, "unexpected ')'");
    if (tok != "(") {
        if (tok == "1") return Term::one();
        if (is_operator(tok)) throw ParseError(0, "operator '" + tok + "' used as a variable");
        auto it = std::find(vars.begin(), vars.end(), tok);
        if (it == vars.end()) {
            vars.push_back(tok);
            return Term::v(static_cast<int>(vars.size()) - 1);
        }
        return Term::v(static_cast<int>(it - vars.begin()));
    }
    if (pos >= toks.size()) throw ParseError(0, "missing operator after '('");
    const std::string op = toks[pos++];
    if (!is_operator(op)) throw ParseError(0, "unknown operator '" + op + "'");
    std::vector<Term> args;
    while (pos < toks.size() && toks[pos] != ")") args.push_back(parse_tokens(toks, pos, vars));
    if (pos >= toks.size()) throw ParseError(0, "missing ')'");
    ++pos; // consume ')'
    if (op == "coneinf") {
        if (args.size() < 2) throw ParseError(0, "coneinf needs at least two arguments");
        std::vector<Term> extras(args.begin() + 2, args.end());
        return Term::cone_inf(std::move(args[0]), std::move(args[1]), std::move(extras));
    }
    if (args.size() != 2) throw ParseError(0, "'" + op + "' needs exactly two arguments");
    if (op == "star") return Term::star(std::move(args[0]), std::move(args[1]));
    if (op == "join") return Term::join(std::move(args[0]), std::move(args[1]));
    return Term::meet(std::move(args[0]), std::move(args[1]));
}

} // namespace

Term parse_term(const std::string& text, std::vector<std::string>& vars) {
    auto toks = tokenize(text);
    size_t pos = 0;
    Term t = parse_tokens(toks, pos, vars);
    if (pos != toks.size()) throw ParseError(0, "trailing input after term");
    return t;
}

std::string print_term(const Term& t, const std::vector<std::string>& vars) {
    switch (t.kind) {
        case Term::Kind::Var:
            return t.var >= 0 && t.var < static_cast<int>(vars.size()) ? vars[t.var]
                                                                       : "v" + std::to_string(t.var);
        case Term::Kind::One:
            return "1";
        case Term::Kind::Star:
        case Term::Kind::Join:
        case Term::Kind::Meet:
        case Term::Kind::ConeInf: {
            std::string op = t.kind == Term::Kind::Star   ? "star"
                             : t.kind == Term::Kind::Join ? "join"
                             : t.kind == Term::Kind::Meet ? "meet"
                                                          : "coneinf";
            std::string out = "(" + op;
            for (const auto& k : t.kids) out += " " + print_term(k, vars);
            return out + ")";
        }
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

std::optional<int> eval_term(const Term& t, const Structure& s, const std::vector<int>& env,
                             const std::vector<std::string>* vars) {
    switch (t.kind) {
        case Term::Kind::Var: {
            if (t.var < 0 || t.var >= static_cast<int>(env.size()) || env[t.var] < 0)
                throw UnboundVariable(vars && t.var >= 0 && t.var < static_cast<int>(vars->size())
                                          ? (*vars)[t.var]
                                          : "v" + std::to_string(t.var));
            return env[t.var];
        }
        case Term::Kind::One:
            return s.one();
        case Term::Kind::Star: {
            if (!s.has_star()) throw MissingComponent("binary table");
            auto a = eval_term(t.kids[0], s, env, vars);
            auto b = eval_term(t.kids[1], s, env, vars);
            if (!a || !b) return std::nullopt;
            return s.star(*a, *b);
        }
        case Term::Kind::Join:
        case Term::Kind::Meet: {
            auto a = eval_term(t.kids[0], s, env, vars);
            auto b = eval_term(t.kids[1], s, env, vars);
            if (!a || !b) return std::nullopt;
            return t.kind == Term::Kind::Join ? s.poset().join(*a, *b) : s.poset().meet(*a, *b);
        }
        case Term::Kind::ConeInf: {
            auto a = eval_term(t.kids[0], s, env, vars);
            auto b = eval_term(t.kids[1], s, env, vars);
            if (!a || !b) return std::nullopt;
            std::vector<int> extras;
            for (size_t i = 2; i < t.kids.size(); ++i) {
                auto e = eval_term(t.kids[i], s, env, vars);
                if (!e) return std::nullopt;
                extras.push_back(*e);
            }
            return s.cone_inf(*a, *b, extras);
        }
    }
    return std::nullopt;
}

std::string identity_mode_name(IdentityMode m) {
    return m == IdentityMode::Strict ? "strict" : "defined-only";
}

std::optional<IdentityMode> identity_mode_from_name(std::string_view name) {
    std::string t(name);
    std::replace(t.begin(), t.end(), '_', '-');
    if (t == "strict") return IdentityMode::Strict;
    if (t == "defined-only") return IdentityMode::DefinedOnly;
    return std::nullopt;
}

Verdict holds_identity(const Structure& s, const Term& lhs, const Term& rhs, int var_count,
                       IdentityMode mode) {
    const int n = s.size();
    std::vector<int> env(std::max(var_count, 0), 0);
    while (true) {
        auto l = eval_term(lhs, s, env);
        auto r = eval_term(rhs, s, env);
        if (mode == IdentityMode::Strict) {
            if (!l) return Verdict::fail("identity", env, "left side undefined");
            if (!r) return Verdict::fail("identity", env, "right side undefined");
            if (*l != *r) return Verdict::fail("identity", env, "sides differ");
        } else if (l && r && *l != *r) {
            return Verdict::fail("identity", env, "sides defined and differ");
        }
        int i = var_count - 1;
        while (i >= 0 && env[i] == n - 1) env[i--] = 0;
        if (i < 0) return Verdict::ok();
        ++env[i];
    }
}

// ---------------------------------------------------------------------------
// Majority-style certificate
// ---------------------------------------------------------------------------

namespace {

Term lattice_p(Term x, Term y, Term z) {
    return Term::meet(Term::star(Term::star(x, y), z),
                      Term::star(Term::star(std::move(z), std::move(y)), std::move(x)));
}

Term lattice_q(Term x, Term y, Term z) {
    // (x ∨ z) ∧ ((x*y)*z) ∧ (y*x)
    return Term::meet(Term::meet(Term::join(x, z), Term::star(Term::star(x, y), z)),
                      Term::star(std::move(y), std::move(x)));
}

Term cone_t1(Term x, Term y, Term z) {
    return Term::cone_inf(x, z, {Term::star(Term::star(x, y), z),
                                 Term::star(std::move(y), std::move(x))});
}

} // namespace

Verdict maltsev_check(const Structure& s) {
    const Term x = Term::v(0), y = Term::v(1);
    if (check(s, System::LatticeSkewHilbert).pass) {
        struct Case {
            const char* clause;
            Term lhs;
        } cases[] = {
            {"p-left", lattice_p(x, x, y)},  {"p-right", lattice_p(y, x, x)},
            {"q-left", lattice_q(x, x, y)},  {"q-right", lattice_q(y, x, x)},
        };
        for (auto& c : cases)
            if (auto v = holds_identity(s, c.lhs, y, 2, IdentityMode::Strict); !v.pass) {
                v.clause = c.clause;
                return v;
            }
        Verdict ok = Verdict::ok();
        ok.notes.push_back("checked the two ternary lattice terms");
        return ok;
    }
    if (check(s, System::StrongSkewHilbert).pass) {
        // The partial cone term need not be defined everywhere; the certificate
        // only requires the two diagonal instances, and strict mode already
        // treats an undefined instance as a failure.
        if (auto v = holds_identity(s, cone_t1(x, x, y), y, 2, IdentityMode::Strict); !v.pass) {
            v.clause = "T1-left";
            return v;
        }
        if (auto v = holds_identity(s, cone_t1(x, y, y), x, 2, IdentityMode::Strict); !v.pass) {
            v.clause = "T1-right";
            return v;
        }
        Verdict ok = Verdict::ok();
        ok.notes.push_back("checked the partial cone term on both diagonals");
        return ok;
    }
    throw Error("majority-style certificate needs the lattice axioms or the strong variant");
}

// ---------------------------------------------------------------------------
// Ideal-term closure
// ---------------------------------------------------------------------------

std::string ideal_family_name(IdealFamily f) {
    return f == IdealFamily::LatticeT ? "lattice" : "partial";
}

std::optional<IdealFamily> ideal_family_from_name(std::string_view name) {
    std::string t(name);
    std::replace(t.begin(), t.end(), '_', '-');
    if (t == "lattice" || t == "lattice-t") return IdealFamily::LatticeT;
    if (t == "partial" || t == "partial-t") return IdealFamily::PartialT;
    return std::nullopt;
}

Verdict ideal_closure_check(const Structure& s, Bits f, IdealFamily family) {
    if (!s.has_star()) throw MissingComponent("binary table");
    const Poset& po = s.poset();
    const int n = s.size();
    const std::vector<int> members = to_indices(f);
    auto idx = [n](int a, int b, int c, int d) { return ((a * n + b) * n + c) * n + d; };

    if (family == IdealFamily::LatticeT) {
        if (!po.is_lattice()) throw MissingComponent("lattice");
        if (!has(f, s.one())) return Verdict::fail("t1", {s.one()}, "the unit is missing");
        // base term: (a ∨ b) ∧ (c * b) ∧ d
        std::vector<int> tt(static_cast<size_t>(n) * n * n * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < n; ++d)
                        tt[idx(a, b, c, d)] = *po.meet(*po.meet(*po.join(a, b), s.star(c, b)), d);
        struct Rule {
            const char* clause;
            int kind; // 0 join, 1 meet, 2 star
        } rules[] = {{"t2", 0}, {"t3", 1}, {"t4", 2}};
        for (const auto& rule : rules)
            for (int x1 = 0; x1 < n; ++x1)
                for (int x2 = 0; x2 < n; ++x2)
                    for (int y1 : members)
                        for (int y2 : members) {
                            const int a = tt[idx(x1, x2, y1, y2)];
                            for (int x3 = 0; x3 < n; ++x3)
                                for (int x4 = 0; x4 < n; ++x4)
                                    for (int y3 : members)
                                        for (int y4 : members) {
                                            const int b = tt[idx(x3, x4, y3, y4)];
                                            int val;
                                            if (rule.kind == 0)
                                                val = s.star(*po.join(a, b), *po.join(x2, x4));
                                            else if (rule.kind == 1)
                                                val = s.star(*po.meet(a, b), *po.meet(x2, x4));
                                            else
                                                val = s.star(s.star(a, b), s.star(x2, x4));
                                            if (!has(f, val))
                                                return Verdict::fail(
                                                    rule.clause,
                                                    {x1, x2, y1, y2, x3, x4, y3, y4},
                                                    "combined term escapes the set");
                                        }
                        }
        return Verdict::ok();
    }

    // PartialT: base term coneinf(a, b, (c*b), d)
    if (!has(f, s.one())) return Verdict::fail("T1", {s.one()}, "the unit is missing");
    std::vector<std::optional<int>> Tt(static_cast<size_t>(n) * n * n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                    Tt[idx(a, b, c, d)] = s.cone_inf(a, b, {s.star(c, b), d});
    struct Rule {
        const char* clause;
        bool use_meet;
    } rules[] = {{"T2", false}, {"T3", true}};
    for (const auto& rule : rules)
        for (int x1 = 0; x1 < n; ++x1)
            for (int x2 = 0; x2 < n; ++x2)
                for (int y1 : members)
                    for (int y2 : members) {
                        const auto a = Tt[idx(x1, x2, y1, y2)];
                        for (int x3 = 0; x3 < n; ++x3)
                            for (int x4 = 0; x4 < n; ++x4)
                                for (int y3 : members)
                                    for (int y4 : members) {
                                        const auto b = Tt[idx(x3, x4, y3, y4)];
                                        const std::vector<int> w{x1, x2, y1, y2,
                                                                 x3, x4, y3, y4};
                                        if (!a || !b)
                                            return Verdict::fail(rule.clause, w,
                                                                 "base term undefined");
                                        int val;
                                        if (rule.use_meet) {
                                            auto m1 = po.meet(*a, *b);
                                            auto m2 = po.meet(x2, x4);
                                            if (!m1 || !m2)
                                                return Verdict::fail(rule.clause, w,
                                                                     "meet undefined");
                                            val = s.star(*m1, *m2);
                                        } else {
                                            val = s.star(s.star(*a, *b), s.star(x2, x4));
                                        }
                                        if (!has(f, val))
                                            return Verdict::fail(
                                                rule.clause, w, "combined term escapes the set");
                                    }
                    }
    return Verdict::ok();
}

} // namespace ordalg
