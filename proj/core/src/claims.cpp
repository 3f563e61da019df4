#include "ordalg/claims.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ordalg/axioms.hpp"
#include "ordalg/codec.hpp"
#include "ordalg/congruence.hpp"
#include "ordalg/construct.hpp"
#include "ordalg/errors.hpp"
#include "ordalg/terms.hpp"

namespace ordalg {

namespace {

using nlohmann::json;

int el(const Structure& s, const json& j) { return s.carrier().require(j.get<std::string>()); }

std::vector<int> els(const Structure& s, const json& j) {
    std::vector<int> out;
    for (const auto& item : j) out.push_back(el(s, item));
    return out;
}

Bits set_of(const Structure& s, const json& j) {
    if (j.is_string()) return parse_set(s.carrier(), j.get<std::string>());
    Bits out = 0;
    for (const auto& item : j) out |= bit(el(s, item));
    return out;
}

std::string set_text(const Structure& s, Bits b) { return render_set(s.carrier(), b); }

bool witness_matches(const Structure& s, const Verdict& v, const json& expected) {
    return v.witness == els(s, expected);
}

std::string verdict_text(const Structure& s, const Verdict& v) {
    if (v.pass) return "pass";
    return "fail at " + v.clause + " " + render_witness(s.carrier(), v.witness);
}

ClaimResult from_verdict(const Structure& s, const json& c, const Verdict& v,
                         bool expect_pass) {
    ClaimResult r;
    if (v.pass != expect_pass) {
        r.pass = false;
        r.detail = "expected " + std::string(expect_pass ? "pass" : "fail") + ", got " +
                   verdict_text(s, v);
        return r;
    }
    if (!v.pass) {
        if (c.contains("clause") && v.clause != c["clause"].get<std::string>()) {
            r.pass = false;
            r.detail = "expected clause " + c["clause"].get<std::string>() + ", got " + v.clause;
            return r;
        }
        if (c.contains("witness") && !witness_matches(s, v, c["witness"])) {
            r.pass = false;
            r.detail = "expected witness " + c["witness"].dump() + ", got " +
                       render_witness(s.carrier(), v.witness);
            return r;
        }
    }
    r.pass = true;
    return r;
}

ClaimResult claim_check(const Structure& s, const json& c) {
    auto sys = system_from_name(c.at("system").get<std::string>());
    if (!sys) return {"", false, "unknown system name"};
    const bool expect_pass = c.value("expect", "pass") == "pass";
    return from_verdict(s, c, check(s, *sys), expect_pass);
}

ClaimResult claim_classify(const Structure& s, const json& c) {
    for (const char* field : {"passes", "fails", "not-applicable"}) {
        if (!c.contains(field)) continue;
        for (const auto& item : c[field]) {
            auto sys = system_from_name(item.get<std::string>());
            if (!sys) return {"", false, "unknown system name " + item.dump()};
            bool na = false;
            Verdict v;
            try {
                v = check(s, *sys);
            } catch (const MissingComponent&) {
                na = true;
            }
            const std::string want(field);
            if (want == "passes" && (na || !v.pass))
                return {"", false, item.get<std::string>() + " does not pass"};
            if (want == "fails" && (na || v.pass))
                return {"", false, item.get<std::string>() + " does not fail"};
            if (want == "not-applicable" && !na)
                return {"", false, item.get<std::string>() + " is applicable"};
        }
    }
    return {"", true, ""};
}

ClaimResult claim_identity_fails_at(const Structure& s, const json& c) {
    std::vector<std::string> vars;
    const Term lhs = parse_term(c.at("lhs").get<std::string>(), vars);
    const Term rhs = parse_term(c.at("rhs").get<std::string>(), vars);
    std::vector<int> env(vars.size(), -1);
    for (const auto& [name, label] : c.at("at").items()) {
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) return {"", false, "binding for unused variable " + name};
        env[it - vars.begin()] = s.carrier().require(label.get<std::string>());
    }
    const auto l = eval_term(lhs, s, env, &vars);
    const auto r = eval_term(rhs, s, env, &vars);
    if (l && r && *l == *r)
        return {"", false,
                "identity unexpectedly holds there (both sides are " + s.label(*l) + ")"};
    return {"", true, ""};
}

ClaimResult claim_identity_holds(const Structure& s, const json& c) {
    std::vector<std::string> vars;
    const Term lhs = parse_term(c.at("lhs").get<std::string>(), vars);
    const Term rhs = parse_term(c.at("rhs").get<std::string>(), vars);
    const auto mode = identity_mode_from_name(c.value("mode", "strict"));
    if (!mode) return {"", false, "unknown identity mode"};
    const auto v = holds_identity(s, lhs, rhs, static_cast<int>(vars.size()), *mode);
    if (!v.pass) return {"", false, verdict_text(s, v)};
    return {"", true, ""};
}

ClaimResult claim_pc_missing_at(const Structure& s, const json& c) {
    const int x = el(s, c.at("x"));
    const int y = el(s, c.at("y"));
    const Bits cand = pc_candidates(s.poset(), x, y);
    if (c.contains("candidates")) {
        Bits want = set_of(s, c["candidates"]);
        if (cand != want)
            return {"", false, "candidate set is " + set_text(s, cand)};
    }
    if (s.poset().greatest(cand))
        return {"", false, "a greatest candidate exists"};
    return {"", true, ""};
}

ClaimResult claim_pc_missing_pairs(const Structure& s, const json& c) {
    std::vector<std::pair<int, int>> want;
    for (const auto& p : c.at("pairs")) want.emplace_back(el(s, p[0]), el(s, p[1]));
    const auto got = pc_missing_pairs(s.poset());
    if (got != want) {
        std::string txt;
        for (auto [x, y] : got) txt += " (" + s.label(x) + "," + s.label(y) + ")";
        return {"", false, "missing-residual pairs are" + txt};
    }
    return {"", true, ""};
}

ClaimResult claim_special_subsets(const Structure& s, const json& c) {
    const SpecialSubsets sub = special_subsets(s);
    struct Entry {
        const char* key;
        Bits got;
    } entries[] = {{"closed", sub.closed}, {"dense", sub.dense},
                   {"weakly-dense", sub.weakly_dense}};
    for (const auto& e : entries) {
        if (!c.contains(e.key)) continue;
        const Bits want = set_of(s, c[e.key]);
        if (want != e.got)
            return {"", false, std::string(e.key) + " is " + set_text(s, e.got)};
    }
    if (c.contains("fibers")) {
        std::vector<std::pair<int, Bits>> want;
        for (const auto& [label, arr] : c["fibers"].items())
            want.emplace_back(s.carrier().require(label), set_of(s, arr));
        std::sort(want.begin(), want.end());
        if (want != sub.fibers) {
            std::string txt;
            for (const auto& [a, f] : sub.fibers)
                txt += " " + s.label(a) + ":" + set_text(s, f);
            return {"", false, "fibers are" + txt};
        }
    }
    return {"", true, ""};
}

ClaimResult claim_not_upper_set(const Structure& s, const json& c) {
    const SpecialSubsets sub = special_subsets(s);
    const std::string which = c.at("set").get<std::string>();
    Bits set = which == "closed"         ? sub.closed
               : which == "dense"        ? sub.dense
               : which == "weakly-dense" ? sub.weakly_dense
                                         : 0;
    const int inside = el(s, c.at("inside"));
    const int outside = el(s, c.at("outside"));
    if (!has(set, inside)) return {"", false, "inside element is not in the set"};
    if (!s.leq(inside, outside)) return {"", false, "elements are not ordered"};
    if (has(set, outside)) return {"", false, "outside element is in the set"};
    return {"", true, ""};
}

ClaimResult claim_lemma_triplet(const Structure& s, const json&) {
    const auto zero = s.zero();
    if (!zero) return {"", false, "no bottom element"};
    for (int a = 0; a < s.size(); ++a) {
        const int add = s.star(s.star(a, *zero), *zero);
        const auto m = s.meet(add, s.star(add, a));
        if (!m) return {"", false, "meet undefined at " + s.label(a)};
        if (*m != a)
            return {"", false,
                    "decomposition gives " + s.label(*m) + " instead of " + s.label(a)};
    }
    return {"", true, ""};
}

ClaimResult claim_trivial_differs_at(const Structure& s, const json& c) {
    const Structure triv = trivial_star(s.carrier(), s.poset());
    std::vector<std::vector<int>> want; // rows (x, y, order-forced value, actual)
    for (const auto& row : c.at("cells"))
        want.push_back({el(s, row[0]), el(s, row[1]), el(s, row[2]), el(s, row[3])});
    std::vector<std::vector<int>> got;
    for (int x = 0; x < s.size(); ++x)
        for (int y = 0; y < s.size(); ++y)
            if (triv.star(x, y) != s.star(x, y))
                got.push_back({x, y, triv.star(x, y), s.star(x, y)});
    if (got != want) {
        std::string txt;
        for (const auto& row : got) txt += " " + render_witness(s.carrier(), row);
        return {"", false, "differing cells:" + txt};
    }
    return {"", true, ""};
}

ClaimResult claim_pst_matches(const Structure& s, const json&) {
    const Verdict v = pst_reproduces(s);
    if (!v.pass) return {"", false, verdict_text(s, v)};
    return {"", true, ""};
}

ClaimResult claim_closed_roundtrip(const Structure& s, const json&) {
    if (!s.has_comp()) return {"", false, "structure has no complement table"};
    const Structure t = pst_construct(s.carrier(), s.poset(), s.comp_table());
    const Structure o = closed_elements(t);
    if (o.size() != s.size()) return {"", false, "carrier shrank"};
    if (!(o.poset() == s.poset())) return {"", false, "order changed"};
    if (o.comp_table() != s.comp_table()) return {"", false, "complement changed"};
    if (o.carrier().labels() != s.carrier().labels()) return {"", false, "labels changed"};
    return {"", true, ""};
}

ClaimResult claim_congruence(const Structure& s, const json& c) {
    const Partition theta = Partition::parse(s.carrier(), c.at("partition").get<std::string>());
    if (c.contains("modes"))
        for (const auto& [name, want] : c["modes"].items()) {
            auto mode = congruence_mode_from_name(name);
            if (!mode) return {"", false, "unknown congruence mode " + name};
            const Verdict v = is_congruence(s, theta, *mode);
            if (v.pass != want.get<bool>())
                return {"", false, name + ": " + verdict_text(s, v)};
        }
    if (c.contains("strong-witness")) {
        const Verdict v = is_strong_congruence(s, theta);
        if (v.pass) return {"", false, "strongness unexpectedly holds"};
        if (!witness_matches(s, v, c["strong-witness"]))
            return {"", false, "strongness " + verdict_text(s, v)};
    }
    if (c.contains("up-directed")) {
        const Verdict v = classes_up_directed(s, theta);
        if (v.pass != c["up-directed"].get<bool>())
            return {"", false, "up-directedness: " + verdict_text(s, v)};
    }
    return {"", true, ""};
}

ClaimResult claim_lattice_incompat(const Structure& s, const json& c) {
    const Partition theta = Partition::parse(s.carrier(), c.at("partition").get<std::string>());
    return from_verdict(s, c, is_lattice_compatible(s, theta), false);
}

ClaimResult claim_quotient_order(const Structure& s, const json& c) {
    const Partition theta = Partition::parse(s.carrier(), c.at("partition").get<std::string>());
    const Structure q = quotient(s, theta);
    std::vector<std::pair<int, int>> want;
    for (const auto& p : c.at("pairs")) want.emplace_back(p[0].get<int>(), p[1].get<int>());
    std::vector<std::pair<int, int>> got;
    for (int a = 0; a < q.size(); ++a)
        for (int b = 0; b < q.size(); ++b)
            if (q.leq(a, b)) got.emplace_back(a, b);
    std::sort(want.begin(), want.end());
    if (got != want) {
        std::string txt;
        for (auto [a, b] : got) txt += " (" + std::to_string(a) + "," + std::to_string(b) + ")";
        return {"", false, "quotient order is" + txt};
    }
    return {"", true, ""};
}

ClaimResult claim_filter(const Structure& s, const json& c) {
    const Bits f = set_of(s, c.at("set"));
    if (c.contains("kinds"))
        for (const auto& [name, want] : c["kinds"].items()) {
            auto kind = filter_kind_from_name(name);
            if (!kind) return {"", false, "unknown filter kind " + name};
            const Verdict v = is_filter(s, f, *kind);
            if (v.pass != want.get<bool>())
                return {"", false, name + ": " + verdict_text(s, v)};
        }
    if (c.contains("strong-witness")) {
        const Verdict v = is_filter(s, f, FilterKind::StrongFilter);
        if (v.pass) return {"", false, "strong kind unexpectedly holds"};
        if (c.contains("strong-clause") &&
            v.clause != c["strong-clause"].get<std::string>())
            return {"", false, "clause is " + v.clause};
        if (!witness_matches(s, v, c["strong-witness"]))
            return {"", false, "witness is " + render_witness(s.carrier(), v.witness)};
    }
    return {"", true, ""};
}

ClaimResult claim_phi_gap(const Structure& s, const json& c) {
    std::vector<std::pair<int, int>> seed;
    for (const auto& p : c.at("seed")) seed.emplace_back(el(s, p[0]), el(s, p[1]));
    const Partition theta = principal_congruence(s, seed);
    const auto rel = phi(s, unit_class(s, theta));
    std::vector<std::pair<int, int>> gap;
    for (int x = 0; x < s.size(); ++x)
        for (int y : to_indices(rel[x]))
            if (!theta.same(x, y)) gap.emplace_back(x, y);
    std::vector<std::pair<int, int>> want;
    for (const auto& p : c.at("gap")) want.emplace_back(el(s, p[0]), el(s, p[1]));
    std::sort(want.begin(), want.end());
    if (gap != want) {
        std::string txt;
        for (auto [x, y] : gap) txt += " (" + s.label(x) + "," + s.label(y) + ")";
        return {"", false, "extra related pairs are" + txt};
    }
    return {"", true, ""};
}

ClaimResult claim_correspondence(const Structure& s, const json& c) {
    const bool expect_pass = c.value("expect", "pass") == "pass";
    return from_verdict(s, c, verify_correspondence(s), expect_pass);
}

ClaimResult claim_maltsev(const Structure& s, const json& c) {
    const bool expect_pass = c.value("expect", "pass") == "pass";
    return from_verdict(s, c, maltsev_check(s), expect_pass);
}

ClaimResult claim_induced_order(const Structure& s, const json&) {
    const Verdict v = s.order_agrees_with_table();
    if (!v.pass) return {"", false, verdict_text(s, v)};
    return {"", true, ""};
}

ClaimResult dispatch(const Structure& s, const json& c) {
    const std::string kind = c.at("kind").get<std::string>();
    if (kind == "induced-order") return claim_induced_order(s, c);
    if (kind == "check") return claim_check(s, c);
    if (kind == "classify") return claim_classify(s, c);
    if (kind == "identity-fails-at") return claim_identity_fails_at(s, c);
    if (kind == "identity-holds") return claim_identity_holds(s, c);
    if (kind == "pc-missing-at") return claim_pc_missing_at(s, c);
    if (kind == "pc-missing-pairs") return claim_pc_missing_pairs(s, c);
    if (kind == "special-subsets") return claim_special_subsets(s, c);
    if (kind == "not-upper-set") return claim_not_upper_set(s, c);
    if (kind == "lemma-triplet") return claim_lemma_triplet(s, c);
    if (kind == "trivial-differs-at") return claim_trivial_differs_at(s, c);
    if (kind == "pst-matches") return claim_pst_matches(s, c);
    if (kind == "closed-roundtrip") return claim_closed_roundtrip(s, c);
    if (kind == "congruence") return claim_congruence(s, c);
    if (kind == "lattice-incompat") return claim_lattice_incompat(s, c);
    if (kind == "quotient-order") return claim_quotient_order(s, c);
    if (kind == "filter") return claim_filter(s, c);
    if (kind == "phi-gap") return claim_phi_gap(s, c);
    if (kind == "correspondence") return claim_correspondence(s, c);
    if (kind == "maltsev") return claim_maltsev(s, c);
    return {"", false, "unknown claim kind: " + kind};
}

} // namespace

std::vector<ClaimResult> run_claims(const Structure& s, const std::string& manifest_json) {
    json doc = json::parse(manifest_json);
    std::vector<ClaimResult> out;
    int index = 0;
    for (const auto& c : doc.at("claims")) {
        ClaimResult r;
        try {
            r = dispatch(s, c);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        r.name = c.value("name", c.value("kind", "claim") + "#" + std::to_string(index));
        out.push_back(std::move(r));
        ++index;
    }
    return out;
}

ClaimsReport run_claims_file(const std::string& alg_path, const std::string& claims_path) {
    ClaimsReport report;
    const Structure s = parse_file(alg_path);
    std::ifstream in(claims_path);
    if (!in) throw Error("cannot open " + claims_path);
    std::stringstream buf;
    buf << in.rdbuf();
    report.results = run_claims(s, buf.str());
    const auto slash = alg_path.find_last_of('/');
    report.structure_name = alg_path.substr(slash == std::string::npos ? 0 : slash + 1);
    for (const auto& r : report.results) (r.pass ? report.passed : report.failed)++;
    return report;
}

} // namespace ordalg
