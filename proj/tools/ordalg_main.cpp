// ordalg — command-line front end for the order-algebra workbench.
//
// Subcommands load a structure file (text .alg or .json), run one of the
// library's checks/constructions, and print a human report or, with
// --json, a machine-readable mirror.  Exit codes: 0 = success / property
// holds, 1 = property fails / some claim fails, 2 = usage or data error.

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ordalg/axioms.hpp"
#include "ordalg/claims.hpp"
#include "ordalg/codec.hpp"
#include "ordalg/congruence.hpp"
#include "ordalg/construct.hpp"
#include "ordalg/errors.hpp"
#include "ordalg/search.hpp"
#include "ordalg/terms.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace ordalg;

namespace {

Structure load_structure(const std::string& path) {
    if (fs::path(path).extension() == ".json") {
        std::ifstream in(path);
        if (!in) throw Error("cannot open " + path);
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_json_text(buf.str());
    }
    return parse_file(path);
}

json verdict_json(const Structure& s, const Verdict& v) {
    json out;
    out["pass"] = v.pass;
    if (!v.pass) {
        out["clause"] = v.clause;
        json w = json::array();
        for (int x : v.witness) w.push_back(s.label(x));
        out["witness"] = w;
        out["detail"] = v.detail;
    }
    if (!v.notes.empty()) out["notes"] = v.notes;
    return out;
}

void print_verdict(const Structure& s, const Verdict& v) {
    if (v.pass) {
        std::cout << "PASS\n";
    } else {
        std::cout << "FAIL  clause " << v.clause << " at "
                  << render_witness(s.carrier(), v.witness);
        if (!v.detail.empty()) std::cout << " — " << v.detail;
        std::cout << "\n";
    }
    for (const auto& n : v.notes) std::cout << "note: " << n << "\n";
}

std::string dot_of(const Structure& s) {
    std::string out = "digraph order {\n  rankdir=BT;\n";
    for (int i = 0; i < s.size(); ++i)
        out += "  \"" + s.label(i) + "\";\n";
    for (auto [x, y] : s.poset().covers())
        out += "  \"" + s.label(x) + "\" -> \"" + s.label(y) + "\";\n";
    out += "}\n";
    return out;
}

void write_or_print(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write " + out_path);
    out << text;
}

// ---------------------------------------------------------------------------

int cmd_check(const std::string& input, const std::string& system, bool json_out) {
    const Structure s = load_structure(input);
    const auto sys = system_from_name(system);
    if (!sys) throw Error("unknown system: " + system);
    Verdict v;
    try {
        v = check(s, *sys);
    } catch (const MissingComponent& e) {
        if (json_out) {
            json out;
            out["applicable"] = false;
            out["missing"] = e.component();
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "NOT APPLICABLE — missing " << e.component() << "\n";
        }
        return 2;
    }
    if (json_out) {
        json out = verdict_json(s, v);
        out["system"] = system_name(*sys);
        std::cout << out.dump(2) << "\n";
    } else {
        print_verdict(s, v);
    }
    return v.pass ? 0 : 1;
}

int cmd_classify(const std::string& input, bool json_out) {
    const Structure s = load_structure(input);
    const Classification cl = classify(s);
    auto in = [](const std::vector<System>& v, System sys) {
        return std::find(v.begin(), v.end(), sys) != v.end();
    };
    if (json_out) {
        json out;
        for (System sys : all_systems())
            out[system_name(sys)] = in(cl.passed, sys)          ? "pass"
                                    : in(cl.not_applicable, sys) ? "not-applicable"
                                                                 : "fail";
        std::cout << out.dump(2) << "\n";
    } else {
        for (System sys : all_systems()) {
            const char* status = in(cl.passed, sys)          ? "pass"
                                 : in(cl.not_applicable, sys) ? "not applicable"
                                                              : "fail";
            std::cout << system_name(sys) << ": " << status << "\n";
        }
    }
    return 0;
}

int cmd_facts(const std::string& input, bool json_out) {
    const Structure s = load_structure(input);
    const Verdict v = derived_facts(s);
    if (json_out) std::cout << verdict_json(s, v).dump(2) << "\n";
    else print_verdict(s, v);
    return v.pass ? 0 : 1;
}

int cmd_cones(const std::string& input, const std::string& xs, const std::string& ys,
              bool json_out) {
    const Structure s = load_structure(input);
    const int x = s.carrier().require(xs);
    const int y = s.carrier().require(ys);
    const Poset& po = s.poset();
    const Bits uppers = po.up(x) & po.up(y);
    const Bits lower_of_uppers = po.lower(uppers);
    const Bits cand = pc_candidates(po, x, y);
    const auto ci = s.cone_inf(x, y, {});
    if (json_out) {
        json out;
        auto render = [&](Bits b) {
            json arr = json::array();
            for (int i : to_indices(b)) arr.push_back(s.label(i));
            return arr;
        };
        out["common-upper"] = render(uppers);
        out["lower-of-common-upper"] = render(lower_of_uppers);
        out["residual-candidates"] = render(cand);
        if (auto j = po.join(x, y)) out["join"] = s.label(*j);
        if (auto m = po.meet(x, y)) out["meet"] = s.label(*m);
        if (ci) out["cone-inf"] = s.label(*ci);
        if (s.has_star()) out["star"] = s.label(s.star(x, y));
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "common upper bounds: " << render_set(s.carrier(), uppers) << "\n";
        std::cout << "lower cone of those: " << render_set(s.carrier(), lower_of_uppers)
                  << "\n";
        std::cout << "residual candidates: " << render_set(s.carrier(), cand) << "\n";
        if (auto j = po.join(x, y)) std::cout << "join: " << s.label(*j) << "\n";
        if (auto m = po.meet(x, y)) std::cout << "meet: " << s.label(*m) << "\n";
        if (ci) std::cout << "cone-inf: " << s.label(*ci) << "\n";
        if (s.has_star()) std::cout << "star: " << s.label(s.star(x, y)) << "\n";
    }
    return 0;
}

int cmd_congruences(const std::string& input, const std::string& mode_name, bool count_only,
                    bool json_out) {
    const Structure s = load_structure(input);
    const auto mode = congruence_mode_from_name(mode_name);
    if (!mode) throw Error("unknown congruence mode: " + mode_name);
    const auto congs = enumerate_congruences(s, *mode);
    if (json_out) {
        json out;
        out["mode"] = congruence_mode_name(*mode);
        out["count"] = congs.size();
        if (!count_only) {
            json arr = json::array();
            for (const auto& t : congs) {
                json entry;
                entry["partition"] = t.print(s.carrier());
                entry["blocks"] = t.block_count();
                entry["strong"] = is_strong_congruence(s, t).pass;
                arr.push_back(entry);
            }
            out["congruences"] = arr;
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << congs.size() << " congruence(s) [" << congruence_mode_name(*mode) << "]\n";
    if (!count_only)
        for (const auto& t : congs) {
            std::cout << t.print(s.carrier());
            if (is_strong_congruence(s, t).pass) std::cout << "  (strong)";
            std::cout << "\n";
        }
    return 0;
}

int cmd_filters(const std::string& input, const std::string& kind_name, bool count_only,
                bool json_out) {
    const Structure s = load_structure(input);
    const auto kind = filter_kind_from_name(kind_name);
    if (!kind) throw Error("unknown filter kind: " + kind_name);
    const auto filters = enumerate_filters(s, *kind);
    if (json_out) {
        json out;
        out["kind"] = filter_kind_name(*kind);
        out["count"] = filters.size();
        if (!count_only) {
            json arr = json::array();
            for (Bits f : filters) arr.push_back(render_set(s.carrier(), f));
            out["filters"] = arr;
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << filters.size() << " set(s) [" << filter_kind_name(*kind) << "]\n";
    if (!count_only)
        for (Bits f : filters) std::cout << render_set(s.carrier(), f) << "\n";
    return 0;
}

int cmd_correspondence(const std::string& input, bool json_out) {
    const Structure s = load_structure(input);
    const Verdict v = verify_correspondence(s);
    if (json_out) std::cout << verdict_json(s, v).dump(2) << "\n";
    else print_verdict(s, v);
    return v.pass ? 0 : 1;
}

int cmd_quotient(const std::string& input, const std::string& partition, bool force,
                 const std::string& out_path) {
    const Structure s = load_structure(input);
    const Partition theta = Partition::parse(s.carrier(), partition);
    const Structure q = quotient(s, theta, force);
    write_or_print(emit_text(q), out_path);
    return 0;
}

int cmd_construct(const std::string& input, const std::string& op, const std::string& at,
                  bool dot, const std::string& out_path) {
    const Structure s = load_structure(input);
    Structure result;
    if (op == "trivial") result = trivial_star(s.carrier(), s.poset());
    else if (op == "pst") result = pst_construct(s.carrier(), s.poset(), s.comp_table());
    else if (op == "closed") result = closed_elements(s);
    else if (op == "section") result = upper_section(s, s.carrier().require(at));
    else if (op == "dual") result = dualize(s);
    else if (op == "product-to-star") result = product_to_star(s);
    else if (op == "star-to-product") result = star_to_product(s);
    else if (op == "none") result = s; // plain reformat / DOT export
    else throw Error("unknown construction: " + op);
    write_or_print(dot ? dot_of(result) : emit_text(result), out_path);
    return 0;
}

int cmd_term(const std::string& input, const std::string& eval_expr, const std::string& bind,
             const std::string& lhs, const std::string& rhs, const std::string& mode_name,
             bool maltsev, const std::string& ideal_family, const std::string& ideal_set,
             bool json_out) {
    const Structure s = load_structure(input);
    if (maltsev) {
        const Verdict v = maltsev_check(s);
        if (json_out) std::cout << verdict_json(s, v).dump(2) << "\n";
        else print_verdict(s, v);
        return v.pass ? 0 : 1;
    }
    if (!ideal_family.empty()) {
        const auto family = ideal_family_from_name(ideal_family);
        if (!family) throw Error("unknown ideal-term family: " + ideal_family);
        const Verdict v = ideal_closure_check(s, parse_set(s.carrier(), ideal_set), *family);
        if (json_out) std::cout << verdict_json(s, v).dump(2) << "\n";
        else print_verdict(s, v);
        return v.pass ? 0 : 1;
    }
    if (!lhs.empty() || !rhs.empty()) {
        if (lhs.empty() || rhs.empty()) throw Error("--lhs and --rhs go together");
        std::vector<std::string> vars;
        const Term l = parse_term(lhs, vars);
        const Term r = parse_term(rhs, vars);
        const auto mode = identity_mode_from_name(mode_name);
        if (!mode) throw Error("unknown identity mode: " + mode_name);
        Verdict v = holds_identity(s, l, r, static_cast<int>(vars.size()), *mode);
        if (!v.pass) {
            // report the witness with variable names
            std::string env;
            for (size_t i = 0; i < vars.size(); ++i)
                env += (i ? ", " : "") + vars[i] + "=" + s.label(v.witness[i]);
            v.detail += " [" + env + "]";
        }
        if (json_out) std::cout << verdict_json(s, v).dump(2) << "\n";
        else print_verdict(s, v);
        return v.pass ? 0 : 1;
    }
    if (!eval_expr.empty()) {
        std::vector<std::string> vars;
        const Term t = parse_term(eval_expr, vars);
        std::vector<int> env(vars.size(), -1);
        std::stringstream ss(bind);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) throw Error("binding must look like x=a");
            const std::string name = item.substr(0, eq);
            const auto it = std::find(vars.begin(), vars.end(), name);
            if (it == vars.end()) throw Error("no variable named " + name + " in the term");
            env[it - vars.begin()] = s.carrier().require(item.substr(eq + 1));
        }
        const auto value = eval_term(t, s, env, &vars);
        if (json_out) {
            json out;
            out["defined"] = value.has_value();
            if (value) out["value"] = s.label(*value);
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << (value ? s.label(*value) : std::string("undefined")) << "\n";
        }
        return 0;
    }
    throw Error("term: nothing to do (use --eval, --lhs/--rhs, --maltsev, or --ideal)");
}

int cmd_search(const std::string& system, int size, bool count_only, bool table_first,
               const std::string& emit_dir, const std::string& passes,
               const std::string& fails, int max_size, bool json_out) {
    if (!passes.empty() || !fails.empty()) {
        const auto a = system_from_name(passes);
        const auto b = system_from_name(fails);
        if (!a || !b) throw Error("counterexample search needs valid --passes/--fails");
        const auto found = find_counterexample(*a, *b, max_size);
        if (!found) {
            if (json_out) std::cout << json{{"found", false}}.dump(2) << "\n";
            else std::cout << "no separating model up to size " << max_size << "\n";
            return 1;
        }
        if (json_out) {
            json out;
            out["found"] = true;
            out["size"] = found->size();
            out["structure"] = json::parse(emit_json_text(*found));
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "size " << found->size() << " model satisfying " << system_name(*a)
                      << " and violating " << system_name(*b) << ":\n"
                      << emit_text(*found);
        }
        return 0;
    }
    const auto sys = system_from_name(system);
    if (!sys) throw Error("unknown system: " + system);
    const CountResult r =
        table_first ? count_models_tablefirst(*sys, size) : count_models(*sys, size);
    if (json_out) {
        json out;
        out["system"] = system_name(*sys);
        out["size"] = size;
        out["labeled"] = r.labeled;
        out["iso"] = r.iso;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << system_name(*sys) << " size " << size << ": " << r.labeled
                  << " labeled model(s), " << r.iso << " up to isomorphism\n";
    }
    if (!count_only && !table_first) {
        const auto models = enumerate_models(*sys, size);
        if (!emit_dir.empty()) {
            fs::create_directories(emit_dir);
            int index = 0;
            for (const auto& m : models) {
                std::ofstream out(fs::path(emit_dir) /
                                  (system_name(*sys) + "-" + std::to_string(size) + "-" +
                                   std::to_string(index++) + ".alg"));
                out << emit_text(m);
            }
            std::cout << "wrote " << models.size() << " file(s) to " << emit_dir << "\n";
        } else if (!json_out) {
            for (const auto& m : models) std::cout << "\n" << emit_text(m);
        }
    }
    return 0;
}

int cmd_verify(const std::string& corpus, const std::string& only, bool json_out) {
    std::vector<std::pair<std::string, std::string>> files; // (.alg, .claims.json)
    for (const auto& entry : fs::directory_iterator(corpus)) {
        if (entry.path().extension() != ".alg") continue;
        const std::string stem = entry.path().stem().string();
        if (!only.empty() && stem != only) continue;
        fs::path claims = entry.path();
        claims.replace_extension(".claims.json");
        if (fs::exists(claims)) files.emplace_back(entry.path().string(), claims.string());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw Error("no structure/manifest pairs under " + corpus);
    // run files concurrently, print in deterministic order
    std::vector<std::future<ClaimsReport>> futures;
    futures.reserve(files.size());
    for (const auto& [alg, cl] : files)
        futures.push_back(std::async(std::launch::async,
                                     [alg = alg, cl = cl] { return run_claims_file(alg, cl); }));
    int failed = 0, passed = 0;
    json report = json::array();
    for (auto& fut : futures) {
        const ClaimsReport r = fut.get();
        passed += r.passed;
        failed += r.failed;
        if (json_out) {
            json entry;
            entry["structure"] = r.structure_name;
            json claims = json::array();
            for (const auto& c : r.results) {
                json one;
                one["name"] = c.name;
                one["pass"] = c.pass;
                if (!c.detail.empty()) one["detail"] = c.detail;
                claims.push_back(one);
            }
            entry["claims"] = claims;
            report.push_back(entry);
        } else {
            std::cout << "== " << r.structure_name << " ==\n";
            for (const auto& c : r.results) {
                std::cout << (c.pass ? "  ok   " : "  FAIL ") << c.name;
                if (!c.pass && !c.detail.empty()) std::cout << " — " << c.detail;
                std::cout << "\n";
            }
        }
    }
    if (json_out) {
        json out;
        out["structures"] = report;
        out["passed"] = passed;
        out["failed"] = failed;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << passed << " claim(s) ok, " << failed << " failing\n";
    }
    return failed == 0 ? 0 : 1;
}

int cmd_convert(const std::string& input, const std::string& to, const std::string& out_path) {
    const Structure s = load_structure(input);
    if (to == "json") write_or_print(emit_json_text(s) + "\n", out_path);
    else if (to == "text") write_or_print(emit_text(s), out_path);
    else throw Error("unknown target format: " + to);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite order-algebra workbench"};
    app.require_subcommand(1);
    app.fallthrough(); // lets --json appear after the subcommand name
    bool json_out = false;
    app.add_flag("--json", json_out, "machine-readable output");

    std::string input, system, mode = "algebraic", kind = "filter", partition, at, op = "none";
    std::string eval_expr, bind, lhs, rhs, ident_mode = "strict", ideal_family, ideal_set;
    std::string emit_dir, out_path, corpus = "corpus", only, passes, fails, to = "text";
    std::string cx, cy;
    bool count_only = false, force = false, dot = false, maltsev = false, table_first = false;
    int size = 3, max_size = 6;

    auto* c_check = app.add_subcommand("check", "check one axiom system");
    c_check->add_option("--input,-i", input)->required();
    c_check->add_option("--system,-s", system)->required();

    auto* c_classify = app.add_subcommand("classify", "check every axiom system");
    c_classify->add_option("--input,-i", input)->required();

    auto* c_facts = app.add_subcommand("facts", "check the standard derived laws");
    c_facts->add_option("--input,-i", input)->required();

    auto* c_cones = app.add_subcommand("cones", "inspect cones and residual candidates");
    c_cones->add_option("--input,-i", input)->required();
    c_cones->add_option("--x", cx)->required();
    c_cones->add_option("--y", cy)->required();

    auto* c_cong = app.add_subcommand("congruences", "enumerate congruences");
    c_cong->add_option("--input,-i", input)->required();
    c_cong->add_option("--mode,-m", mode,
                       "algebraic | min-stable | strong | full-signature");
    c_cong->add_flag("--count-only", count_only);

    auto* c_filt = app.add_subcommand("filters", "enumerate filters");
    c_filt->add_option("--input,-i", input)->required();
    c_filt->add_option("--kind,-k", kind, "lattice | star | filter | strong");
    c_filt->add_flag("--count-only", count_only);

    auto* c_corr = app.add_subcommand("correspondence",
                                      "verify the congruence/filter correspondence");
    c_corr->add_option("--input,-i", input)->required();

    auto* c_quot = app.add_subcommand("quotient", "build a quotient structure");
    c_quot->add_option("--input,-i", input)->required();
    c_quot->add_option("--partition,-p", partition, "e.g. \"{a,b|c|1}\"")->required();
    c_quot->add_flag("--force-preorder", force,
                     "skip the strong-congruence requirement (diagnostic)");
    c_quot->add_option("--output,-o", out_path);

    auto* c_cons = app.add_subcommand("construct", "derive a structure from another");
    c_cons->add_option("--input,-i", input)->required();
    c_cons->add_option("--op", op,
                       "trivial | pst | closed | section | dual | product-to-star | "
                       "star-to-product | none");
    c_cons->add_option("--at", at, "section base element (op=section)");
    c_cons->add_flag("--dot", dot, "emit the order diagram in DOT form");
    c_cons->add_option("--output,-o", out_path);

    auto* c_term = app.add_subcommand("term", "evaluate terms and identities");
    c_term->add_option("--input,-i", input)->required();
    c_term->add_option("--eval", eval_expr, "prefix term, e.g. \"(star x y)\"");
    c_term->add_option("--bind", bind, "comma list x=a,y=b");
    c_term->add_option("--lhs", lhs);
    c_term->add_option("--rhs", rhs);
    c_term->add_option("--mode", ident_mode, "strict | defined-only");
    c_term->add_flag("--maltsev", maltsev, "run the majority-style certificate");
    c_term->add_option("--ideal", ideal_family, "ideal-term family: lattice | partial");
    c_term->add_option("--set", ideal_set, "candidate set, e.g. \"d,e,f,1\"");

    auto* c_search = app.add_subcommand("search", "enumerate or separate models");
    c_search->add_option("--system,-s", system);
    c_search->add_option("--size,-n", size);
    c_search->add_flag("--count-only", count_only);
    c_search->add_flag("--table-first", table_first, "independent brute-force strategy");
    c_search->add_option("--emit", emit_dir, "write models to this directory");
    c_search->add_option("--passes", passes, "counterexample: system that must hold");
    c_search->add_option("--fails", fails, "counterexample: system that must break");
    c_search->add_option("--max", max_size, "counterexample: largest size to try");

    auto* c_verify = app.add_subcommand("verify-paper",
                                        "run every bundled structure's claim manifest");
    c_verify->add_option("--corpus", corpus, "directory with .alg/.claims.json pairs");
    c_verify->add_option("--only", only, "restrict to one structure by stem name");

    auto* c_conv = app.add_subcommand("convert", "reformat a structure file");
    c_conv->add_option("--input,-i", input)->required();
    c_conv->add_option("--to", to, "text | json");
    c_conv->add_option("--output,-o", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_check->parsed()) return cmd_check(input, system, json_out);
        if (c_classify->parsed()) return cmd_classify(input, json_out);
        if (c_facts->parsed()) return cmd_facts(input, json_out);
        if (c_cones->parsed()) return cmd_cones(input, cx, cy, json_out);
        if (c_cong->parsed()) return cmd_congruences(input, mode, count_only, json_out);
        if (c_filt->parsed()) return cmd_filters(input, kind, count_only, json_out);
        if (c_corr->parsed()) return cmd_correspondence(input, json_out);
        if (c_quot->parsed()) return cmd_quotient(input, partition, force, out_path);
        if (c_cons->parsed()) return cmd_construct(input, op, at, dot, out_path);
        if (c_term->parsed())
            return cmd_term(input, eval_expr, bind, lhs, rhs, ident_mode, maltsev,
                            ideal_family, ideal_set, json_out);
        if (c_search->parsed())
            return cmd_search(system, size, count_only, table_first, emit_dir, passes, fails,
                              max_size, json_out);
        if (c_verify->parsed()) return cmd_verify(corpus, only, json_out);
        if (c_conv->parsed()) return cmd_convert(input, to, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
