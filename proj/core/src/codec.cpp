#include "ordalg/codec.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ordalg {
namespace {

const char* kKeywords[] = {"elements", "top", "bottom", "order", "comp",
                           "star", "join", "meet"};

bool is_keyword(const std::string& s) {
    for (const char* k : kKeywords)
        if (s == k) return true;
    return false;
}

std::string strip(const std::string& in) {
    size_t b = in.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = in.find_last_not_of(" \t\r\n");
    return in.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& in) {
    std::vector<std::string> out;
    std::istringstream is(in);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

struct RawFile {
    std::vector<std::string> elements;
    std::string top;
    std::string bottom; // "" when absent
    std::vector<std::pair<std::string, std::string>> order_pairs;
    bool order_given = false;
    std::vector<std::string> comp; // empty when absent
    // row label -> values, in declaration order
    std::vector<std::pair<std::string, std::vector<std::string>>> star, join, meet;
    bool star_given = false, join_given = false, meet_given = false;
};

Structure realize(const RawFile& raw) {
    if (raw.elements.empty()) throw ParseError(0, "no elements: line");
    Carrier carrier(raw.elements);
    int n = carrier.size();
    if (raw.top.empty()) throw ParseError(0, "no top: line");
    int one = carrier.require(raw.top);
    if (!raw.order_given && !raw.star_given)
        throw MissingComponent("need an order: line or a star: block");

    auto table_of = [&](const std::vector<std::pair<std::string, std::vector<std::string>>>& rows,
                        const char* what) {
        std::vector<std::vector<int>> t(n);
        std::vector<bool> seen(n, false);
        for (const auto& [label, vals] : rows) {
            int r = carrier.require(label);
            if (seen[r]) throw DuplicateLabel(label);
            seen[r] = true;
            if (static_cast<int>(vals.size()) != n)
                throw MissingTable(std::string(what) + " row for " + label + " has " +
                                   std::to_string(vals.size()) + " entries, expected " +
                                   std::to_string(n));
            for (const auto& v : vals) t[r].push_back(carrier.require(v));
        }
        for (int i = 0; i < n; ++i)
            if (!seen[i]) throw MissingTable(std::string(what) + " row for " + carrier.label(i));
        return t;
    };

    std::vector<std::vector<int>> star;
    if (raw.star_given) star = table_of(raw.star, "star");

    Poset poset;
    if (raw.order_given) {
        std::vector<std::pair<int, int>> pairs;
        for (const auto& [a, b] : raw.order_pairs)
            pairs.emplace_back(carrier.require(a), carrier.require(b));
        poset = Poset::from_pairs(n, pairs);
    } else {
        poset = induced_poset(star, one);
    }

    std::vector<int> comp;
    for (const auto& v : raw.comp) comp.push_back(carrier.require(v));

    Structure s(std::move(carrier), std::move(poset), std::move(star), one, std::move(comp));

    if (raw.order_given && raw.star_given) {
        Verdict v = s.order_agrees_with_table();
        if (!v.pass) throw ParseError(0, v.detail);
    }
    if (!raw.bottom.empty()) {
        int z = s.carrier().require(raw.bottom);
        if (!s.zero() || *s.zero() != z)
            throw ParseError(0, "declared bottom " + raw.bottom +
                                    " is not the least element of the order");
    }
    // join/meet blocks are redundant; check them against the order and drop.
    auto check_bounds = [&](const std::vector<std::pair<std::string, std::vector<std::string>>>& rows,
                            bool is_join) {
        auto t = table_of(rows, is_join ? "join" : "meet");
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                auto b = is_join ? s.join(x, y) : s.meet(x, y);
                if (!b || *b != t[x][y])
                    throw ParseError(0, std::string(is_join ? "join" : "meet") +
                                            " table disagrees with the order at " +
                                            render_witness(s.carrier(), {x, y}));
            }
    };
    if (raw.join_given) check_bounds(raw.join, true);
    if (raw.meet_given) check_bounds(raw.meet, false);
    return s;
}

} // namespace

Structure parse_text(const std::string& text) {
    RawFile raw;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::string block; // "", "star", "join", "meet"

    auto block_rows = [&](const std::string& b) -> auto& {
        return b == "star" ? raw.star : (b == "join" ? raw.join : raw.meet);
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = strip(line);
        if (line.empty()) continue;

        size_t colon = line.find(':');
        // A colon inside a label (e.g. none we expect) is not supported; the
        // first colon splits key from payload.
        if (colon == std::string::npos)
            throw ParseError(lineno, "expected 'key: value' or a table row");
        std::string key = strip(line.substr(0, colon));
        std::string rest = strip(line.substr(colon + 1));

        if (is_keyword(key)) {
            block.clear();
            if (key == "elements") {
                if (!raw.elements.empty()) throw ParseError(lineno, "repeated elements: line");
                raw.elements = split_ws(rest);
                for (const auto& l : raw.elements)
                    if (is_keyword(l))
                        throw ParseError(lineno, "label '" + l + "' collides with a keyword");
                if (raw.elements.empty()) throw ParseError(lineno, "elements: line is empty");
            } else if (key == "top") {
                raw.top = rest;
            } else if (key == "bottom") {
                raw.bottom = rest;
            } else if (key == "order") {
                raw.order_given = true;
                for (const auto& tok : split_ws(rest)) {
                    size_t lt = tok.find('<');
                    if (lt == std::string::npos || lt == 0 || lt + 1 >= tok.size())
                        throw ParseError(lineno, "order pair '" + tok + "' is not of form x<y");
                    raw.order_pairs.emplace_back(tok.substr(0, lt), tok.substr(lt + 1));
                }
            } else if (key == "comp") {
                raw.comp = split_ws(rest);
            } else { // star / join / meet block opener
                auto& flag = key == "star" ? raw.star_given
                                           : (key == "join" ? raw.join_given : raw.meet_given);
                if (flag) throw ParseError(lineno, "repeated " + key + ": block");
                flag = true;
                block = key;
                if (!rest.empty()) throw ParseError(lineno, key + ": takes no inline payload");
            }
        } else {
            if (block.empty())
                throw ParseError(lineno, "unknown key '" + key + "'");
            block_rows(block).emplace_back(key, split_ws(rest));
        }
    }
    if (raw.elements.empty()) throw ParseError(0, "no elements: line");
    try {
        return realize(raw);
    } catch (const ParseError&) {
        throw;
    }
}

Structure parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str());
}

std::string emit_text(const Structure& s) {
    std::ostringstream out;
    const Carrier& c = s.carrier();
    int n = s.size();
    out << "elements:";
    for (int i = 0; i < n; ++i) out << ' ' << c.label(i);
    out << "\n";
    out << "top: " << c.label(s.one()) << "\n";
    if (s.zero()) out << "bottom: " << c.label(*s.zero()) << "\n";
    out << "order:";
    for (auto [x, y] : s.poset().covers()) out << ' ' << c.label(x) << '<' << c.label(y);
    out << "\n";
    if (s.has_comp()) {
        out << "comp:";
        for (int i = 0; i < n; ++i) out << ' ' << c.label(s.comp(i));
        out << "\n";
    }
    if (s.has_star()) {
        out << "star:\n";
        for (int x = 0; x < n; ++x) {
            out << c.label(x) << ':';
            for (int y = 0; y < n; ++y) out << ' ' << c.label(s.star(x, y));
            out << "\n";
        }
    }
    return out.str();
}

Structure parse_json_text(const std::string& json) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    RawFile raw;
    try {
        if (j.contains("elements"))
            for (const auto& e : j.at("elements")) raw.elements.push_back(e.get<std::string>());
        for (const auto& l : raw.elements)
            if (is_keyword(l)) throw ParseError(0, "label '" + l + "' collides with a keyword");
        if (j.contains("top")) raw.top = j.at("top").get<std::string>();
        if (j.contains("bottom")) raw.bottom = j.at("bottom").get<std::string>();
        if (j.contains("order")) {
            raw.order_given = true;
            for (const auto& p : j.at("order")) {
                if (!p.is_array() || p.size() != 2)
                    throw ParseError(0, "order entries must be [x, y] pairs");
                raw.order_pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
            }
        }
        if (j.contains("comp"))
            for (const auto& e : j.at("comp")) raw.comp.push_back(e.get<std::string>());
        auto rows_of = [&](const char* key,
                           std::vector<std::pair<std::string, std::vector<std::string>>>& rows,
                           bool& flag) {
            if (!j.contains(key)) return;
            flag = true;
            for (const auto& [label, vals] : j.at(key).items()) {
                std::vector<std::string> row;
                for (const auto& v : vals) row.push_back(v.get<std::string>());
                rows.emplace_back(label, std::move(row));
            }
        };
        rows_of("star", raw.star, raw.star_given);
        rows_of("join", raw.join, raw.join_given);
        rows_of("meet", raw.meet, raw.meet_given);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("malformed field: ") + e.what());
    }
    return realize(raw);
}

std::string emit_json_text(const Structure& s) {
    nlohmann::json j;
    const Carrier& c = s.carrier();
    int n = s.size();
    j["elements"] = c.labels();
    j["top"] = c.label(s.one());
    if (s.zero()) j["bottom"] = c.label(*s.zero());
    auto& order = j["order"] = nlohmann::json::array();
    for (auto [x, y] : s.poset().covers())
        order.push_back({c.label(x), c.label(y)});
    if (s.has_comp()) {
        auto& comp = j["comp"] = nlohmann::json::array();
        for (int i = 0; i < n; ++i) comp.push_back(c.label(s.comp(i)));
    }
    if (s.has_star()) {
        auto& star = j["star"] = nlohmann::json::object();
        for (int x = 0; x < n; ++x) {
            auto& row = star[c.label(x)] = nlohmann::json::array();
            for (int y = 0; y < n; ++y) row.push_back(c.label(s.star(x, y)));
        }
    }
    return j.dump(2) + "\n";
}

} // namespace ordalg
