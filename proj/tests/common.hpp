#pragma once

// Shared fixtures: bundled-structure loading and the frozen expectations
// produced by the independent reference implementation.

#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include <ordalg/codec.hpp>
#include <ordalg/structure.hpp>

namespace tt {

using nlohmann::json;

inline const std::vector<std::string>& stems() {
    static const std::vector<std::string> s = {
        "lat7_alt", "lat7_nonstrong", "lat7_spc",    "mo2",
        "o6",       "pos6_nonstrong", "pos7_phigap", "pos8_minstable",
    };
    return s;
}

inline const std::vector<std::string>& lattice_stems() {
    static const std::vector<std::string> s = {"lat7_alt", "lat7_nonstrong", "lat7_spc", "mo2",
                                               "o6"};
    return s;
}

// The bundled structures that satisfy the strong variant.
inline const std::vector<std::string>& strong_stems() {
    static const std::vector<std::string> s = {"lat7_alt", "lat7_spc", "mo2", "o6"};
    return s;
}

inline std::string corpus_path(const std::string& stem) {
    return std::string(ORDALG_CORPUS_DIR) + "/" + stem + ".alg";
}

inline ordalg::Structure load(const std::string& stem) {
    return ordalg::parse_file(corpus_path(stem));
}

inline const json& expected() {
    static const json j = [] {
        std::ifstream in(ORDALG_EXPECTED_JSON);
        json parsed;
        in >> parsed;
        return parsed;
    }();
    return j;
}

// Label array -> index tuple.
inline std::vector<int> idx(const ordalg::Carrier& c, const json& labels) {
    std::vector<int> out;
    for (const auto& l : labels) out.push_back(c.require(l.get<std::string>()));
    return out;
}

// Label array -> bitmask.
inline ordalg::Bits mask(const ordalg::Carrier& c, const json& labels) {
    ordalg::Bits m = 0;
    for (const auto& l : labels) m |= ordalg::bit(c.require(l.get<std::string>()));
    return m;
}

inline std::set<std::pair<int, int>> pair_set(const ordalg::Carrier& c, const json& pairs) {
    std::set<std::pair<int, int>> out;
    for (const auto& p : pairs)
        out.insert({c.require(p[0].get<std::string>()), c.require(p[1].get<std::string>())});
    return out;
}

} // namespace tt
