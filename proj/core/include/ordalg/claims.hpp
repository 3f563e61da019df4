#pragma once

#include <string>
#include <vector>

#include "ordalg/structure.hpp"

namespace ordalg {

// One checked fact about a structure, loaded from a sidecar manifest.  The
// runner never throws for a failing fact; library errors are folded into a
// failing result with the message as detail.
struct ClaimResult {
    std::string name;
    bool pass = false;
    std::string detail; // empty on pass unless informational
};

struct ClaimsReport {
    std::string structure_name;
    std::vector<ClaimResult> results;
    int passed = 0;
    int failed = 0;
};

// Run every claim in the JSON manifest text against s.  See the manifest
// files next to the bundled structures for the supported "kind" values.
std::vector<ClaimResult> run_claims(const Structure& s, const std::string& manifest_json);

// Convenience wrapper: parse the structure file and its sidecar manifest
// ("<stem>.claims.json") and run everything.
ClaimsReport run_claims_file(const std::string& alg_path, const std::string& claims_path);

} // namespace ordalg
