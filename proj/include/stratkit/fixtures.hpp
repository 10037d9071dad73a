#pragma once

#include "stratkit/rep.hpp"
#include "stratkit/smith.hpp"

#include <map>
#include <string>
#include <vector>

namespace stratkit {

// Built-in worked examples: a three-cycle Nakayama algebra with cube-zero
// radical (EX1) and a two-cycle special biserial algebra (EX2), together with
// their module zoos and the recorded matrices the self test replays.
struct GoldenCase {
    std::string id;                    // "EX1.A", "EX1.M", "EX2.A"
    std::string algebra;               // registry name
    std::vector<std::string> summands; // module names in TF order
    MatZ C, G, S, R;
    std::vector<std::vector<int>> delta_dims, k_dims, q_dims, u_dims;
    std::string group_structure;       // e.g. "0", "Z/2 + Z/2"
    std::string group_order;
    bool minfd_all_true = false;
    std::vector<std::string> notes;    // documented discrepancies to surface
    std::optional<MatZ> printed_g;     // recorded variant that fails C = GtS + R
    std::optional<std::string> coker_s_structure;  // when hypotheses hold
};

struct FixtureInfo {
    std::string name;
    std::string algebra_json;          // document text, also shipped as a file
    std::vector<std::string> zoo;      // module names for the pairing suite
    std::vector<std::string> sweep_zoo;  // module names for subset sweeps
    std::vector<std::string> notes;
};

bool is_fixture_name(const std::string& name);
const FixtureInfo& fixture_info(const std::string& name);

// resolves fixture-scoped module names like "EX1.M2" or "EX1.W12"
Representation fixture_module(const AlgebraPtr& alg, const std::string& fixture,
                              const std::string& local_name);
// display names the reporter may match modules against, in resolution order
std::vector<std::string> fixture_label_candidates(const std::string& fixture);

const std::vector<GoldenCase>& golden_cases();

}  // namespace stratkit
