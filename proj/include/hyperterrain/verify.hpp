#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "hyperterrain/exact.hpp"
#include "hyperterrain/generators.hpp"
#include "hyperterrain/graph.hpp"

namespace hyperterrain {

struct SuiteConfig {
    std::uint64_t seed = 1;
    // exhaustive when the quantified tuple space fits, seeded sampling above
    std::int64_t exhaustive_limit = 10000000;
    std::int64_t sample_budget = 100000;
    int path_samples = 500;       // sampled shortest paths per graph
    int disk_samples = 200;       // sampled disks for CVX-1
    int disk_pair_samples = 100;  // sampled disk pairs for CVX-3
    std::vector<int> enclosure_ks = {0, 1, 2};
    int path_enum_max_n = 40;     // enumerate all shortest paths up to this n
    std::int64_t path_enum_budget = 1000000;
    int extra_starts = 4;         // sampled sweep starts besides vertex 0
    OracleLimits limits;
    int threads = 0;  // 0 = per-environment default
};

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckOutcome {
    std::string check_id;
    CheckStatus status = CheckStatus::Pass;
    std::int64_t tested_instances = 0;
    bool exhaustive = true;  // false when any quantifier was sampled
    nlohmann::json witness;  // structured counterexample on failure
    std::string note;
};

struct VerificationReport {
    std::string graph_id;
    int n = 0;
    std::int64_t m = 0;
    int rad = 0;
    int diam = 0;
    int delta2 = 0;
    std::uint64_t seed = 0;
    std::vector<CheckOutcome> checks;  // sorted by check_id

    bool all_pass() const;
    nlohmann::json to_json() const;
};

/// Every check id in report order.
std::vector<std::string> check_registry();

/// Runs the whole registry against one graph with the exact oracle as ground
/// truth. Throws SizeLimitExceeded when the graph is over the oracle caps.
VerificationReport run_suite(const Graph& g, const std::string& graph_id, const SuiteConfig& config);

/// Re-derives a failed check's inequality from fresh BFS sweeps only; true
/// when the witness still violates the claimed bound.
bool reverify_witness(const Graph& g, const std::string& check_id, const nlohmann::json& witness);

struct CorpusEntry {
    std::string id;
    FamilySpec spec;
};

/// The default corpus: {path, cycle, grid, random_tree, gnm 2n, gnm 4n} at
/// n in {20,40,60,80} (seeds 1..5 for the seeded families) plus fig3(k,p)
/// for k in {1,2,3}, p in {1,2}.
std::vector<CorpusEntry> default_corpus();

struct CorpusReport {
    std::uint64_t seed = 0;
    std::vector<VerificationReport> graphs;

    bool all_pass() const;
    nlohmann::json to_json() const;
};

CorpusReport run_corpus(const std::vector<CorpusEntry>& corpus, const SuiteConfig& config);

}  // namespace hyperterrain
