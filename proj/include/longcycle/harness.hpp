#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "longcycle/cycle_builder.hpp"
#include "longcycle/host_graph.hpp"

namespace longcycle {

enum class host_family { complete, hypercube, regular, circulant, file };

const char* to_string(host_family family);

// True when hosts of the family depend on the sampling seed.
bool family_is_random(host_family family);

struct host_spec {
    host_family family = host_family::complete;
    vertex_id n = 0;                    // complete, regular, circulant
    std::uint32_t d = 0;                // regular
    std::uint32_t dim = 0;              // hypercube
    std::vector<std::uint32_t> offsets; // circulant
    std::string path;                   // file
    bool fix_host = false;              // sample one host and reuse it for every trial
};

host_graph build_host(const host_spec& spec, std::uint64_t seed);

struct trial_config {
    host_spec host;
    std::optional<double> p; // exactly one of p and c must be set
    std::optional<double> c; // p = min(1, c/k)
    double eps = 0.05;
    std::uint64_t trials = 1;
    std::uint64_t base_seed = 1;
    double height_C = 1.0; // height diagnostic cutoff, as a multiple of k
    std::uint32_t workers = 1;
};

struct trial_record {
    std::uint64_t trial = 0;
    std::uint32_t n = 0;
    std::uint32_t k = 0; // host minimum degree
    double p = 0.0;
    std::uint64_t tested_edges = 0; // during exploration, before cycle probes
    double tested_bound = 0.0;      // 2n/p, +inf when p = 0
    bool lemma3_ok = false;
    double frac_full = 0.0;
    std::uint64_t poor_count = 0;
    std::uint64_t heavy_count = 0;
    double frac_height_ge_Ck = 0.0;
    bool path_found = false;
    std::int64_t path_bad_count = -1; // -1 when no window was measured
    search_branch branch = search_branch::chord_chain;
    std::uint64_t cycle_length = 0; // best assembled length even on failure
    bool success = false;
    std::string failure_reason = "none";
    double elapsed_ms = 0.0;
};

extern const char* const csv_header;

using trial_observer = std::function<void(const trial_record&)>;

// Runs config.trials independent trials; trial t percolates with seed
// mix_seed(base_seed, t) and (for random families unless fixed) samples its
// host with seed mix_seed(base_seed, t, 1). Records are returned in trial
// order regardless of worker scheduling. A non-empty observer forces
// sequential execution so callbacks arrive in order.
std::vector<trial_record> run_trials(const trial_config& config,
                                     const trial_observer& on_record = {});

std::string record_to_csv_line(const trial_record& record);
std::string records_to_csv(const std::vector<trial_record>& records);
std::vector<trial_record> parse_csv(const std::string& text);

struct group_summary {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    double p = 0.0;
    std::uint64_t trials = 0;
    double success_rate = 0.0;
    double mean_cycle_length = 0.0;
    // Nearest-rank quantiles of cycle_length: rank ceil(q * trials), 1-based.
    std::uint64_t min_cycle_length = 0;
    std::uint64_t q25_cycle_length = 0;
    std::uint64_t median_cycle_length = 0;
    std::uint64_t q75_cycle_length = 0;
    std::uint64_t max_cycle_length = 0;
    double lemma3_rate = 0.0;
    double mean_frac_full = 0.0;
};

struct sweep_summary {
    std::vector<group_summary> groups; // ascending by (n, k, p)
};

sweep_summary summarize(const std::vector<trial_record>& records);
std::string summary_to_string(const sweep_summary& summary);

struct oracle_comparison {
    std::uint64_t trial = 0;
    bool success = false;
    std::uint64_t builder_length = 0; // 0 when the trial found no cycle
    std::uint32_t oracle_length = 0;  // exact longest cycle of the revealed subgraph
    bool ok = true;                   // valid cycle and within the oracle bound
};

struct validation_report {
    std::vector<oracle_comparison> rows;
    std::uint64_t checked = 0;  // trials that produced a cycle
    std::uint64_t failures = 0; // invalid cycles or lengths above the oracle
    bool all_ok() const noexcept { return failures == 0; }
};

// Re-runs each trial sequentially and compares any produced cycle against
// the brute-force longest cycle of the revealed subgraph (present edges).
validation_report validate_against_oracle(const trial_config& config);
std::string report_to_string(const validation_report& report);

} // namespace longcycle
