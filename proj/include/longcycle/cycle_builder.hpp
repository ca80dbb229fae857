#pragma once

#include <optional>
#include <vector>

#include "longcycle/dfs_explorer.hpp"
#include "longcycle/forest_analysis.hpp"

namespace longcycle {

// Revealed present edge joining a vertex to one of its ancestors.
struct chord {
    vertex_id lower;    // deeper endpoint
    vertex_id upper;    // ancestor endpoint
    std::uint32_t span; // vertical distance between them
};

// Chords climbing a common vertical path: each next chord starts strictly
// between the previous chord's endpoints and ends strictly above it.
struct chord_chain {
    std::vector<chord> chords;
};

// Cyclic vertex sequence; consecutive pairs are forest parent edges or
// revealed present host edges.
struct cycle {
    std::vector<vertex_id> vertices;
    std::size_t length() const noexcept { return vertices.size(); }
};

enum class search_branch { long_condition, chord_chain };

const char* to_string(search_branch branch);

enum class failure_reason {
    no_full_vertices,
    no_vertical_path,
    bad_count_exceeded,
    chord_probe_failed,
    target_length_missed,
};

const char* to_string(failure_reason reason);

struct search_failure {
    failure_reason reason;
    std::uint32_t step = 0; // chain step, for chord_probe_failed
};

struct cycle_search_outcome {
    search_branch branch = search_branch::chord_chain;
    std::optional<cycle> found;
    std::optional<search_failure> failure;
    std::uint64_t best_length = 0; // longest cycle assembled, even on failure

    bool success() const noexcept { return found.has_value(); }
};

// Exploration artifacts exposed for measurement alongside the outcome.
struct cycle_search_trace {
    exploration_result exploration;
    classification_table table;
    std::optional<vertical_path_search> path_search;
};

// Untested partners of v at vertical distance >= t_long, ordered by
// decreasing distance (ascending id on ties).
std::vector<vertex_id> long_condition_candidates(const percolation_oracle& oracle,
                                                 const rooted_forest& forest, vertex_id v,
                                                 const thresholds& th);

// Scans vertices in id order for one with at least ceil(eps*k) long-distance
// untested partners, then probes those partners farthest first; the first
// present edge closes the tree path into a cycle. nullopt when no vertex
// qualifies or every probe fails.
std::optional<cycle> try_long_condition(percolation_oracle& oracle, const rooted_forest& forest,
                                        const classification_table& table, const thresholds& th);

// Ancestors u of v with (u,v) untested, chord_min <= d(u,v) <= d_cut, and u
// on the path; ascending by distance. v must lie on the path.
std::vector<vertex_id> candidate_set_U(const percolation_oracle& oracle, const rooted_forest& forest,
                                       const vertical_path& path, vertex_id v, const thresholds& th);

struct chain_result {
    chord_chain chain;
    std::optional<search_failure> failure; // no_full_vertices or chord_probe_failed
};

// Builds the chord chain bottom-up: v_0 is the lowest vertex of z on the
// path; each step probes candidate ancestors farthest first and then hops
// down to the first usable z vertex below the new chord top. Stops after
// m_max+1 chords, near the path top, or when no usable z vertex remains.
chain_result chain_chords(percolation_oracle& oracle, const rooted_forest& forest,
                          const vertical_path& path, const std::vector<vertex_id>& z,
                          const thresholds& th);

// Joins the chain's chords with the connecting path segments into one simple
// cycle and checks the degree-2 union along the way.
cycle assemble_cycle(const chord_chain& chain, const rooted_forest& forest);

// Full pipeline: explore, classify, try the long-distance branch, otherwise
// search a vertical path and chain chords along it. Never throws for
// in-domain inputs; failures are outcome values.
cycle_search_outcome find_long_cycle(const host_graph& host, percolation_oracle& oracle,
                                     const thresholds& th, cycle_search_trace* trace = nullptr);

bool is_valid_cycle(const cycle& c, const host_graph& host, const percolation_oracle& oracle,
                    const rooted_forest& forest);

} // namespace longcycle
