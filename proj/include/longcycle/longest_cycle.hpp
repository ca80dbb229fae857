#pragma once

#include <cstdint>

#include "longcycle/cycle_builder.hpp"
#include "longcycle/host_graph.hpp"

namespace longcycle {

struct brute_force_result {
    std::uint32_t length = 0; // 0 when the graph is acyclic
    std::optional<cycle> witness;
};

// Exact longest cycle by exhaustive simple-path backtracking. Each cycle is
// enumerated once from its minimum vertex, walking only higher-numbered
// vertices. Exponential: refuses n > 16 unless override_guard is set, and
// n > 64 always (visited set is a 64-bit mask).
brute_force_result longest_cycle_brute_force(const host_graph& graph, bool override_guard = false);

// Early-exit variant: stops at the first cycle of length >= target.
bool cycle_exists_of_length_at_least(const host_graph& graph, std::uint32_t target,
                                     bool override_guard = false);

} // namespace longcycle
