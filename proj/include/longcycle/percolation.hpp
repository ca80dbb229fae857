#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "longcycle/host_graph.hpp"
#include "longcycle/rng.hpp"

namespace longcycle {

enum class edge_status : std::uint8_t { untested, present, absent };

// Lazy memoized Bernoulli(p) revelation of host edges. Each edge consumes at
// most one random draw over the oracle's lifetime; statuses never revert.
// One oracle per trial, never shared between threads.
class percolation_oracle {
public:
    percolation_oracle(const host_graph& host, double p, std::uint64_t seed);

    edge_status test_edge(vertex_id u, vertex_id v);
    edge_status status(vertex_id u, vertex_id v) const;

    // Neighbors w of v with (v,w) untested, ascending. Consumes no randomness.
    std::vector<vertex_id> untested_incident(vertex_id v) const;

    std::uint32_t untested_degree(vertex_id v) const;

    std::uint64_t tested_count() const noexcept { return statuses_.size(); }
    std::uint64_t present_count() const noexcept { return present_count_; }
    std::uint64_t absent_count() const noexcept { return statuses_.size() - present_count_; }
    std::uint64_t draw_count() const noexcept { return rng_.draws(); }

    double p() const noexcept { return p_; }
    const host_graph& host() const noexcept { return *host_; }

    // Edges revealed present so far, canonical ascending order.
    std::vector<edge_key> present_edges() const;

    // All tested edges with their status, unordered.
    std::vector<std::pair<edge_key, edge_status>> tested_edges() const;

private:
    void require_host_edge(vertex_id u, vertex_id v) const;

    const host_graph* host_;
    double p_;
    counter_rng rng_;
    std::unordered_map<std::uint64_t, edge_status> statuses_; // only tested edges
    std::uint64_t present_count_ = 0;
};

} // namespace longcycle
