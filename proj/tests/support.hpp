#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "longcycle/cycle_builder.hpp"
#include "longcycle/errors.hpp"
#include "longcycle/forest.hpp"
#include "longcycle/host_graph.hpp"
#include "longcycle/rng.hpp"

namespace testsupport {

// True iff fn throws a longcycle::error with exactly this code.
template <typename Fn>
bool throws_code(longcycle::errc code, Fn&& fn) {
    try {
        fn();
    } catch (const longcycle::error& e) {
        return e.code() == code;
    } catch (...) {
        return false;
    }
    return false;
}

// Path 0-1-...-(n-1) plus the given extra edges.
inline longcycle::host_graph path_host(longcycle::vertex_id n,
                                       std::vector<std::pair<longcycle::vertex_id, longcycle::vertex_id>> extra = {}) {
    std::vector<std::pair<longcycle::vertex_id, longcycle::vertex_id>> edges;
    for (longcycle::vertex_id v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    edges.insert(edges.end(), extra.begin(), extra.end());
    return longcycle::host_graph::from_edges(n, edges);
}

// Single chain 0 -> 1 -> ... -> (n-1) rooted at 0.
inline longcycle::rooted_forest path_forest(longcycle::vertex_id n) {
    std::vector<longcycle::vertex_id> parent(n, longcycle::no_vertex);
    for (longcycle::vertex_id v = 1; v < n; ++v)
        parent[v] = v - 1;
    return longcycle::rooted_forest::from_parents(parent);
}

// Random chord chain over a path forest (vertex id == depth), satisfying the
// interleaving invariant, plus the cycle length the assembly must produce.
struct chain_sample {
    longcycle::chord_chain chain;
    std::uint64_t expected_length = 0;
    longcycle::vertex_id path_vertices = 0; // forest size the chain needs
};

inline chain_sample random_interleaving_chain(longcycle::counter_rng& rng) {
    using longcycle::vertex_id;
    const std::uint32_t count = 1 + static_cast<std::uint32_t>(rng.next_below(8));

    // Walk upwards: each next chord starts overlap vertices below the previous
    // upper endpoint and must end strictly above it, so spans stay >= 2 and
    // the connecting segments never collide.
    std::vector<std::uint32_t> pos_lower, pos_upper;
    std::uint32_t depth = 3000;
    std::uint32_t span = 2 + static_cast<std::uint32_t>(rng.next_below(40));
    pos_lower.push_back(depth);
    pos_upper.push_back(depth - span);
    std::uint32_t overlap = 0;
    for (std::uint32_t i = 1; i < count; ++i) {
        // The new lower endpoint must clear both the previous lower endpoint
        // (first step, overlap == 0) and the segment reserved two chords back
        // (later steps); either way at least one slot remains.
        const std::uint32_t room = span - (overlap > 0 ? overlap : 1);
        overlap = 1 + static_cast<std::uint32_t>(rng.next_below(room));
        span = overlap + 1 + static_cast<std::uint32_t>(rng.next_below(40));
        const std::uint32_t lower = pos_upper.back() + overlap;
        pos_lower.push_back(lower);
        pos_upper.push_back(lower - span);
    }

    chain_sample out;
    for (std::uint32_t i = 0; i < count; ++i)
        out.chain.chords.push_back({pos_lower[i], pos_upper[i], pos_lower[i] - pos_upper[i]});
    out.path_vertices = pos_lower.front() + 1;

    std::uint64_t edges = count; // one edge per chord
    if (count == 1) {
        edges += pos_lower[0] - pos_upper[0];
    } else {
        edges += pos_lower[0] - pos_lower[1];
        for (std::uint32_t i = 1; i + 1 < count; ++i)
            edges += pos_upper[i - 1] - pos_lower[i + 1];
        edges += pos_upper[count - 2] - pos_upper[count - 1];
    }
    out.expected_length = edges;
    return out;
}

} // namespace testsupport
