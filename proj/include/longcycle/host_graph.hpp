#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace longcycle {

using vertex_id = std::uint32_t;

inline constexpr vertex_id no_vertex = static_cast<vertex_id>(-1);

// Canonical unordered vertex pair, lo < hi.
struct edge_key {
    vertex_id lo;
    vertex_id hi;

    edge_key(vertex_id u, vertex_id v) : lo(u < v ? u : v), hi(u < v ? v : u) {}

    friend bool operator==(const edge_key&, const edge_key&) = default;

    std::uint64_t packed() const {
        return (static_cast<std::uint64_t>(lo) << 32) | hi;
    }
};

// Immutable simple undirected graph with ascending adjacency lists and a
// recorded minimum degree. Safe to share across threads once built.
class host_graph {
public:
    static host_graph from_edges(vertex_id n, const std::vector<std::pair<vertex_id, vertex_id>>& edges);
    static host_graph complete(vertex_id n);
    static host_graph hypercube(std::uint32_t dim);
    static host_graph random_regular(vertex_id n, std::uint32_t d, std::uint64_t seed);
    static host_graph circulant(vertex_id n, const std::vector<std::uint32_t>& offsets);

    vertex_id vertex_count() const noexcept { return n_; }
    std::uint64_t edge_count() const noexcept { return edge_count_; }
    std::uint32_t min_degree() const noexcept { return min_degree_; }

    const std::vector<vertex_id>& neighbors(vertex_id v) const { return adjacency_[v]; }
    std::uint32_t degree(vertex_id v) const { return static_cast<std::uint32_t>(adjacency_[v].size()); }

    bool has_edge(vertex_id u, vertex_id v) const;

    // All edges as canonical pairs, ascending (lo, hi).
    std::vector<edge_key> edges() const;

private:
    host_graph() = default;

    vertex_id n_ = 0;
    std::uint64_t edge_count_ = 0;
    std::uint32_t min_degree_ = 0;
    std::vector<std::vector<vertex_id>> adjacency_;
};

// Edge-list text format: first line "n", then one "u v" per line with
// 0 <= u < v < n; lines starting with '#' are ignored.
host_graph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const host_graph& g);

} // namespace longcycle
