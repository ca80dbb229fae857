#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "longcycle/forest.hpp"
#include "longcycle/percolation.hpp"

namespace longcycle {

// Integer cutoffs derived once from (eps, k). "At least" bounds round up,
// "at most" bounds round down.
struct thresholds {
    double eps = 0.0;
    std::uint32_t k = 0;
    std::uint32_t t_full = 0;    // untested degree needed to be full
    std::uint32_t t_rich = 0;    // descendants needed to be rich
    std::uint32_t d_cut = 0;     // depth cutoff for the truncated descendant count
    std::uint32_t t_light = 0;   // truncated count allowed for a light vertex
    std::uint32_t chord_min = 0; // minimum chord span
    std::uint32_t t_long = 0;    // distance cutoff and cycle length target
    std::uint64_t len_path = 0;  // vertical path length (edges)
    std::uint32_t bad_max = 0;   // bad vertices tolerated on the path
    std::uint32_t m_max = 0;     // last chord index in a complete chain

    thresholds(double eps, std::uint32_t k);
};

struct classification_table {
    std::vector<std::uint32_t> untested_degree;
    std::vector<std::uint8_t> full;
    std::vector<std::uint8_t> rich;
    std::vector<std::uint8_t> light;
    std::vector<std::uint64_t> subtree_size;     // |D(v)| + 1
    std::vector<std::uint64_t> trunc_desc_count; // descendants within d_cut
    std::vector<std::uint32_t> height;

    std::uint64_t full_count = 0;
    std::uint64_t poor_count = 0;
    std::uint64_t heavy_count = 0;

    bool is_full(vertex_id v) const { return full[v] != 0; }
    bool is_rich(vertex_id v) const { return rich[v] != 0; }
    bool is_light(vertex_id v) const { return light[v] != 0; }
};

// Depth difference when one vertex is an ancestor of the other (0 for u == v),
// nullopt when the two are not on a common vertical path.
std::optional<std::uint32_t> vertical_distance(const rooted_forest& forest, vertex_id u, vertex_id v);

classification_table compute_classifications(const host_graph& host, const percolation_oracle& oracle,
                                             const rooted_forest& forest, const thresholds& th);

// Number of descendants of v at distance at most m.
std::uint64_t trunc_desc_count(const rooted_forest& forest, vertex_id v, std::uint64_t m);

// hist[h] = number of vertices at height h.
std::vector<std::uint64_t> height_histogram(const rooted_forest& forest);

// Parent-chain segment, top to bottom; vertices[i] has depth top_depth + i.
class vertical_path {
public:
    vertical_path() = default;
    vertical_path(const rooted_forest& forest, vertex_id bottom, std::uint64_t edge_length);

    const std::vector<vertex_id>& vertices() const noexcept { return vertices_; }
    std::size_t length() const noexcept { return vertices_.empty() ? 0 : vertices_.size() - 1; }
    vertex_id top() const { return vertices_.front(); }
    vertex_id bottom() const { return vertices_.back(); }
    std::uint32_t top_depth() const noexcept { return top_depth_; }
    vertex_id at(std::size_t index) const { return vertices_[index]; }
    std::optional<std::size_t> position_of(vertex_id v) const;

private:
    std::vector<vertex_id> vertices_;
    std::uint32_t top_depth_ = 0;
    std::unordered_map<vertex_id, std::size_t> position_;
};

struct vertical_path_search {
    enum class status { found, not_found, bad_count_exceeded };
    status result = status::not_found;
    vertical_path path;         // best window unless not_found
    std::uint64_t bad_count = 0; // bad vertices on that window
};

// Minimum-bad window of len_path edges over all root-to-leaf chains, by a
// single DFS with a sliding count; ties broken by first window in DFS order.
// bad flags are indexed by vertex.
vertical_path_search find_vertical_path(const rooted_forest& forest,
                                        const std::vector<std::uint8_t>& bad,
                                        const thresholds& th);

} // namespace longcycle
