#include "longcycle/forest_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "longcycle/errors.hpp"

namespace longcycle {

namespace {

// Rounding guards against binary representation noise in eps*k products.
std::uint64_t ceil_count(double x) {
    return static_cast<std::uint64_t>(std::ceil(x - 1e-9));
}

std::uint64_t floor_count(double x) {
    return static_cast<std::uint64_t>(std::floor(x + 1e-9));
}

} // namespace

thresholds::thresholds(double eps_in, std::uint32_t k_in) : eps(eps_in), k(k_in) {
    if (!(eps > 0.0) || eps > 0.1)
        fail(errc::eps_out_of_range, "eps must lie in (0, 0.1], got " + std::to_string(eps));
    if (k < 1)
        fail(errc::bad_thresholds, "k must be at least 1");
    t_full = static_cast<std::uint32_t>(ceil_count((1.0 - eps) * k));
    t_rich = static_cast<std::uint32_t>(ceil_count(eps * k));
    d_cut = static_cast<std::uint32_t>(floor_count((1.0 - 5.0 * eps) * k));
    t_light = static_cast<std::uint32_t>(floor_count((1.0 - 4.0 * eps) * k));
    chord_min = static_cast<std::uint32_t>(ceil_count(eps * k));
    t_long = static_cast<std::uint32_t>(ceil_count((1.0 - 5.0 * eps) * k));
    len_path = ceil_count(static_cast<double>(k) / (eps * eps));
    bad_max = static_cast<std::uint32_t>(floor_count(eps * eps * k));
    m_max = static_cast<std::uint32_t>(floor_count(10.0 / eps));
    if (chord_min > d_cut)
        fail(errc::bad_thresholds,
             "degenerate cutoffs for eps=" + std::to_string(eps) + ", k=" + std::to_string(k) +
                 " (chord_min " + std::to_string(chord_min) + " > d_cut " + std::to_string(d_cut) + ")");
}

std::optional<std::uint32_t> vertical_distance(const rooted_forest& forest, vertex_id u, vertex_id v) {
    if (u == v)
        return 0;
    if (forest.is_ancestor(u, v))
        return forest.depth[v] - forest.depth[u];
    if (forest.is_ancestor(v, u))
        return forest.depth[u] - forest.depth[v];
    return std::nullopt;
}

std::uint64_t trunc_desc_count(const rooted_forest& forest, vertex_id v, std::uint64_t m) {
    // Truncated subtree DFS; short-circuits when the cutoff saturates.
    std::uint64_t count = 0;
    std::vector<std::pair<vertex_id, std::uint64_t>> stack;
    stack.emplace_back(v, 0);
    while (!stack.empty()) {
        auto [x, d] = stack.back();
        stack.pop_back();
        if (d > 0)
            ++count;
        if (d < m)
            for (vertex_id c : forest.children[x])
                stack.emplace_back(c, d + 1);
    }
    return count;
}

classification_table compute_classifications(const host_graph& host, const percolation_oracle& oracle,
                                             const rooted_forest& forest, const thresholds& th) {
    const vertex_id n = forest.size();
    classification_table table;
    table.untested_degree.assign(n, 0);
    table.full.assign(n, 0);
    table.rich.assign(n, 0);
    table.light.assign(n, 0);
    table.subtree_size.assign(n, 1);
    table.trunc_desc_count.assign(n, 0);
    table.height.assign(n, 0);

    std::vector<std::uint32_t> tested_deg(n, 0);
    for (const auto& [e, s] : oracle.tested_edges()) {
        (void)s;
        ++tested_deg[e.lo];
        ++tested_deg[e.hi];
    }
    for (vertex_id v = 0; v < n; ++v)
        table.untested_degree[v] = host.degree(v) - tested_deg[v];

    // Children precede parents in reversed discovery order.
    for (auto it = forest.discovery_order.rbegin(); it != forest.discovery_order.rend(); ++it) {
        const vertex_id v = *it;
        std::uint32_t h = 0;
        for (vertex_id c : forest.children[v]) {
            table.subtree_size[v] += table.subtree_size[c];
            h = std::max(h, table.height[c] + 1);
        }
        table.height[v] = h;
    }

    for (vertex_id v = 0; v < n; ++v) {
        table.trunc_desc_count[v] = th.d_cut >= table.height[v]
                                        ? table.subtree_size[v] - 1
                                        : trunc_desc_count(forest, v, th.d_cut);
        table.full[v] = table.untested_degree[v] >= th.t_full;
        table.rich[v] = table.subtree_size[v] - 1 >= th.t_rich;
        table.light[v] = table.trunc_desc_count[v] <= th.t_light;
        table.full_count += table.full[v];
        table.poor_count += !table.rich[v];
        table.heavy_count += !table.light[v];
    }
    return table;
}

std::vector<std::uint64_t> height_histogram(const rooted_forest& forest) {
    const vertex_id n = forest.size();
    std::vector<std::uint32_t> height(n, 0);
    for (auto it = forest.discovery_order.rbegin(); it != forest.discovery_order.rend(); ++it) {
        const vertex_id v = *it;
        std::uint32_t h = 0;
        for (vertex_id c : forest.children[v])
            h = std::max(h, height[c] + 1);
        height[v] = h;
    }
    std::uint32_t max_h = 0;
    for (vertex_id v = 0; v < n; ++v)
        max_h = std::max(max_h, height[v]);
    std::vector<std::uint64_t> hist(n == 0 ? 0 : max_h + 1, 0);
    for (vertex_id v = 0; v < n; ++v)
        ++hist[height[v]];
    return hist;
}

vertical_path::vertical_path(const rooted_forest& forest, vertex_id bottom, std::uint64_t edge_length) {
    vertices_.resize(edge_length + 1);
    vertex_id v = bottom;
    for (std::size_t i = edge_length + 1; i-- > 0;) {
        if (v == no_vertex)
            fail(errc::bad_argument, "vertical path runs past its root");
        vertices_[i] = v;
        v = forest.parent[v];
    }
    top_depth_ = forest.depth[vertices_.front()];
    position_.reserve(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        position_.emplace(vertices_[i], i);
}

std::optional<std::size_t> vertical_path::position_of(vertex_id v) const {
    auto it = position_.find(v);
    if (it == position_.end())
        return std::nullopt;
    return it->second;
}

vertical_path_search find_vertical_path(const rooted_forest& forest,
                                        const std::vector<std::uint8_t>& bad,
                                        const thresholds& th) {
    const std::uint64_t window = th.len_path + 1; // vertices per window
    vertical_path_search best;
    bool have_best = false;
    vertex_id best_bottom = no_vertex;
    std::uint64_t best_count = 0;

    std::vector<std::uint64_t> prefix; // bad count along the current root path
    std::vector<std::pair<vertex_id, std::size_t>> stack;
    for (vertex_id r : forest.roots) {
        stack.emplace_back(r, 0);
        prefix.clear();
        prefix.push_back(bad[r] ? 1 : 0);
        while (!stack.empty()) {
            auto& [v, cursor] = stack.back();
            if (cursor == 0) {
                const std::uint64_t depth = prefix.size() - 1;
                if (depth >= th.len_path) {
                    const std::uint64_t cnt =
                        prefix[depth] - (depth >= window ? prefix[depth - window] : 0);
                    if (!have_best || cnt < best_count) {
                        have_best = true;
                        best_count = cnt;
                        best_bottom = v;
                    }
                }
            }
            if (cursor < forest.children[v].size()) {
                const vertex_id c = forest.children[v][cursor++];
                prefix.push_back(prefix.back() + (bad[c] ? 1 : 0));
                stack.emplace_back(c, 0);
            } else {
                stack.pop_back();
                prefix.pop_back();
            }
        }
    }

    if (!have_best) {
        best.result = vertical_path_search::status::not_found;
        return best;
    }
    best.path = vertical_path(forest, best_bottom, th.len_path);
    best.bad_count = best_count;
    best.result = best_count > th.bad_max ? vertical_path_search::status::bad_count_exceeded
                                          : vertical_path_search::status::found;
    return best;
}

} // namespace longcycle
