#include "longcycle/longest_cycle.hpp"

#include <string>
#include <vector>

#include "longcycle/errors.hpp"

namespace longcycle {

namespace {

struct brute_search {
    const host_graph& graph;
    std::uint32_t target;       // stop once a cycle this long is found (0 = never)
    std::uint64_t visited = 0;
    std::vector<vertex_id> path;
    brute_force_result best;

    brute_search(const host_graph& g, std::uint32_t stop_at) : graph(g), target(stop_at) {}

    bool done() const { return target > 0 && best.length >= target; }

    // Extends the simple path; path.front() is the minimum vertex on any
    // cycle closed here, so every cycle is counted exactly once.
    void extend(vertex_id v) {
        visited |= std::uint64_t{1} << v;
        path.push_back(v);
        const vertex_id start = path.front();
        for (vertex_id w : graph.neighbors(v)) {
            if (w == start && path.size() >= 3 && path.size() > best.length) {
                best.length = static_cast<std::uint32_t>(path.size());
                best.witness = cycle{path};
                if (done())
                    break;
            }
            if (w <= start || (visited >> w) & 1)
                continue;
            extend(w);
            if (done())
                break;
        }
        path.pop_back();
        visited &= ~(std::uint64_t{1} << v);
    }
};

brute_force_result search_all(const host_graph& graph, std::uint32_t target, bool override_guard) {
    const vertex_id n = graph.vertex_count();
    if (n > 64 || (n > 16 && !override_guard))
        fail(errc::graph_too_large,
             "brute force refused for n=" + std::to_string(n) +
                 (n <= 64 ? " (pass override_guard to force)" : ""));
    brute_search search(graph, target);
    for (vertex_id s = 0; s < n && !search.done(); ++s)
        search.extend(s);
    return std::move(search.best);
}

} // namespace

brute_force_result longest_cycle_brute_force(const host_graph& graph, bool override_guard) {
    return search_all(graph, 0, override_guard);
}

bool cycle_exists_of_length_at_least(const host_graph& graph, std::uint32_t target,
                                     bool override_guard) {
    if (target < 3)
        fail(errc::bad_argument, "cycle length target must be at least 3");
    if (target > graph.vertex_count())
        return false;
    return search_all(graph, target, override_guard).length >= target;
}

} // namespace longcycle
