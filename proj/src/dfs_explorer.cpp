#include "longcycle/dfs_explorer.hpp"

#include <cassert>

#include "longcycle/errors.hpp"

namespace longcycle {

exploration_result explore(const host_graph& host, percolation_oracle& oracle,
                           exploration_observer* observer) {
    if (oracle.tested_count() != 0)
        fail(errc::oracle_not_fresh, "exploration requires an oracle with no tested edges");

    const vertex_id n = host.vertex_count();
    exploration_result result;
    rooted_forest& f = result.forest;
    f.parent.assign(n, no_vertex);
    f.depth.assign(n, 0);
    f.children.assign(n, {});
    f.entry.assign(n, 0);
    f.exit.assign(n, 0);
    f.discovery_order.reserve(n);

    std::vector<bool> reached(n, false);
    std::vector<vertex_id> stack_vertices;
    std::vector<std::uint32_t> cursor(n, 0);
    std::uint32_t clock = 0;
    vertex_id next_root = 0;

    auto reach = [&](vertex_id v) {
        reached[v] = true;
        f.entry[v] = clock++;
        f.discovery_order.push_back(v);
        stack_vertices.push_back(v);
        if (observer)
            observer->on_push(v, stack_vertices);
    };

    while (true) {
        if (stack_vertices.empty()) {
            while (next_root < n && reached[next_root])
                ++next_root;
            if (next_root == n)
                break;
            ++result.component_count;
            f.roots.push_back(next_root);
            f.depth[next_root] = 0;
            reach(next_root);
            continue;
        }
        const vertex_id u = stack_vertices.back();
        const auto& adj = host.neighbors(u);
        bool advanced = false;
        while (cursor[u] < adj.size()) {
            const vertex_id w = adj[cursor[u]++];
            if (reached[w])
                continue;
            assert(oracle.status(u, w) == edge_status::untested);
            const edge_status s = oracle.test_edge(u, w);
            if (observer)
                observer->on_test(u, w, s);
            if (s == edge_status::present) {
                f.parent[w] = u;
                f.depth[w] = f.depth[u] + 1;
                f.children[u].push_back(w);
                reach(w);
                advanced = true;
                break;
            }
        }
        if (!advanced && cursor[u] >= adj.size()) {
            f.exit[u] = clock;
            stack_vertices.pop_back();
            if (observer)
                observer->on_pop(u, stack_vertices);
        }
    }

    result.tested_count = oracle.tested_count();
    result.present_count = oracle.present_count();
    return result;
}

bool verify_vertical_property(const host_graph& host, const percolation_oracle& oracle,
                              const rooted_forest& forest) {
    const vertex_id n = host.vertex_count();
    for (vertex_id u = 0; u < n; ++u)
        for (vertex_id v : host.neighbors(u)) {
            if (u >= v)
                continue;
            if (oracle.status(u, v) != edge_status::untested)
                continue;
            if (!forest.comparable(u, v))
                return false;
        }
    return true;
}

} // namespace longcycle
