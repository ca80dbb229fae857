#include "longcycle/forest.hpp"

#include <algorithm>
#include <string>

#include "longcycle/errors.hpp"

namespace longcycle {

rooted_forest rooted_forest::from_parents(std::vector<vertex_id> parent) {
    const vertex_id n = static_cast<vertex_id>(parent.size());
    rooted_forest f;
    f.parent = std::move(parent);
    f.depth.assign(n, 0);
    f.children.assign(n, {});
    f.entry.assign(n, 0);
    f.exit.assign(n, 0);
    f.discovery_order.reserve(n);

    for (vertex_id v = 0; v < n; ++v) {
        const vertex_id p = f.parent[v];
        if (p == no_vertex) {
            f.roots.push_back(v);
        } else {
            if (p >= n)
                fail(errc::bad_argument, "parent of " + std::to_string(v) + " out of range");
            f.children[p].push_back(v);
        }
    }
    for (auto& c : f.children)
        std::sort(c.begin(), c.end());

    // Iterative DFS, roots then children ascending; assigns depth and the
    // entry/exit intervals.
    std::uint32_t clock = 0;
    std::vector<std::pair<vertex_id, std::size_t>> stack;
    for (vertex_id r : f.roots) {
        stack.emplace_back(r, 0);
        f.depth[r] = 0;
        f.entry[r] = clock++;
        f.discovery_order.push_back(r);
        while (!stack.empty()) {
            auto& [v, cursor] = stack.back();
            if (cursor < f.children[v].size()) {
                const vertex_id c = f.children[v][cursor++];
                f.depth[c] = f.depth[v] + 1;
                f.entry[c] = clock++;
                f.discovery_order.push_back(c);
                stack.emplace_back(c, 0);
            } else {
                f.exit[v] = clock;
                stack.pop_back();
            }
        }
    }
    if (f.discovery_order.size() != n)
        fail(errc::bad_argument, "parent links do not form a forest");
    return f;
}

} // namespace longcycle
