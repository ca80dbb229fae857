#pragma once

#include <cstdint>
#include <vector>

#include "longcycle/host_graph.hpp"

namespace longcycle {

// Rooted spanning forest. Parent edges point towards the root; depth of a
// root is 0. Entry/exit indices give O(1) ancestor tests (a vertex's subtree
// occupies the half-open interval [entry, exit) in discovery order).
struct rooted_forest {
    std::vector<vertex_id> parent;          // no_vertex for roots
    std::vector<std::uint32_t> depth;
    std::vector<std::vector<vertex_id>> children; // ascending
    std::vector<vertex_id> roots;
    std::vector<vertex_id> discovery_order; // i-th discovered vertex
    std::vector<std::uint32_t> entry;
    std::vector<std::uint32_t> exit;

    vertex_id size() const noexcept { return static_cast<vertex_id>(parent.size()); }

    // Strict: v below u on u's subtree, u != v.
    bool is_ancestor(vertex_id u, vertex_id v) const {
        return u != v && entry[u] <= entry[v] && entry[v] < exit[u];
    }

    bool comparable(vertex_id u, vertex_id v) const {
        return u == v || is_ancestor(u, v) || is_ancestor(v, u);
    }

    // Ancestor of v at the given distance, or no_vertex past the root.
    vertex_id ancestor_at(vertex_id v, std::uint32_t distance) const {
        vertex_id u = v;
        while (distance-- > 0) {
            if (u == no_vertex)
                return no_vertex;
            u = parent[u];
        }
        return u;
    }

    // Derive depth/children/roots/discovery/entry/exit from a parent array.
    // Validates that the parent links are acyclic and spanning.
    static rooted_forest from_parents(std::vector<vertex_id> parent);
};

} // namespace longcycle
