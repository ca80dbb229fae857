#pragma once

#include <span>
#include <string>
#include <vector>

#include "longcycle/forest.hpp"
#include "longcycle/percolation.hpp"

namespace longcycle {

// Hooks into the exploration loop; the stack view is valid only during the
// callback. The vertex stack is always a vertical path of the forest.
struct exploration_observer {
    virtual ~exploration_observer() = default;
    virtual void on_push(vertex_id /*v*/, std::span<const vertex_id> /*stack*/) {}
    virtual void on_pop(vertex_id /*v*/, std::span<const vertex_id> /*stack*/) {}
    virtual void on_test(vertex_id /*u*/, vertex_id /*v*/, edge_status /*result*/) {}
};

// Collects one line per exploration event: "PUSH v", "POP v",
// "TEST u v present|absent".
struct exploration_logger : exploration_observer {
    std::vector<std::string> lines;

    void on_push(vertex_id v, std::span<const vertex_id>) override {
        lines.push_back("PUSH " + std::to_string(v));
    }
    void on_pop(vertex_id v, std::span<const vertex_id>) override {
        lines.push_back("POP " + std::to_string(v));
    }
    void on_test(vertex_id u, vertex_id v, edge_status result) override {
        lines.push_back("TEST " + std::to_string(u) + " " + std::to_string(v) +
                        (result == edge_status::present ? " present" : " absent"));
    }
};

struct exploration_result {
    rooted_forest forest;
    std::uint64_t tested_count = 0;
    std::uint64_t present_count = 0;
    std::uint32_t component_count = 0;
};

// Depth-first exploration of the percolated graph. From the stack top, edges
// to unreached vertices are probed in ascending neighbor order; a present
// edge pushes the new endpoint, exhaustion pops. New roots are the smallest
// unreached vertex. Edges between two reached vertices are never tested,
// which is what leaves the untested residue behind.
exploration_result explore(const host_graph& host, percolation_oracle& oracle,
                           exploration_observer* observer = nullptr);

// True iff every untested host edge joins an ancestor-descendant pair.
bool verify_vertical_property(const host_graph& host, const percolation_oracle& oracle,
                              const rooted_forest& forest);

} // namespace longcycle
