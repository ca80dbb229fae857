#include "longcycle/percolation.hpp"

#include <algorithm>
#include <string>

#include "longcycle/errors.hpp"

namespace longcycle {

percolation_oracle::percolation_oracle(const host_graph& host, double p, std::uint64_t seed)
    : host_(&host), p_(p), rng_(seed) {
    if (!(p >= 0.0 && p <= 1.0))
        fail(errc::bad_argument, "edge probability must be in [0,1]");
}

void percolation_oracle::require_host_edge(vertex_id u, vertex_id v) const {
    if (!host_->has_edge(u, v))
        fail(errc::not_a_host_edge, "(" + std::to_string(u) + "," + std::to_string(v) + ") is not a host edge");
}

edge_status percolation_oracle::test_edge(vertex_id u, vertex_id v) {
    require_host_edge(u, v);
    const std::uint64_t key = edge_key(u, v).packed();
    auto it = statuses_.find(key);
    if (it != statuses_.end())
        return it->second;
    const edge_status s = rng_.next_unit() < p_ ? edge_status::present : edge_status::absent;
    statuses_.emplace(key, s);
    if (s == edge_status::present)
        ++present_count_;
    return s;
}

edge_status percolation_oracle::status(vertex_id u, vertex_id v) const {
    require_host_edge(u, v);
    auto it = statuses_.find(edge_key(u, v).packed());
    return it == statuses_.end() ? edge_status::untested : it->second;
}

std::vector<vertex_id> percolation_oracle::untested_incident(vertex_id v) const {
    if (v >= host_->vertex_count())
        fail(errc::bad_argument, "vertex out of range");
    std::vector<vertex_id> out;
    for (vertex_id w : host_->neighbors(v))
        if (statuses_.find(edge_key(v, w).packed()) == statuses_.end())
            out.push_back(w);
    return out;
}

std::uint32_t percolation_oracle::untested_degree(vertex_id v) const {
    if (v >= host_->vertex_count())
        fail(errc::bad_argument, "vertex out of range");
    std::uint32_t count = 0;
    for (vertex_id w : host_->neighbors(v))
        if (statuses_.find(edge_key(v, w).packed()) == statuses_.end())
            ++count;
    return count;
}

std::vector<std::pair<edge_key, edge_status>> percolation_oracle::tested_edges() const {
    std::vector<std::pair<edge_key, edge_status>> out;
    out.reserve(statuses_.size());
    for (const auto& [key, s] : statuses_)
        out.emplace_back(edge_key(static_cast<vertex_id>(key >> 32), static_cast<vertex_id>(key & 0xffffffffu)), s);
    return out;
}

std::vector<edge_key> percolation_oracle::present_edges() const {
    std::vector<edge_key> out;
    out.reserve(present_count_);
    for (const auto& [key, s] : statuses_)
        if (s == edge_status::present)
            out.emplace_back(static_cast<vertex_id>(key >> 32), static_cast<vertex_id>(key & 0xffffffffu));
    std::sort(out.begin(), out.end(), [](const edge_key& a, const edge_key& b) {
        return a.packed() < b.packed();
    });
    return out;
}

} // namespace longcycle
