#include "longcycle/cycle_builder.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "longcycle/errors.hpp"

namespace longcycle {

const char* to_string(search_branch branch) {
    return branch == search_branch::long_condition ? "long_condition" : "chord_chain";
}

const char* to_string(failure_reason reason) {
    switch (reason) {
    case failure_reason::no_full_vertices: return "no_full_vertices";
    case failure_reason::no_vertical_path: return "no_vertical_path";
    case failure_reason::bad_count_exceeded: return "bad_count_exceeded";
    case failure_reason::chord_probe_failed: return "chord_probe_failed";
    case failure_reason::target_length_missed: return "target_length_missed";
    }
    return "unknown";
}

std::vector<vertex_id> long_condition_candidates(const percolation_oracle& oracle,
                                                 const rooted_forest& forest, vertex_id v,
                                                 const thresholds& th) {
    std::vector<std::pair<std::uint32_t, vertex_id>> hits;
    for (vertex_id w : oracle.untested_incident(v)) {
        const auto d = vertical_distance(forest, w, v);
        if (d && *d >= th.t_long)
            hits.emplace_back(*d, w);
    }
    std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first)
            return a.first > b.first;
        return a.second < b.second;
    });
    std::vector<vertex_id> out;
    out.reserve(hits.size());
    for (const auto& [d, w] : hits)
        out.push_back(w);
    return out;
}

namespace {

// Tree path from anc down to desc, top first.
std::vector<vertex_id> chain_between(const rooted_forest& forest, vertex_id anc, vertex_id desc) {
    std::vector<vertex_id> seq;
    vertex_id x = desc;
    while (true) {
        seq.push_back(x);
        if (x == anc)
            break;
        x = forest.parent[x];
    }
    std::reverse(seq.begin(), seq.end());
    return seq;
}

} // namespace

std::optional<cycle> try_long_condition(percolation_oracle& oracle, const rooted_forest& forest,
                                        const classification_table& table, const thresholds& th) {
    const vertex_id n = forest.size();
    const std::uint32_t bar = th.chord_min; // ceil(eps*k) candidates required
    for (vertex_id v = 0; v < n; ++v) {
        if (table.untested_degree[v] < bar)
            continue; // cannot reach the candidate bar
        const auto candidates = long_condition_candidates(oracle, forest, v, th);
        if (candidates.size() < bar)
            continue;
        for (vertex_id u : candidates) {
            if (oracle.test_edge(u, v) != edge_status::present)
                continue;
            const bool u_above = forest.is_ancestor(u, v);
            const vertex_id anc = u_above ? u : v;
            const vertex_id desc = u_above ? v : u;
            cycle c{chain_between(forest, anc, desc)};
            assert(c.length() >= th.t_long + 1);
            return c;
        }
    }
    return std::nullopt;
}

std::vector<vertex_id> candidate_set_U(const percolation_oracle& oracle, const rooted_forest& forest,
                                       const vertical_path& path, vertex_id v, const thresholds& th) {
    const auto pos = path.position_of(v);
    if (!pos)
        fail(errc::bad_argument, "candidate_set_U vertex is not on the path");
    std::vector<std::pair<std::uint32_t, vertex_id>> hits;
    for (vertex_id w : oracle.untested_incident(v)) {
        if (!forest.is_ancestor(w, v))
            continue;
        const std::uint32_t d = forest.depth[v] - forest.depth[w];
        if (d < th.chord_min || d > th.d_cut || d > *pos)
            continue;
        if (path.at(*pos - d) != w)
            continue; // comparable but off the path (cannot happen for parent chains)
        hits.emplace_back(d, w);
    }
    std::sort(hits.begin(), hits.end());
    std::vector<vertex_id> out;
    out.reserve(hits.size());
    for (const auto& [d, w] : hits)
        out.push_back(w);
    return out;
}

chain_result chain_chords(percolation_oracle& oracle, const rooted_forest& forest,
                          const vertical_path& path, const std::vector<vertex_id>& z,
                          const thresholds& th) {
    chain_result result;

    std::vector<std::size_t> z_pos;
    z_pos.reserve(z.size());
    for (vertex_id v : z)
        if (const auto p = path.position_of(v))
            z_pos.push_back(*p);
    std::sort(z_pos.begin(), z_pos.end());

    if (z_pos.empty()) {
        result.failure = search_failure{failure_reason::no_full_vertices, 0};
        return result;
    }

    std::size_t v_pos = z_pos.back(); // lowest z vertex
    std::size_t last_upper = 0;       // position of u_i once set
    std::size_t prior_upper = 0;      // position of u_{i-1}
    for (std::uint32_t step = 0;; ++step) {
        const vertex_id v = path.at(v_pos);
        const auto candidates = candidate_set_U(oracle, forest, path, v, th);

        vertex_id hit = no_vertex;
        for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
            const vertex_id u = *it;
            const std::size_t u_pos = v_pos - (forest.depth[v] - forest.depth[u]);
            if (step > 0 && u_pos >= last_upper)
                continue; // chord must end strictly above the previous one
            if (oracle.test_edge(u, v) == edge_status::present) {
                hit = u;
                break;
            }
        }
        if (hit == no_vertex) {
            result.failure = search_failure{failure_reason::chord_probe_failed, step};
            return result;
        }

        const std::uint32_t span = forest.depth[v] - forest.depth[hit];
        result.chain.chords.push_back(chord{v, hit, span});
        prior_upper = last_upper;
        last_upper = v_pos - span;

        if (step == th.m_max)
            return result; // chain complete
        if (last_upper <= th.d_cut)
            return result; // too close to the path top to continue
        auto it = std::upper_bound(z_pos.begin(), z_pos.end(), last_upper);
        if (it == z_pos.end())
            return result; // no z vertex below the chord top
        const std::size_t next_pos = *it;
        if (next_pos >= v_pos)
            return result; // would not advance above v_i
        if (step > 0 && next_pos > prior_upper)
            return result; // would start below the previous chord top
        v_pos = next_pos;
    }
}

cycle assemble_cycle(const chord_chain& chain, const rooted_forest& forest) {
    const std::size_t count = chain.chords.size();
    if (count == 0)
        fail(errc::malformed_chain, "empty chord chain");

    for (const chord& c : chain.chords) {
        if (!forest.is_ancestor(c.upper, c.lower))
            fail(errc::malformed_chain, "chord upper endpoint is not an ancestor of its lower endpoint");
        if (forest.depth[c.lower] - forest.depth[c.upper] != c.span)
            fail(errc::malformed_chain, "chord span disagrees with vertex depths");
    }
    const vertex_id base = chain.chords.front().lower;
    for (const chord& c : chain.chords)
        for (vertex_id x : {c.lower, c.upper})
            if (x != base && !forest.is_ancestor(x, base))
                fail(errc::malformed_chain, "chord endpoints do not share a vertical path");
    for (std::size_t i = 0; i + 1 < count; ++i) {
        const chord& a = chain.chords[i];
        const chord& b = chain.chords[i + 1];
        if (!(forest.depth[b.lower] < forest.depth[a.lower] &&
              forest.depth[b.lower] > forest.depth[a.upper] &&
              forest.depth[b.upper] < forest.depth[a.upper]))
            fail(errc::malformed_chain, "chords do not interleave");
    }

    // Path segments joining the chords, as (endpoint, endpoint) pairs.
    const std::size_t m = count - 1;
    std::vector<std::pair<vertex_id, vertex_id>> segments;
    if (m == 0) {
        segments.emplace_back(chain.chords[0].upper, chain.chords[0].lower);
    } else {
        segments.emplace_back(chain.chords[0].lower, chain.chords[1].lower);
        for (std::size_t i = 1; i < m; ++i)
            segments.emplace_back(chain.chords[i - 1].upper, chain.chords[i + 1].lower);
        segments.emplace_back(chain.chords[m - 1].upper, chain.chords[m].upper);
    }

    // Degree-bounded union of chord edges and segment tree edges.
    std::unordered_map<vertex_id, std::array<vertex_id, 2>> adj;
    std::size_t edge_total = 0;
    auto add_edge = [&](vertex_id a, vertex_id b) {
        for (vertex_id x : {a, b}) {
            auto& slots = adj.try_emplace(x, std::array<vertex_id, 2>{no_vertex, no_vertex}).first->second;
            const vertex_id other = x == a ? b : a;
            if (slots[0] == no_vertex)
                slots[0] = other;
            else if (slots[1] == no_vertex)
                slots[1] = other;
            else
                fail(errc::not_single_cycle, "vertex " + std::to_string(x) + " exceeds degree 2 in the chain union");
        }
        ++edge_total;
    };

    for (const chord& c : chain.chords)
        add_edge(c.lower, c.upper);
    std::size_t segment_edges = 0;
    for (const auto& [a, b] : segments) {
        if (a == b)
            continue;
        const bool a_deeper = forest.depth[a] > forest.depth[b];
        vertex_id walk = a_deeper ? a : b;
        const vertex_id stop = a_deeper ? b : a;
        while (walk != stop) {
            add_edge(walk, forest.parent[walk]);
            walk = forest.parent[walk];
            ++segment_edges;
        }
    }

    if (adj.size() < 3)
        fail(errc::malformed_chain, "chain union has fewer than 3 vertices");

    // Walk the union starting along the first chord.
    cycle out;
    out.vertices.reserve(adj.size());
    vertex_id prev = no_vertex;
    vertex_id cur = base;
    do {
        out.vertices.push_back(cur);
        const auto& slots = adj.at(cur);
        if (slots[1] == no_vertex)
            fail(errc::not_single_cycle, "vertex " + std::to_string(cur) + " has degree 1 in the chain union");
        const vertex_id next = slots[0] == prev ? slots[1] : slots[0];
        prev = cur;
        cur = next;
    } while (cur != base);

    if (out.vertices.size() != adj.size() || out.vertices.size() != edge_total)
        fail(errc::not_single_cycle, "chain union is not a single cycle");
    assert(out.vertices.size() == segment_edges + count);
    return out;
}

bool is_valid_cycle(const cycle& c, const host_graph& host, const percolation_oracle& oracle,
                    const rooted_forest& forest) {
    const std::size_t len = c.vertices.size();
    if (len < 3)
        return false;
    std::unordered_set<vertex_id> seen;
    for (vertex_id v : c.vertices) {
        if (v >= host.vertex_count() || !seen.insert(v).second)
            return false;
    }
    for (std::size_t i = 0; i < len; ++i) {
        const vertex_id a = c.vertices[i];
        const vertex_id b = c.vertices[(i + 1) % len];
        const bool tree_edge = forest.parent[a] == b || forest.parent[b] == a;
        if (tree_edge)
            continue;
        if (!host.has_edge(a, b) || oracle.status(a, b) != edge_status::present)
            return false;
    }
    return true;
}

cycle_search_outcome find_long_cycle(const host_graph& host, percolation_oracle& oracle,
                                     const thresholds& th, cycle_search_trace* trace) {
    cycle_search_outcome outcome;

    const exploration_result exploration = explore(host, oracle);
    const classification_table table = compute_classifications(host, oracle, exploration.forest, th);
    const rooted_forest& forest = exploration.forest;
    if (trace) {
        trace->exploration = exploration;
        trace->table = table;
    }

    if (auto c = try_long_condition(oracle, forest, table, th)) {
        outcome.branch = search_branch::long_condition;
        outcome.best_length = c->length();
        outcome.found = std::move(c);
        return outcome;
    }

    outcome.branch = search_branch::chord_chain;
    if (table.full_count == 0) {
        outcome.failure = search_failure{failure_reason::no_full_vertices, 0};
        return outcome;
    }

    const vertex_id n = forest.size();
    std::vector<std::uint8_t> bad(n, 0);
    for (vertex_id v = 0; v < n; ++v)
        bad[v] = !table.is_full(v) || !table.is_light(v);

    vertical_path_search search = find_vertical_path(forest, bad, th);
    if (trace)
        trace->path_search = search;
    if (search.result == vertical_path_search::status::not_found) {
        outcome.failure = search_failure{failure_reason::no_vertical_path, 0};
        return outcome;
    }
    if (search.result == vertical_path_search::status::bad_count_exceeded) {
        outcome.failure = search_failure{failure_reason::bad_count_exceeded, 0};
        return outcome;
    }

    std::vector<vertex_id> z;
    for (vertex_id v : search.path.vertices())
        if (table.is_full(v) && table.is_light(v))
            z.push_back(v);

    chain_result chained = chain_chords(oracle, forest, search.path, z, th);
    if (chained.chain.chords.empty()) {
        outcome.failure = chained.failure ? chained.failure
                                          : std::optional<search_failure>(
                                                search_failure{failure_reason::chord_probe_failed, 0});
        return outcome;
    }

    // A single span-1 chord closes onto its own tree edge; nothing to build.
    if (chained.chain.chords.size() == 1 && chained.chain.chords.front().span < 2) {
        outcome.best_length = 2;
        outcome.failure = search_failure{failure_reason::target_length_missed, 0};
        return outcome;
    }

    cycle assembled = assemble_cycle(chained.chain, forest);
    outcome.best_length = assembled.length();
    if (assembled.length() >= th.t_long) {
        outcome.found = std::move(assembled);
        return outcome;
    }
    outcome.failure = search_failure{failure_reason::target_length_missed, 0};
    return outcome;
}

} // namespace longcycle
