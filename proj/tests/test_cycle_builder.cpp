#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>
#include <vector>

#include "longcycle/cycle_builder.hpp"
#include "longcycle/rng.hpp"
#include "support.hpp"

using namespace longcycle;
using testsupport::throws_code;

namespace {

// Path 0..n-1 plus every forward chord of span 2..19, optionally with one
// vertex stripped of all its chords. At p=1 exploration reproduces the path
// and the chords become exactly the untested residue.
host_graph window_fixture(vertex_id n, vertex_id skip = no_vertex) {
    std::vector<std::pair<vertex_id, vertex_id>> edges;
    for (vertex_id v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    for (vertex_id v = 0; v < n; ++v)
        for (std::uint32_t s = 2; s <= 19 && v + s < n; ++s) {
            if (v == skip || v + s == skip)
                continue;
            edges.emplace_back(v, v + s);
        }
    return host_graph::from_edges(n, edges);
}

// Path 0..n-1 plus the chord (v-20, v) for every v >= 20.
host_graph ladder_fixture(vertex_id n) {
    std::vector<std::pair<vertex_id, vertex_id>> edges;
    for (vertex_id v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    for (vertex_id v = 20; v < n; ++v)
        edges.emplace_back(v - 20, v);
    return host_graph::from_edges(n, edges);
}

std::vector<vertex_id> iota_ids(vertex_id n) {
    std::vector<vertex_id> out(n);
    for (vertex_id v = 0; v < n; ++v)
        out[v] = v;
    return out;
}

} // namespace

TEST_CASE("enum names") {
    CHECK(std::string(to_string(search_branch::long_condition)) == "long_condition");
    CHECK(std::string(to_string(search_branch::chord_chain)) == "chord_chain");
    CHECK(std::string(to_string(failure_reason::no_full_vertices)) == "no_full_vertices");
    CHECK(std::string(to_string(failure_reason::no_vertical_path)) == "no_vertical_path");
    CHECK(std::string(to_string(failure_reason::bad_count_exceeded)) == "bad_count_exceeded");
    CHECK(std::string(to_string(failure_reason::chord_probe_failed)) == "chord_probe_failed");
    CHECK(std::string(to_string(failure_reason::target_length_missed)) == "target_length_missed");
}

TEST_CASE("long_condition_candidates on explored K_4") {
    auto g = host_graph::complete(4);
    percolation_oracle oracle(g, 1.0, 3);
    auto res = explore(g, oracle);
    thresholds th(0.05, 3); // t_long = 3
    REQUIRE(th.t_long == 3);

    CHECK(long_condition_candidates(oracle, res.forest, 3, th) == std::vector<vertex_id>{0});
    CHECK(long_condition_candidates(oracle, res.forest, 0, th) == std::vector<vertex_id>{3});
    CHECK(long_condition_candidates(oracle, res.forest, 1, th).empty());
}

TEST_CASE("long_condition_candidates orders by distance, ids break ties") {
    // Path 0..6 with chords (0,3) and (3,6): both untested after p=1
    // exploration, both at vertical distance 3 from vertex 3.
    auto g = testsupport::path_host(7, {{0, 3}, {3, 6}});
    percolation_oracle oracle(g, 1.0, 5);
    auto res = explore(g, oracle);
    CHECK(oracle.status(0, 3) == edge_status::untested);
    CHECK(oracle.status(3, 6) == edge_status::untested);

    thresholds th(0.05, 2); // t_long = 2
    CHECK(long_condition_candidates(oracle, res.forest, 3, th) == std::vector<vertex_id>{0, 6});
}

TEST_CASE("try_long_condition closes the farthest present chord") {
    auto g = host_graph::complete(8);
    percolation_oracle oracle(g, 1.0, 11);
    auto res = explore(g, oracle);
    thresholds th(0.05, 7); // t_long = 6, chord bar = 1
    auto table = compute_classifications(g, oracle, res.forest, th);

    auto c = try_long_condition(oracle, res.forest, table, th);
    REQUIRE(c.has_value());
    CHECK(c->vertices == std::vector<vertex_id>{0, 1, 2, 3, 4, 5, 6, 7});
    CHECK(oracle.status(0, 7) == edge_status::present);
    CHECK(is_valid_cycle(*c, g, oracle, res.forest));
}

TEST_CASE("try_long_condition consumes every candidate before giving up") {
    auto g = testsupport::path_host(8, {{0, 6}, {0, 7}, {1, 7}});
    auto forest = testsupport::path_forest(8);
    percolation_oracle oracle(g, 0.0, 1); // fresh: nothing tested yet
    thresholds th(0.05, 2);               // t_long = 2
    auto table = compute_classifications(g, oracle, forest, th);

    auto c = try_long_condition(oracle, forest, table, th);
    CHECK_FALSE(c.has_value());
    // The three long chords were probed (and failed); path edges are shorter
    // than t_long and stay untouched.
    CHECK(oracle.tested_count() == 3);
    CHECK(oracle.status(0, 7) == edge_status::absent);
    CHECK(oracle.status(0, 6) == edge_status::absent);
    CHECK(oracle.status(1, 7) == edge_status::absent);
}

TEST_CASE("try_long_condition at p=1/2 on a line tree") {
    auto g = testsupport::path_host(30, {{20, 29}, {21, 29}, {22, 29}, {23, 29}});
    auto forest = testsupport::path_forest(30);
    thresholds th(0.05, 2);

    int hits = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        percolation_oracle oracle(g, 0.5, mix_seed(200, seed));
        auto table = compute_classifications(g, oracle, forest, th);
        auto c = try_long_condition(oracle, forest, table, th);
        if (c) {
            ++hits;
            CHECK(c->length() >= th.t_long + 1);
            CHECK(is_valid_cycle(*c, g, oracle, forest));
        }
    }
    CHECK(hits >= 5); // each back-edge is present with probability 1/2
}

TEST_CASE("candidate_set_U on explored K_4") {
    auto g = host_graph::complete(4);
    percolation_oracle oracle(g, 1.0, 3);
    auto res = explore(g, oracle);
    thresholds th(0.05, 3); // chord_min = 1, d_cut = 2
    REQUIRE(th.chord_min == 1);
    REQUIRE(th.d_cut == 2);

    vertical_path path(res.forest, 3, 3);
    CHECK(candidate_set_U(oracle, res.forest, path, 3, th) == std::vector<vertex_id>{1});
    CHECK(candidate_set_U(oracle, res.forest, path, 2, th) == std::vector<vertex_id>{0});
}

TEST_CASE("candidate_set_U ascends by distance and honors d_cut") {
    auto g = testsupport::path_host(30, {{16, 20}, {12, 20}, {18, 20}});
    auto forest = testsupport::path_forest(30);
    percolation_oracle oracle(g, 0.5, 1); // fresh
    thresholds th(0.1, 8);                // chord_min = 1, d_cut = 4
    vertical_path path(forest, 29, 29);

    // (19,20) is an untested host edge at distance 1; (12,20) exceeds d_cut.
    CHECK(candidate_set_U(oracle, forest, path, 20, th) == std::vector<vertex_id>{19, 18, 16});

    CHECK(throws_code(errc::bad_argument, [&] {
        vertical_path suffix(forest, 29, 10);
        candidate_set_U(oracle, forest, suffix, 5, th);
    }));
}

TEST_CASE("chain_chords climbs a ladder to the chord budget") {
    auto g = ladder_fixture(4001);
    auto forest = testsupport::path_forest(4001);
    percolation_oracle oracle(g, 1.0, 1);
    thresholds th(0.1, 40); // chord_min 4, d_cut 20, m_max 100
    vertical_path path(forest, 4000, 4000);

    auto res = chain_chords(oracle, forest, path, iota_ids(4001), th);
    CHECK_FALSE(res.failure.has_value());
    REQUIRE(res.chain.chords.size() == 101); // stops after chord index m_max
    for (std::uint32_t i = 0; i < 101; ++i) {
        CHECK(res.chain.chords[i].lower == 4000 - 19 * i);
        CHECK(res.chain.chords[i].upper == 3980 - 19 * i);
        CHECK(res.chain.chords[i].span == 20);
    }

    auto cyc = assemble_cycle(res.chain, forest);
    CHECK(cyc.length() == 19 + 99 * 18 + 19 + 101); // 1921
    CHECK(is_valid_cycle(cyc, g, oracle, forest));
}

TEST_CASE("chain_chords stops near the path top without failure") {
    auto g = testsupport::path_host(100, {{15, 35}});
    auto forest = testsupport::path_forest(100);
    percolation_oracle oracle(g, 1.0, 2);
    thresholds th(0.1, 40);
    vertical_path path(forest, 99, 99);

    auto res = chain_chords(oracle, forest, path, {35}, th);
    CHECK_FALSE(res.failure.has_value());
    REQUIRE(res.chain.chords.size() == 1);
    CHECK(res.chain.chords[0].lower == 35);
    CHECK(res.chain.chords[0].upper == 15); // within d_cut of the top: stop

    auto cyc = assemble_cycle(res.chain, forest);
    CHECK(cyc.length() == 21);
}

TEST_CASE("chain_chords with no usable z vertices") {
    auto forest = testsupport::path_forest(50);
    auto g = testsupport::path_host(50);
    percolation_oracle oracle(g, 1.0, 1);
    thresholds th(0.1, 40);
    vertical_path path(forest, 49, 49);

    auto res = chain_chords(oracle, forest, path, {}, th);
    REQUIRE(res.failure.has_value());
    CHECK(res.failure->reason == failure_reason::no_full_vertices);
    CHECK(res.chain.chords.empty());
}

TEST_CASE("chain_chords reports the failing step") {
    auto forest = testsupport::path_forest(4001);
    thresholds th(0.1, 40);
    vertical_path path(forest, 4000, 4000);
    auto g = testsupport::path_host(4001, {{3980, 4000}});

    // All probes absent: the very first chord fails.
    percolation_oracle absent(g, 0.0, 1);
    auto res0 = chain_chords(absent, forest, path, iota_ids(4001), th);
    REQUIRE(res0.failure.has_value());
    CHECK(res0.failure->reason == failure_reason::chord_probe_failed);
    CHECK(res0.failure->step == 0);
    CHECK(res0.chain.chords.empty());

    // One chord lands, then the next vertex has no candidates at all.
    percolation_oracle present(g, 1.0, 1);
    auto res1 = chain_chords(present, forest, path, iota_ids(4001), th);
    REQUIRE(res1.failure.has_value());
    CHECK(res1.failure->reason == failure_reason::chord_probe_failed);
    CHECK(res1.failure->step == 1);
    REQUIRE(res1.chain.chords.size() == 1);
    CHECK(res1.chain.chords[0].lower == 4000);
}

TEST_CASE("chain_chords output always interleaves") {
    thresholds th(0.1, 40);
    auto forest = testsupport::path_forest(1200);
    vertical_path path(forest, 1199, 1199);

    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        counter_rng rng(mix_seed(900, seed));
        std::set<std::pair<vertex_id, vertex_id>> picked;
        for (int i = 0; i < 600; ++i) {
            auto span = 4 + static_cast<vertex_id>(rng.next_below(17));
            auto v = span + static_cast<vertex_id>(rng.next_below(1200 - span));
            picked.emplace(v - span, v);
        }
        auto g = testsupport::path_host(1200, {picked.begin(), picked.end()});
        percolation_oracle oracle(g, 0.6, mix_seed(901, seed));
        std::vector<vertex_id> z;
        for (vertex_id v = 0; v < 1200; v += 3)
            z.push_back(v);
        auto res = chain_chords(oracle, forest, path, z, th);
        const auto& ch = res.chain.chords;
        for (std::size_t i = 0; i + 1 < ch.size(); ++i) {
            CHECK(ch[i + 1].lower < ch[i].lower);
            CHECK(ch[i + 1].lower > ch[i].upper);
            CHECK(ch[i + 1].upper < ch[i].upper);
        }
        for (const auto& c : ch) {
            CHECK(c.span >= th.chord_min);
            CHECK(c.span <= th.d_cut);
            CHECK(oracle.status(c.lower, c.upper) == edge_status::present);
        }
    }
}

TEST_CASE("assemble_cycle: single chord") {
    auto forest = testsupport::path_forest(20);
    chord_chain chain{{{10, 4, 6}}};
    auto cyc = assemble_cycle(chain, forest);
    CHECK(cyc.vertices == std::vector<vertex_id>{10, 4, 5, 6, 7, 8, 9});
    CHECK(cyc.length() == 7);
}

TEST_CASE("assemble_cycle: two chords use both overlap segments") {
    auto forest = testsupport::path_forest(25);
    chord_chain chain{{{20, 10, 10}, {14, 2, 12}}};
    auto cyc = assemble_cycle(chain, forest);
    // d(v0,v1) + d(u0,u1) + 2 chords
    CHECK(cyc.length() == 6 + 8 + 2);
}

TEST_CASE("assemble_cycle: three chords follow the zigzag traversal") {
    auto forest = testsupport::path_forest(40);
    chord_chain chain{{{30, 18, 12}, {25, 10, 15}, {14, 5, 9}}};
    auto cyc = assemble_cycle(chain, forest);
    CHECK(cyc.vertices == std::vector<vertex_id>{30, 18, 17, 16, 15, 14, 5, 6, 7, 8,
                                                 9, 10, 25, 26, 27, 28, 29});
    CHECK(cyc.length() == 17);
}

TEST_CASE("assemble_cycle tolerates a mild hop past the grandparent chord") {
    // v_2 sits below u_0, which the greedy builder never produces, yet the
    // union still forms one cycle.
    auto forest = testsupport::path_forest(101);
    chord_chain chain{{{100, 80, 20}, {95, 60, 35}, {90, 40, 50}}};
    auto cyc = assemble_cycle(chain, forest);
    CHECK(cyc.length() == 5 + 10 + 20 + 3);
}

TEST_CASE("assemble_cycle rejects malformed chains") {
    auto forest = testsupport::path_forest(101);
    CHECK(throws_code(errc::malformed_chain, [&] { assemble_cycle({}, forest); }));
    CHECK(throws_code(errc::malformed_chain, [&] {
        assemble_cycle({{{10, 4, 5}}}, forest); // span disagrees with depths
    }));
    CHECK(throws_code(errc::malformed_chain, [&] {
        auto star = rooted_forest::from_parents({no_vertex, 0, 0});
        assemble_cycle({{{1, 2, 0}}}, star); // endpoints are siblings
    }));
    CHECK(throws_code(errc::malformed_chain, [&] {
        // second lower endpoint above the first upper endpoint
        assemble_cycle({{{30, 18, 12}, {17, 5, 12}}}, forest);
    }));
    CHECK(throws_code(errc::malformed_chain, [&] {
        // second upper endpoint below the first upper endpoint
        assemble_cycle({{{30, 18, 12}, {25, 19, 6}}}, forest);
    }));
}

TEST_CASE("assemble_cycle rejects overlapping segments") {
    // The fourth chord dives past u_1, so two segments share interior
    // vertices and the union exceeds degree 2.
    auto forest = testsupport::path_forest(101);
    chord_chain chain{{{100, 80, 20}, {95, 60, 35}, {90, 40, 50}, {85, 20, 65}}};
    CHECK(throws_code(errc::not_single_cycle, [&] { assemble_cycle(chain, forest); }));
}

TEST_CASE("assemble_cycle matches the length formula on random chains") {
    auto forest = testsupport::path_forest(3001);
    counter_rng rng(42);
    for (int i = 0; i < 300; ++i) {
        auto sample = testsupport::random_interleaving_chain(rng);
        REQUIRE(sample.path_vertices <= 3001);
        auto cyc = assemble_cycle(sample.chain, forest);
        CHECK(cyc.length() == sample.expected_length);
        std::set<vertex_id> seen(cyc.vertices.begin(), cyc.vertices.end());
        CHECK(seen.size() == cyc.length()); // simple: no vertex repeats
    }
}

TEST_CASE("find_long_cycle at p=0 fails for lack of full vertices") {
    auto g = host_graph::complete(12);
    percolation_oracle oracle(g, 0.0, 5);
    thresholds th(0.05, 11);
    cycle_search_trace trace;
    auto out = find_long_cycle(g, oracle, th, &trace);

    CHECK_FALSE(out.success());
    CHECK(out.branch == search_branch::chord_chain);
    REQUIRE(out.failure.has_value());
    CHECK(out.failure->reason == failure_reason::no_full_vertices);
    CHECK(out.best_length == 0);
    CHECK(trace.exploration.tested_count == g.edge_count());
    CHECK(trace.table.full_count == 0);
    CHECK_FALSE(trace.path_search.has_value());
}

TEST_CASE("find_long_cycle on K_10 at p=1 closes a Hamilton cycle") {
    auto g = host_graph::complete(10);
    percolation_oracle oracle(g, 1.0, 7);
    thresholds th(0.05, 9);
    cycle_search_trace trace;
    auto out = find_long_cycle(g, oracle, th, &trace);

    REQUIRE(out.success());
    CHECK(out.branch == search_branch::long_condition);
    CHECK(out.found->vertices == std::vector<vertex_id>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK(out.best_length == 10);
    CHECK(trace.exploration.tested_count == 9);
    CHECK_FALSE(trace.path_search.has_value());
    CHECK(is_valid_cycle(*out.found, g, oracle, trace.exploration.forest));
}

TEST_CASE("find_long_cycle walks the chord-chain branch end to end") {
    auto g = window_fixture(4050);
    percolation_oracle oracle(g, 1.0, 1);
    thresholds th(0.1, 40); // t_long 20 exceeds every chord span: long branch dead
    cycle_search_trace trace;
    auto out = find_long_cycle(g, oracle, th, &trace);

    REQUIRE(out.success());
    CHECK(out.branch == search_branch::chord_chain);
    CHECK(out.best_length == 1820); // 18 + 99*17 + 18 + 101 edges
    REQUIRE(trace.path_search.has_value());
    CHECK(trace.path_search->result == vertical_path_search::status::found);
    CHECK(trace.path_search->bad_count == 0);
    CHECK(trace.path_search->path.top() == 19);
    CHECK(trace.path_search->path.bottom() == 4019);
    CHECK(is_valid_cycle(*out.found, g, oracle, trace.exploration.forest));
}

TEST_CASE("find_long_cycle reports a missing vertical path") {
    auto g = window_fixture(2000); // tree depth 1999 < len_path 4000
    percolation_oracle oracle(g, 1.0, 1);
    thresholds th(0.1, 40);
    cycle_search_trace trace;
    auto out = find_long_cycle(g, oracle, th, &trace);

    CHECK_FALSE(out.success());
    CHECK(out.branch == search_branch::chord_chain);
    REQUIRE(out.failure.has_value());
    CHECK(out.failure->reason == failure_reason::no_vertical_path);
    CHECK(trace.table.full_count > 0);
    REQUIRE(trace.path_search.has_value());
    CHECK(trace.path_search->result == vertical_path_search::status::not_found);
}

TEST_CASE("find_long_cycle reports an unavoidable bad stretch") {
    auto g = window_fixture(4050, 2000); // vertex 2000 keeps no chords
    percolation_oracle oracle(g, 1.0, 1);
    thresholds th(0.1, 40); // bad_max = 0
    cycle_search_trace trace;
    auto out = find_long_cycle(g, oracle, th, &trace);

    CHECK_FALSE(out.success());
    REQUIRE(out.failure.has_value());
    CHECK(out.failure->reason == failure_reason::bad_count_exceeded);
    REQUIRE(trace.path_search.has_value());
    CHECK(trace.path_search->result == vertical_path_search::status::bad_count_exceeded);
    CHECK(trace.path_search->bad_count > 0);
}

TEST_CASE("is_valid_cycle checks structure and edge provenance") {
    auto forest = testsupport::path_forest(4);
    auto g = host_graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});

    percolation_oracle fresh(g, 1.0, 1);
    cycle square{{0, 1, 2, 3}};
    CHECK_FALSE(is_valid_cycle(square, g, fresh, forest)); // (3,0) untested
    fresh.test_edge(3, 0);
    CHECK(is_valid_cycle(square, g, fresh, forest)); // untested tree edges are fine

    percolation_oracle closed(g, 0.0, 1);
    closed.test_edge(3, 0);
    CHECK_FALSE(is_valid_cycle(square, g, closed, forest)); // (3,0) absent

    CHECK_FALSE(is_valid_cycle(cycle{{0, 1}}, g, fresh, forest));
    CHECK_FALSE(is_valid_cycle(cycle{{0, 1, 1, 2}}, g, fresh, forest));
    CHECK_FALSE(is_valid_cycle(cycle{{0, 1, 3, 2}}, g, fresh, forest)); // (1,3) no edge
}
