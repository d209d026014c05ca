#include "planarcert/lowerbound.hpp"
#include "planarcert/planarity.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

using namespace planarcert;

TEST_CASE("shared-edge caps") {
    CHECK(s_func(2, 3) == 5);
    CHECK(s_func(3, 2) == 5);
    CHECK(s_func(3, 3) == 9);
    CHECK(s_func(1, 2) == 2);
    CHECK(s_func(1, 1) == 1);
    CHECK_THROWS_AS(s_func(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(s_func(2, 4), std::invalid_argument);
}

TEST_CASE("per-level contribution C") {
    // E = 5 + 2 + 5 = 12 endpoints on a connected pair: 2/6
    CHECK(c_func(3, 2, 3) == rational(1, 3));
    // E = 3 + 6 + 5 = 14 on a triple: 2/5 + 1/4
    CHECK(c_func(1, 3, 2) == rational(13, 20));
    // E = 5 + 6 + 5 = 16 on a triple: 1/6 + 2/5
    CHECK(c_func(2, 3, 2) == rational(17, 30));
    CHECK(c_func(1, 2, 1) == rational(2, 3));
    CHECK(c_func(1, 1, 1) == rational(1, 2));
    CHECK(c_func(1, 3, 1) == rational(3, 4));
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c)
                CHECK(c_func(a, b, c) == c_func(c, b, a));
}

TEST_CASE("level sequence validation") {
    CHECK_NOTHROW(LevelSequence::make({1, 1}));
    CHECK_NOTHROW(LevelSequence::make({1, 3, 2, 3, 1}));
    CHECK_THROWS_AS(LevelSequence::make({1}), std::invalid_argument);
    CHECK_THROWS_AS(LevelSequence::make({2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(LevelSequence::make({1, 3, 3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(LevelSequence::make({1, 4, 1}), std::invalid_argument);
}

TEST_CASE("R lower bound") {
    CHECK(r_func(LevelSequence::make({1, 2, 1})) == rational(5, 3));
    CHECK(r_func(LevelSequence::make({1, 1})) == Rational(2));
    CHECK(r_func(LevelSequence::make({1, 3, 1})) == rational(17, 12));
    // the K5-minus profile is exactly tight
    CHECK(r_func(LevelSequence::make({1, 3, 1})) ==
          rational(2, 5) * Rational(2) + rational(37, 60));
    CHECK(r_func(LevelSequence::make({1, 1, 1})) == rational(5, 2));
}

TEST_CASE("certification digraph shape and costs") {
    CertDigraph cd = build_cert_digraph();
    CHECK(cd.digraph.node_count == 10);
    CHECK(cd.digraph.arcs.size() == 28);
    CHECK_THROWS_AS(cd.pair_node(3, 3), std::invalid_argument);

    auto cost = [&](int from, int to) {
        for (const Arc& a : cd.digraph.arcs)
            if (a.from == from && a.to == to)
                return a.cost;
        FAIL("missing arc");
        return Rational(0);
    };
    CHECK(cost(cd.pair_node(1, 2), cd.pair_node(2, 1)) == rational(4, 15));
    CHECK(cost(cd.source, cd.pair_node(1, 3)) == rational(1, 3));
    CHECK(cost(cd.pair_node(3, 1), cd.sink) == rational(1, 3) - rational(2, 5));
}

TEST_CASE("bellman-ford on the certification digraph") {
    CertDigraph cd = build_cert_digraph();
    BellmanFordResult bf = bellman_ford(cd.digraph, cd.source);
    REQUIRE_FALSE(bf.negative_cycle.has_value());
    REQUIRE(bf.dist[static_cast<std::size_t>(cd.sink)].has_value());
    CHECK(*bf.dist[static_cast<std::size_t>(cd.sink)] == rational(37, 60));

    // distances are a pure function of the arc multiset
    Digraph shuffled = cd.digraph;
    std::mt19937_64 rng(33);
    std::shuffle(shuffled.arcs.begin(), shuffled.arcs.end(), rng);
    BellmanFordResult bf2 = bellman_ford(shuffled, cd.source);
    for (int v = 0; v < cd.digraph.node_count; ++v)
        CHECK(bf.dist[static_cast<std::size_t>(v)] == bf2.dist[static_cast<std::size_t>(v)]);
}

TEST_CASE("bellman-ford on tiny digraphs") {
    Digraph single{2, {{0, 1, Rational(-1)}}};
    BellmanFordResult bf = bellman_ford(single, 0);
    CHECK_FALSE(bf.negative_cycle.has_value());
    CHECK(*bf.dist[1] == Rational(-1));

    Digraph neg2{2, {{0, 1, rational(1, 2)}, {1, 0, Rational(-1)}}};
    BellmanFordResult bfneg = bellman_ford(neg2, 0);
    REQUIRE(bfneg.negative_cycle.has_value());
    CHECK(bfneg.negative_cycle_cost.sign() < 0);
    CHECK(bfneg.negative_cycle->front() == bfneg.negative_cycle->back());

    Digraph unreachable{3, {{0, 1, Rational(1)}}};
    BellmanFordResult bfu = bellman_ford(unreachable, 0);
    CHECK_FALSE(bfu.dist[2].has_value());
}

TEST_CASE("path cost identity") {
    CertDigraph cd = build_cert_digraph();
    LevelSequence s121 = LevelSequence::make({1, 2, 1});
    CHECK(digraph_path_cost(cd, s121) == rational(13, 15));
    CHECK(path_cost_equals_R_identity(s121));

    LevelSequence s131 = LevelSequence::make({1, 3, 1});
    CHECK(digraph_path_cost(cd, s131) == rational(37, 60));
    CHECK(path_cost_equals_R_identity(s131));

    std::mt19937_64 rng(34);
    for (int it = 0; it < 200; ++it)
        CHECK(path_cost_equals_R_identity(random_level_sequence(rng, 19)));

    CHECK_THROWS_AS(digraph_path_cost(cd, LevelSequence::make({1, 1})),
                    std::invalid_argument);
}

TEST_CASE("structured witness graphs") {
    Graph p4 = gen_structured_graph(LevelSequence::make({1, 1, 1, 1}));
    CHECK(p4.vertex_count() == 4);
    CHECK(p4.edge_count() == 3);
    CHECK(diameter(p4).value == 3);

    LevelSequence s1221 = LevelSequence::make({1, 2, 2, 1});
    Graph g = gen_structured_graph(s1221);
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 10);
    CHECK(planar_quick(g));
    CHECK(inverse_degree(g) >= r_func(s1221));

    // {2,3} junctions carry exactly 5 cross edges
    LevelSequence s13231 = LevelSequence::make({1, 3, 2, 3, 1});
    Graph h = gen_structured_graph(s13231);
    auto ld = level_decomposition(h, 0);
    REQUIRE(ld.eccentricity() == 4);
    int cross = 0;
    for (int u : ld.levels[1])
        for (int v : ld.levels[2])
            cross += h.has_edge(u, v) ? 1 : 0;
    CHECK(cross == 5);
    CHECK(planar_quick(h));
    CHECK(inverse_degree(h) >= r_func(s13231));

    // the K5-minus profile builds K5 minus an edge itself
    Graph k5m = gen_structured_graph(LevelSequence::make({1, 3, 1}));
    CHECK(k5m.vertex_count() == 5);
    CHECK(k5m.edge_count() == 9);
    CHECK(inverse_degree(k5m) == rational(17, 12));
}

TEST_CASE("structured theorem sweep") {
    StructuredTheoremReport rep = verify_structured_theorem(60, 15);
    CHECK(rep.pass());
}
