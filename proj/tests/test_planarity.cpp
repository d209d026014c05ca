#include "planarcert/planarity.hpp"
#include "planarcert/families.hpp"

#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace planarcert;
using testsupport::make_rng;

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v)
            g.add_edge(u, a + v);
    return g;
}

// subdivide every edge once
Graph subdivide(const Graph& g) {
    auto edges = g.edges();
    Graph out(g.vertex_count() + static_cast<int>(edges.size()));
    int next = g.vertex_count();
    for (auto [u, v] : edges) {
        out.add_edge(u, next);
        out.add_edge(next, v);
        ++next;
    }
    return out;
}

} // namespace

TEST_CASE("euler filter") {
    CHECK_FALSE(euler_filter(complete(5)));     // 10 > 9
    CHECK(euler_filter(gen_T(12)));             // exactly 3n-6
    CHECK(euler_filter(gen_path(4)));
    CHECK(euler_filter(complete(2)));           // small n exempt
}

TEST_CASE("K5 and K3,3 produce verified witnesses") {
    auto k5 = is_planar(complete(5));
    REQUIRE_FALSE(k5.is_planar);
    CHECK(k5.witness_kind == WitnessKind::K5);
    CHECK(classify_kuratowski(complete(5), k5.witness_edges) == WitnessKind::K5);

    auto k33 = is_planar(complete_bipartite(3, 3));
    REQUIRE_FALSE(k33.is_planar);
    CHECK(k33.witness_kind == WitnessKind::K33);
}

TEST_CASE("subdivisions are still detected with correct kind") {
    auto k5 = is_planar(subdivide(complete(5)));
    REQUIRE_FALSE(k5.is_planar);
    CHECK(k5.witness_kind == WitnessKind::K5);

    auto k33 = is_planar(subdivide(complete_bipartite(3, 3)));
    REQUIRE_FALSE(k33.is_planar);
    CHECK(k33.witness_kind == WitnessKind::K33);
}

TEST_CASE("family members are planar with Euler-consistent embeddings") {
    for (const Graph& g : {gen_L(8), gen_T(12), gen_L_with_tail(12), gen_K5_minus(),
                           gen_path(7), gen_L(4), gen_T(6)}) {
        auto verdict = is_planar(g);
        REQUIRE(verdict.is_planar);
        CHECK(embedding_satisfies_euler(g, verdict.rotation));
    }
}

TEST_CASE("face counts from the rotation system") {
    Graph c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto v = is_planar(c4);
    REQUIRE(v.is_planar);
    CHECK(count_faces(c4, v.rotation) == 2);

    Graph k4 = complete(4);
    auto vk = is_planar(k4);
    REQUIRE(vk.is_planar);
    CHECK(count_faces(k4, vk.rotation) == 4);
}

TEST_CASE("disconnected graphs: planar iff every component is") {
    Graph two_k4(8);
    for (int base : {0, 4})
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v)
                two_k4.add_edge(base + u, base + v);
    auto v = is_planar(two_k4);
    CHECK(v.is_planar);
    CHECK(embedding_satisfies_euler(two_k4, v.rotation));

    Graph k5_plus_isolated(6);
    for (int u = 0; u < 5; ++u)
        for (int w = u + 1; w < 5; ++w)
            k5_plus_isolated.add_edge(u, w);
    CHECK_FALSE(is_planar(k5_plus_isolated).is_planar);
    CHECK(is_planar(Graph(3)).is_planar); // edgeless
}

TEST_CASE("verdict is isomorphism invariant") {
    auto rng = make_rng(21);
    for (int it = 0; it < 100; ++it) {
        int n = 5 + static_cast<int>(rng() % 6);
        Graph g = testsupport::random_connected_graph(rng, n, static_cast<int>(rng() % 14));
        auto p = testsupport::random_permutation(rng, n);
        Graph h = testsupport::permute_graph(g, p);
        CHECK(is_planar(g).is_planar == is_planar(h).is_planar);
        CHECK(planar_quick(g) == is_planar(g).is_planar);
    }
}

TEST_CASE("bogus kuratowski witnesses are rejected") {
    Graph k4 = complete(4);
    CHECK_THROWS_AS(classify_kuratowski(k4, k4.edges()), std::invalid_argument);
    Graph k5 = complete(5);
    // a proper subset of K5's edges is not a subdivision witness
    auto edges = k5.edges();
    edges.pop_back();
    CHECK_THROWS_AS(classify_kuratowski(k5, edges), std::invalid_argument);
    // edges not present in the host graph
    CHECK_THROWS_AS(classify_kuratowski(gen_path(3), {{0, 2}}), std::invalid_argument);
}
