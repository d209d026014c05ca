#include "planarcert/families.hpp"
#include "planarcert/checks.hpp"
#include "planarcert/planarity.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>

using namespace planarcert;

TEST_CASE("ladder family spot values") {
    Graph l8 = gen_L(8);
    CHECK(l8.vertex_count() == 8);
    CHECK(l8.edge_count() == 16); // 5n/2 - 4
    CHECK(diameter(l8).value == 3);
    CHECK(inverse_degree(l8) == rational(32, 15));

    // n = 4 degenerates to K4
    Graph l4 = gen_L(4);
    CHECK(l4.edge_count() == 6);
    CHECK(diameter(l4).value == 1);

    Graph l6 = gen_L(6);
    CHECK(l6.edge_count() == 11);
    std::vector<int> degs;
    for (int v = 0; v < 6; ++v)
        degs.push_back(l6.degree(v));
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{3, 3, 3, 3, 5, 5});

    CHECK_THROWS_AS(gen_L(5), std::invalid_argument);
    CHECK_THROWS_AS(gen_L(2), std::invalid_argument);
}

TEST_CASE("octahedral chain spot values") {
    Graph t6 = gen_T(6);
    CHECK(t6.vertex_count() == 6);
    CHECK(t6.edge_count() == 12);
    for (int v = 0; v < 6; ++v)
        CHECK(t6.degree(v) == 4);
    CHECK(diameter(t6).value == 2); // antipodal pairs of the single octahedron

    Graph t12 = gen_T(12);
    CHECK(t12.edge_count() == 30);
    CHECK(diameter(t12).value == 3);

    Graph t9 = gen_T(9);
    CHECK(t9.edge_count() == 21);
    CHECK(diameter(t9).value == 2);

    CHECK_THROWS_AS(gen_T(7), std::invalid_argument);
    CHECK_THROWS_AS(gen_T(3), std::invalid_argument);
}

TEST_CASE("measured metrics equal the closed forms") {
    for (int n = 4; n <= 40; n += 2) {
        FamilyMetrics want = metrics_L(n);
        GraphMetrics got = compute_metrics(gen_L(n));
        CHECK(got.m == want.m);
        CHECK(got.diameter == want.diameter);
        CHECK(got.inverse_deg == *want.inverse_deg);
    }
    for (int n = 6; n <= 42; n += 3) {
        FamilyMetrics want = metrics_T(n);
        GraphMetrics got = compute_metrics(gen_T(n));
        CHECK(got.m == want.m);
        CHECK(got.diameter == want.diameter);
        CHECK(got.inverse_deg == *want.inverse_deg);
    }
}

TEST_CASE("path family meets the aux bound with equality") {
    for (int n : {1, 2, 5, 17}) {
        Graph p = gen_path(n);
        CHECK(p.edge_count() == n - 1);
        CHECK((n == 1 ? 0 : diameter(p).value) == n - 1);
    }
    CHECK(check_family_path(100).equality_all);
}

TEST_CASE("tailed ladder") {
    Graph g6 = gen_L_with_tail(6);
    CHECK(g6.vertex_count() == 6);
    CHECK(g6.edge_count() == 8);
    CHECK(diameter(g6).value == 3);

    Graph g12 = gen_L_with_tail(12);
    CHECK(g12.edge_count() == 20);
    CHECK(diameter(g12).value == 7);

    // exact corollary ratio at n = 300: 4n^2 / (3 m D)
    Graph g300 = gen_L_with_tail(300);
    CHECK(g300.edge_count() == 596);
    CHECK(diameter(g300).value == 199);
    Rational ratio = Rational(BigInt(4 * 300 * 300), BigInt(3 * 596 * 199));
    CHECK(ratio == rational(30000, 29651));
    CHECK(ratio > Rational(1));
    CHECK(ratio < rational(51, 50));

    CHECK_THROWS_AS(gen_L_with_tail(4), std::invalid_argument);
    CHECK_THROWS_AS(gen_L_with_tail(10), std::invalid_argument);
}

TEST_CASE("tailed chain reports achieved values") {
    // pure path behavior at the sparse end
    TailedTResult path_like = gen_T_with_tail(20, 19);
    CHECK(path_like.t_part == 0);
    CHECK(path_like.achieved_m == 19);
    CHECK(path_like.achieved_diameter == 19);
    Rational slack0 = rational(4 * 19 - 19, 3) - Rational(19);
    CHECK(slack0 == Rational(0));

    // pure chain at the dense end
    TailedTResult t12 = gen_T_with_tail(12, 30);
    CHECK(t12.t_part == 12);
    CHECK(t12.tail == 0);
    CHECK(t12.achieved_m == 30);
    CHECK(t12.achieved_diameter == 3);
    CHECK(rational(4 * 11 - 30, 3) - Rational(3) == rational(5, 3));

    // mixed case from the middle of the band
    TailedTResult mid = gen_T_with_tail(18, 24);
    CHECK(mid.t_part == 6);
    CHECK(mid.tail == 12);
    CHECK(mid.achieved_m == 24);
    CHECK(mid.achieved_diameter == 14);
    Rational slack = rational(4 * 17 - 24, 3) - Rational(14);
    CHECK(slack == rational(2, 3));

    CHECK_THROWS_AS(gen_T_with_tail(10, 5), std::invalid_argument);   // m < n-1
    CHECK_THROWS_AS(gen_T_with_tail(10, 100), std::invalid_argument); // m > 3n-6
    CHECK(check_tailed_T().all_feasible_ok);
}

TEST_CASE("K5 minus an edge") {
    Graph g = gen_K5_minus();
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 9);
    CHECK(diameter(g).value == 2);
    CHECK(inverse_degree(g) == rational(17, 12));
    CHECK(inverse_degree(g) - rational(2, 5) * Rational(2) == rational(37, 60));
}

TEST_CASE("every generated family member is connected and planar") {
    std::vector<Graph> members;
    for (int n = 4; n <= 30; n += 2)
        members.push_back(gen_L(n));
    for (int n = 6; n <= 30; n += 3)
        members.push_back(gen_T(n));
    for (int n = 6; n <= 30; n += 3)
        members.push_back(gen_L_with_tail(n));
    members.push_back(gen_K5_minus());
    members.push_back(gen_T_with_tail(25, 40).graph);
    for (const Graph& g : members) {
        CHECK(is_connected(g));
        CHECK(planar_quick(g));
    }
}

TEST_CASE("ladder gap and chain slack are the expected constants") {
    FamilyLReport l = check_family_L(60);
    CHECK(l.pass());
    CHECK(*l.gap == rational(7, 3));
    FamilyTReport t = check_family_T(60);
    CHECK(t.pass());
    CHECK(*t.slack == rational(5, 3));
    CHECK(*t.octahedron_slack == rational(2, 3));
}
