#include "planarcert/certify.hpp"
#include "planarcert/families.hpp"

#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace planarcert;

TEST_CASE("type parameter table") {
    auto check = [](TypeClass t, int n, int o, int obar, int z) {
        TypeParams p = params(t);
        CHECK(p.n == n);
        CHECK(p.o == o);
        CHECK(p.obar == obar);
        CHECK(p.z == z);
        CHECK(p.obar == p.o + p.n - 1);
    };
    check(TypeClass::Omega, 1, 0, 0, 3);
    check(TypeClass::Alpha, 1, 1, 1, 3);
    check(TypeClass::Beta, 1, 2, 2, 3);
    check(TypeClass::Mu, 2, 1, 2, 5);
    check(TypeClass::Nu, 2, 2, 3, 5);
}

TEST_CASE("the 14 surgery pairs") {
    auto pairs = surgery_type_pairs();
    CHECK(pairs.size() == 14);
    for (auto [a, b] : pairs)
        CHECK_FALSE((a == TypeClass::Omega && b == TypeClass::Omega));
}

TEST_CASE("bonus table") {
    CHECK(bonus(TypeClass::Alpha, TypeClass::Beta) == rational(1, 10));
    CHECK(bonus(TypeClass::Alpha, TypeClass::Alpha) == rational(2, 10));
    CHECK(bonus(TypeClass::Omega, TypeClass::Beta) == rational(13, 30));
    CHECK(bonus(TypeClass::Omega, TypeClass::Alpha) == rational(8, 15));
    CHECK(bonus(TypeClass::Omega, TypeClass::Mu) == rational(1, 12));
    CHECK(bonus(TypeClass::Nu, TypeClass::Nu) == Rational(0));
    CHECK(bonus(TypeClass::Omega, TypeClass::Nu) == Rational(0));
    for (auto [a, b] : surgery_type_pairs()) {
        CHECK(bonus(a, b) == bonus(b, a));
        CHECK(bonus(a, b).sign() >= 0);
    }
}

TEST_CASE("star evaluation matches independent hand computations") {
    // alpha-alpha, w=1, x=3: 25/20 - 1/2 - 1/2 + 1/5 - 2/5
    Rational hand_aa = rational(25, 20) - rational(1, 2) - rational(1, 2) + rational(1, 5) -
                       rational(2, 5);
    CHECK(hand_aa == rational(1, 20));
    CHECK(eval_star(TypeClass::Alpha, TypeClass::Alpha, 1, 3) == hand_aa);

    // omega-beta, w=1, x=3: 25/20 - 1 - 1/3 + 13/30 - 2/5, a genuine exception
    Rational hand_ob = rational(25, 20) - Rational(1) - rational(1, 3) + rational(13, 30) -
                       rational(2, 5);
    CHECK(hand_ob == rational(-1, 20));
    CHECK(eval_star(TypeClass::Omega, TypeClass::Beta, 1, 3) == hand_ob);

    // alpha-alpha, w=0, x=2: 16/14 - 1/2 - 1/2 + 1/5
    Rational hand_w0 = rational(16, 14) - Rational(1) + rational(1, 5);
    CHECK(eval_star(TypeClass::Alpha, TypeClass::Alpha, 0, 2) == hand_w0);
    CHECK(hand_w0.sign() > 0);

    CHECK_THROWS_AS(eval_star(TypeClass::Alpha, TypeClass::Alpha, -1, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(eval_star(TypeClass::Alpha, TypeClass::Alpha, 0, 1),
                    std::invalid_argument);
}

TEST_CASE("star is symmetric in its endpoints") {
    for (auto [a, b] : surgery_type_pairs())
        for (int x : {2, 3, 6, 17})
            for (int w = 0; 3 * w <= x; ++w)
                CHECK(eval_star(a, b, w, x) == eval_star(b, a, w, x));
}

TEST_CASE("star grid certificate") {
    StarGridReport rep = verify_star_grid(120);
    CHECK(rep.pass());
    bool saw_omega_beta_13 = false;
    for (const auto& e : rep.nonpositive) {
        CHECK(((e.w == 1 && e.x == 3) || (e.w == 2 && e.x == 6)));
        if (e.w == 1 && e.x == 3 && e.a == TypeClass::Omega && e.b == TypeClass::Beta) {
            saw_omega_beta_13 = true;
            CHECK(e.value == rational(-1, 20));
        }
    }
    CHECK(saw_omega_beta_13);

    // the two exceptional points already exist within a minimal grid
    StarGridReport small = verify_star_grid(6);
    CHECK(small.pass());
    CHECK_THROWS_AS(verify_star_grid(5), std::invalid_argument);
}

TEST_CASE("a corrupted bonus would flip grid cells outside the exceptions") {
    // with the true bonus the omega-beta cell at w=0, x=2 is positive; a sign
    // flip sends it negative, which the grid verifier would report
    Rational good = eval_star_with_bonus(TypeClass::Omega, TypeClass::Beta, 0, 2,
                                         rational(13, 30));
    Rational bad = eval_star_with_bonus(TypeClass::Omega, TypeClass::Beta, 0, 2,
                                        rational(-13, 30));
    CHECK(good.sign() > 0);
    CHECK(bad.sign() < 0);
}

TEST_CASE("star tail certificate") {
    // single-point sanity: 1/20 > 3/6 - 4 - 2/5
    Rational floor13 = rational(3, 6) - Rational(4) - rational(2, 5);
    CHECK(eval_star(TypeClass::Alpha, TypeClass::Alpha, 1, 3) > floor13);
    // the linear tail becomes positive exactly after 120
    CHECK(rational(121, 6) - rational(242, 15) - Rational(4) == rational(1, 30));
    CHECK((rational(120, 6) - rational(240, 15) - Rational(4)).sign() == 0);

    StarTailReport rep = verify_star_tail(300);
    CHECK(rep.pass());
}

TEST_CASE("maltese evaluation and positivity") {
    // alpha-alpha: 1/4 + 36/30 + 1/4 - 1/2 - 1/2 + 1/5 - 4/5
    Rational hand = rational(1, 4) + rational(36, 30) + rational(1, 4) - rational(1, 2) -
                    rational(1, 2) + rational(1, 5) - rational(4, 5);
    CHECK(hand == rational(1, 10));
    CHECK(eval_maltese(TypeClass::Alpha, TypeClass::Alpha) == hand);

    // omega-beta: 1/3 + 36/30 + 1/5 - 1 - 1/3 + 13/30 - 4/5
    Rational hand_ob = rational(1, 3) + rational(36, 30) + rational(1, 5) - Rational(1) -
                       rational(1, 3) + rational(13, 30) - rational(4, 5);
    CHECK(hand_ob == rational(1, 30));
    CHECK(eval_maltese(TypeClass::Omega, TypeClass::Beta) == hand_ob);

    MalteseReport rep = verify_maltese_all();
    CHECK(rep.values.size() == 14);
    CHECK(rep.all_positive);
    // tightest pair: omega-alpha at 1/60
    CHECK(rep.min_value == rational(1, 60));
    CHECK(eval_maltese(TypeClass::Omega, TypeClass::Alpha) == rational(1, 60));
    for (auto [a, b] : surgery_type_pairs())
        CHECK(eval_maltese(a, b) == eval_maltese(b, a));
}

TEST_CASE("check_bounds slacks") {
    BoundsReport p5 = check_bounds(gen_path(5));
    CHECK(p5.all_hold());
    CHECK(p5.aux.slack == Rational(0));

    BoundsReport k5m = check_bounds(gen_K5_minus());
    CHECK(k5m.all_hold());
    CHECK(k5m.strong.slack == Rational(0));

    BoundsReport t12 = check_bounds(gen_T(12));
    CHECK(t12.all_hold());
    CHECK(t12.aux.slack == rational(5, 3));

    Graph k5(5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            k5.add_edge(u, v);
    CHECK_THROWS_AS(check_bounds(k5), std::invalid_argument);          // non-planar
    CHECK_THROWS_AS(check_bounds(build_graph(4, {{0, 1}, {2, 3}})),
                    std::invalid_argument);                            // disconnected
}

TEST_CASE("arithmetic-harmonic mean bound") {
    // regular graph: equality on the full vertex set
    Graph c5 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    auto res = check_amhm(c5, {0, 1, 2, 3, 4});
    CHECK(res.holds);
    CHECK(res.lhs == res.rhs);

    auto k5m = check_amhm(gen_K5_minus(), {0, 1, 2, 3, 4});
    CHECK(k5m.lhs == rational(17, 12));
    CHECK(k5m.rhs == rational(25, 18));
    CHECK(k5m.holds);

    Graph star = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    auto leaves = check_amhm(star, {1, 2, 3, 4});
    CHECK(leaves.lhs == Rational(4));
    CHECK(leaves.rhs == Rational(4));

    CHECK_THROWS_AS(check_amhm(Graph(2), {0}), std::invalid_argument); // degree 0
    CHECK_THROWS_AS(check_amhm(c5, {}), std::invalid_argument);
    CHECK_THROWS_AS(check_amhm(c5, {1, 1}), std::invalid_argument);
}

TEST_CASE("simple-case inequality") {
    CHECK(rational(9, 6) >= rational(8, 15));                   // n = 3
    CHECK(rational(144, 60) >= rational(26, 15));               // n = 12
    CHECK(check_simplecase_inequality(10000));
    CHECK_THROWS_AS(check_simplecase_inequality(2), std::invalid_argument);
}
