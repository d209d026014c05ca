#pragma once

#include "planarcert/graph.hpp"
#include "planarcert/parallel.hpp"
#include "planarcert/planarity.hpp"
#include "planarcert/rational.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace planarcert {

// Boundary-level class of a surgery endpoint. The primed singleton/pair
// variants share parameters and bonuses with their unprimed versions, so they
// collapse here; the surgery module keeps the finer distinction.
enum class TypeClass { Omega, Alpha, Beta, Mu, Nu };

// (n, o, obar, z): level size, outside-neighbor count per node, obar = o+n-1,
// and the cap z on edges shared with an adjacent size-3 level.
struct TypeParams {
    int n, o, obar, z;
};

constexpr TypeParams params(TypeClass t) {
    switch (t) {
    case TypeClass::Omega: return {1, 0, 0, 3};
    case TypeClass::Alpha: return {1, 1, 1, 3};
    case TypeClass::Beta:  return {1, 2, 2, 3};
    case TypeClass::Mu:    return {2, 1, 2, 5};
    case TypeClass::Nu:    return {2, 2, 3, 5};
    }
    return {0, 0, 0, 0};
}

constexpr const char* type_name(TypeClass t) {
    switch (t) {
    case TypeClass::Omega: return "omega";
    case TypeClass::Alpha: return "alpha";
    case TypeClass::Beta:  return "beta";
    case TypeClass::Mu:    return "mu";
    case TypeClass::Nu:    return "nu";
    }
    return "?";
}

constexpr std::array<TypeClass, 5> kAllTypeClasses = {TypeClass::Omega, TypeClass::Alpha,
                                                      TypeClass::Beta, TypeClass::Mu,
                                                      TypeClass::Nu};

// The 14 unordered endpoint pairs: everything except omega-omega, which needs
// no surgery analysis.
inline std::vector<std::pair<TypeClass, TypeClass>> surgery_type_pairs() {
    std::vector<std::pair<TypeClass, TypeClass>> out;
    for (std::size_t i = 0; i < kAllTypeClasses.size(); ++i)
        for (std::size_t j = i; j < kAllTypeClasses.size(); ++j) {
            if (kAllTypeClasses[i] == TypeClass::Omega && kAllTypeClasses[j] == TypeClass::Omega)
                continue;
            out.emplace_back(kAllTypeClasses[i], kAllTypeClasses[j]);
        }
    return out;
}

// Guaranteed post-surgery fitness gain for specific endpoint pairs; unlisted
// pairs get the conservative 0.
inline Rational bonus(TypeClass a, TypeClass b) {
    if (a > b)
        std::swap(a, b);
    if (a == TypeClass::Omega && b == TypeClass::Alpha)
        return rational(8, 15);
    if (a == TypeClass::Omega && b == TypeClass::Beta)
        return rational(13, 30);
    if (a == TypeClass::Omega && b == TypeClass::Mu)
        return rational(1, 12);
    if (a == TypeClass::Alpha && b == TypeClass::Alpha)
        return rational(2, 10);
    if (a == TypeClass::Alpha && b == TypeClass::Beta)
        return rational(1, 10);
    return Rational(0);
}

// Lower bound on the fitness change of a surgery that removes x vertices
// spread over w in-between levels, with an explicit bonus term. Split out so
// tests can inject a wrong bonus and watch the grid verdict flip.
inline Rational eval_star_with_bonus(TypeClass a, TypeClass b, int w, int x,
                                     const Rational& bonus_value) {
    if (w < 0 || x < 2)
        throw std::invalid_argument("eval_star: need w >= 0 and x >= 2");
    TypeParams L = params(a), R = params(b);
    long long total = L.n + x + R.n;
    Rational amhm = Rational(BigInt(total * total),
                             BigInt(L.n * L.o + 2 * (3 * total - 6) + R.n * R.o));
    return amhm - rational(L.n, L.obar + R.n) - rational(R.n, R.obar + L.n) + bonus_value -
           rational(2, 5) * Rational(w);
}

inline Rational eval_star(TypeClass a, TypeClass b, int w, int x) {
    return eval_star_with_bonus(a, b, w, x, bonus(a, b));
}

struct StarException {
    TypeClass a, b;
    int w, x;
    Rational value;
};

struct StarGridReport {
    int x_max = 0;
    std::vector<StarException> nonpositive;
    bool exceptions_confined = false;      // nonpositive cells only at (w,x) in {(1,3),(2,6)}
    bool both_points_witnessed = false;    // each of the two cells has a nonpositive pair
    bool pass() const { return exceptions_confined && both_points_witnessed; }
};

// Evaluates the star bound for all 14 pairs over x in [2, x_max],
// 0 <= w <= x/3, and collects every non-positive cell. The claim being
// certified: non-positive values occur exactly at (w,x) = (1,3) and (2,6).
inline StarGridReport verify_star_grid(int x_max = 120) {
    if (x_max < 6)
        throw std::invalid_argument("verify_star_grid: x_max must be >= 6");
    StarGridReport report;
    report.x_max = x_max;
    auto pairs = surgery_type_pairs();

    std::vector<std::vector<StarException>> per_x(static_cast<std::size_t>(x_max - 1));
    parallel_for_index(x_max - 1, [&](long long xi) {
        int x = static_cast<int>(xi) + 2;
        for (int w = 0; 3 * w <= x; ++w)
            for (auto [a, b] : pairs) {
                Rational v = eval_star(a, b, w, x);
                if (v.sign() <= 0)
                    per_x[static_cast<std::size_t>(xi)].push_back({a, b, w, x, v});
            }
    });
    for (auto& chunk : per_x)
        report.nonpositive.insert(report.nonpositive.end(), chunk.begin(), chunk.end());

    bool confined = true;
    bool saw13 = false, saw26 = false;
    for (const auto& e : report.nonpositive) {
        if (e.w == 1 && e.x == 3)
            saw13 = true;
        else if (e.w == 2 && e.x == 6)
            saw26 = true;
        else
            confined = false;
    }
    report.exceptions_confined = confined;
    report.both_points_witnessed = saw13 && saw26;
    return report;
}

struct StarTailReport {
    int x_max = 0;
    long long cells_checked = 0;
    bool star_above_linear_tail = false;   // star > x/6 - 4 - (2/5) w on the whole grid
    bool tail_positive_past_120 = false;   // x/6 - 2x/15 - 4 > 0 for 120 < x <= x_max
    bool pass() const { return star_above_linear_tail && tail_positive_past_120; }
};

// The tail certificate: the star bound dominates x/6 - 4 - (2/5)w everywhere,
// and that linear floor is itself positive once x exceeds 120 (since with
// w <= x/3 it is at least x/30 - 4).
inline StarTailReport verify_star_tail(int x_max = 2000) {
    if (x_max < 2)
        throw std::invalid_argument("verify_star_tail: x_max must be >= 2");
    StarTailReport report;
    report.x_max = x_max;
    auto pairs = surgery_type_pairs();

    std::vector<char> ok_per_x(static_cast<std::size_t>(x_max - 1), 1);
    std::vector<long long> cells_per_x(static_cast<std::size_t>(x_max - 1), 0);
    parallel_for_index(x_max - 1, [&](long long xi) {
        int x = static_cast<int>(xi) + 2;
        bool ok = true;
        long long cells = 0;
        for (int w = 0; 3 * w <= x; ++w) {
            Rational floor_w = rational(x, 6) - Rational(4) - rational(2, 5) * Rational(w);
            for (auto [a, b] : pairs) {
                ++cells;
                if (!(eval_star(a, b, w, x) > floor_w)) {
                    ok = false;
                    break;
                }
            }
            if (!ok)
                break;
        }
        ok_per_x[static_cast<std::size_t>(xi)] = ok ? 1 : 0;
        cells_per_x[static_cast<std::size_t>(xi)] = cells;
    });
    report.star_above_linear_tail =
        std::all_of(ok_per_x.begin(), ok_per_x.end(), [](char c) { return c == 1; });
    for (long long c : cells_per_x)
        report.cells_checked += c;

    report.tail_positive_past_120 = true;
    for (int x = 121; x <= x_max; ++x) {
        Rational v = rational(x, 6) - rational(2 * x, 15) - Rational(4);
        if (v.sign() <= 0) {
            report.tail_positive_past_120 = false;
            break;
        }
    }
    return report;
}

// Fitness change bound for the two-adjacent-size-3-levels case, where the
// endpoint contributions are grouped separately using the shared-edge caps z.
// Fixed at w = 2, x = 6.
inline Rational eval_maltese(TypeClass a, TypeClass b) {
    constexpr int w = 2, x = 6;
    TypeParams L = params(a), R = params(b);
    return rational(L.n * L.n, L.n * L.obar + L.z) +
           rational(x * x, L.z + 2 * (3 * x - 6) + R.z) +
           rational(R.n * R.n, R.n * R.obar + R.z) - rational(L.n, L.obar + R.n) -
           rational(R.n, R.obar + L.n) + bonus(a, b) - rational(2, 5) * Rational(w);
}

struct MalteseEntry {
    TypeClass a, b;
    Rational value;
};

struct MalteseReport {
    std::vector<MalteseEntry> values; // all 14 pairs
    Rational min_value;
    bool all_positive = false;
    bool pass() const { return all_positive; }
};

inline MalteseReport verify_maltese_all() {
    MalteseReport report;
    for (auto [a, b] : surgery_type_pairs())
        report.values.push_back({a, b, eval_maltese(a, b)});
    report.min_value = report.values.front().value;
    report.all_positive = true;
    for (const auto& e : report.values) {
        report.min_value = std::min(report.min_value, e.value);
        if (e.value.sign() <= 0)
            report.all_positive = false;
    }
    return report;
}

struct BoundSlack {
    Rational slack;
    bool holds = false;
};

// The four diameter/inverse-degree bounds for connected planar graphs, each
// with its exact slack: aux D <= (4(n-1)-m)/3, quad D <= 4n^2/(3m),
// main D < (5/2) r (strict), strong r >= (2/5) D + 37/60.
struct BoundsReport {
    BoundSlack aux, quad, main, strong;
    bool all_hold() const { return aux.holds && quad.holds && main.holds && strong.holds; }
};

inline BoundsReport check_bounds(const Graph& g) {
    require_connected(g, "check_bounds");
    if (!planar_quick(g))
        throw std::invalid_argument("check_bounds: graph is not planar");
    long long n = g.vertex_count();
    long long m = g.edge_count();
    Rational D(diameter(g).value);
    Rational r = inverse_degree(g); // throws on an isolated vertex

    BoundsReport rep;
    rep.aux.slack = rational(4 * (n - 1) - m, 3) - D;
    rep.aux.holds = rep.aux.slack.sign() >= 0;
    rep.quad.slack = Rational(BigInt(4 * n * n), BigInt(3 * m)) - D;
    rep.quad.holds = rep.quad.slack.sign() >= 0;
    rep.main.slack = rational(5, 2) * r - D;
    rep.main.holds = rep.main.slack.sign() > 0;
    rep.strong.slack = r - rational(2, 5) * D - rational(37, 60);
    rep.strong.holds = rep.strong.slack.sign() >= 0;
    return rep;
}

struct AmhmResult {
    Rational lhs, rhs;
    bool holds = false;
};

// Arithmetic-harmonic mean bound on a vertex subset:
// sum 1/d(v) >= |S|^2 / sum d(v). Always true; a false result is a bug.
inline AmhmResult check_amhm(const Graph& g, const std::vector<int>& subset) {
    if (subset.empty())
        throw std::invalid_argument("check_amhm: empty subset");
    std::set<int> seen;
    long long degree_sum = 0;
    Rational lhs;
    for (int v : subset) {
        if (!seen.insert(v).second)
            throw std::invalid_argument("check_amhm: repeated vertex in subset");
        int d = g.degree(v);
        if (d == 0)
            throw std::invalid_argument("check_amhm: degree-0 vertex in subset");
        degree_sum += d;
        lhs += rational(1, d);
    }
    AmhmResult res;
    res.lhs = lhs;
    res.rhs = Rational(BigInt(static_cast<long long>(subset.size()) *
                              static_cast<long long>(subset.size())),
                       BigInt(degree_sum));
    res.holds = res.lhs >= res.rhs;
    return res;
}

// n^2/(6n-12) >= (2/5)(n+1)/3 for every 3 <= n <= n_max; the degenerate case
// of the structure argument where all interior levels have size 3.
inline bool check_simplecase_inequality(int n_max) {
    if (n_max < 3)
        throw std::invalid_argument("check_simplecase_inequality: n_max must be >= 3");
    for (long long n = 3; n <= n_max; ++n) {
        Rational lhs(BigInt(n * n), BigInt(6 * n - 12));
        Rational rhs = rational(2, 5) * rational(n + 1, 3);
        if (lhs < rhs)
            return false;
    }
    return true;
}

} // namespace planarcert
