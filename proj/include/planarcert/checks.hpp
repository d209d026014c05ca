#pragma once

#include "planarcert/canonical.hpp"
#include "planarcert/certify.hpp"
#include "planarcert/families.hpp"
#include "planarcert/graph.hpp"
#include "planarcert/lowerbound.hpp"
#include "planarcert/planarity.hpp"
#include "planarcert/surgery.hpp"

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace planarcert {

// Composite checks backing `families check`, the property suites and the
// combined certification run. Each routine measures the generated graphs and
// compares against the closed forms; nothing is assumed from the generator.

struct FamilyLReport {
    int n_min = 4, n_max = 0;
    bool forms_match = true;    // measured (m, D, r) equal the closed forms
    bool all_planar = true;
    bool gap_constant = true;   // (5/2) r - D identical across the range
    std::optional<Rational> gap;
    bool pass() const { return forms_match && all_planar && gap_constant; }
};

inline FamilyLReport check_family_L(int n_max = 200) {
    FamilyLReport rep;
    rep.n_max = n_max;
    for (int n = 4; n <= n_max; n += 2) {
        Graph g = gen_L(n);
        FamilyMetrics want = metrics_L(n);
        GraphMetrics got = compute_metrics(g);
        if (got.m != want.m || got.diameter != want.diameter ||
            got.inverse_deg != *want.inverse_deg)
            rep.forms_match = false;
        if (!planar_quick(g))
            rep.all_planar = false;
        Rational gap = rational(5, 2) * got.inverse_deg - Rational(got.diameter);
        if (!rep.gap)
            rep.gap = gap;
        else if (*rep.gap != gap)
            rep.gap_constant = false;
    }
    return rep;
}

struct FamilyTReport {
    int n_min = 6, n_max = 0;
    bool forms_match = true;       // m == 3n-6 and D == closed form, measured
    bool all_planar = true;
    bool slack_constant = true;    // aux-bound slack for n >= 9
    std::optional<Rational> slack; // 5/3 once the chain has at least two octahedra
    std::optional<Rational> octahedron_slack; // the single-octahedron case, 2/3
    bool pass() const { return forms_match && all_planar && slack_constant; }
};

inline FamilyTReport check_family_T(int n_max = 300) {
    FamilyTReport rep;
    rep.n_max = n_max;
    for (int n = 6; n <= n_max; n += 3) {
        Graph g = gen_T(n);
        FamilyMetrics want = metrics_T(n);
        GraphMetrics got = compute_metrics(g);
        if (got.m != want.m || got.diameter != want.diameter ||
            got.inverse_deg != *want.inverse_deg)
            rep.forms_match = false;
        if (!planar_quick(g))
            rep.all_planar = false;
        Rational slack = rational(4 * (n - 1) - got.m, 3) - Rational(got.diameter);
        if (n == 6) {
            rep.octahedron_slack = slack;
        } else if (!rep.slack) {
            rep.slack = slack;
        } else if (*rep.slack != slack) {
            rep.slack_constant = false;
        }
    }
    return rep;
}

struct FamilyPathReport {
    int n_max = 0;
    bool equality_all = true; // D == (4(n-1)-m)/3 exactly for every n
    bool pass() const { return equality_all; }
};

inline FamilyPathReport check_family_path(int n_max = 300) {
    FamilyPathReport rep;
    rep.n_max = n_max;
    for (int n = 1; n <= n_max; ++n) {
        Graph g = gen_path(n);
        long long m = g.edge_count();
        int D = diameter(g).value;
        if (Rational(D) != rational(4 * (n - 1) - m, 3))
            rep.equality_all = false;
    }
    return rep;
}

struct CorollaryRatioReport {
    std::vector<std::pair<int, Rational>> ratios; // n -> 4n^2 / (3 m D), exact
    bool strictly_decreasing = true;
    bool final_in_window = false; // last ratio in (1, 51/50)
    bool pass() const { return strictly_decreasing && final_in_window; }
};

// The tail-augmented ladder drives 4n^2/(3mD) down toward 1; sampled on
// n = step, 2*step, ..., n_max with exact comparisons.
inline CorollaryRatioReport check_corollary_ratio(int step = 30, int n_max = 300) {
    CorollaryRatioReport rep;
    for (int n = step; n <= n_max; n += step) {
        Graph g = gen_L_with_tail(n);
        GraphMetrics got = compute_metrics(g);
        Rational ratio = Rational(BigInt(4LL * n * n), BigInt(3 * got.m * got.diameter));
        if (!rep.ratios.empty() && ratio >= rep.ratios.back().second)
            rep.strictly_decreasing = false;
        rep.ratios.emplace_back(n, ratio);
    }
    if (!rep.ratios.empty()) {
        const Rational& last = rep.ratios.back().second;
        rep.final_in_window = last > Rational(1) && last < rational(51, 50);
    }
    return rep;
}

struct TailedTReport {
    int cases = 0;
    bool all_feasible_ok = true;   // slack in [0, 5/3] and achieved m within 5 of request
    bool pass() const { return all_feasible_ok; }
};

// Sweeps a grid of (n, m) requests across the feasible band and checks the
// reported reachability of the aux bound up to its additive constant.
inline TailedTReport check_tailed_T() {
    TailedTReport rep;
    for (int n : {8, 12, 18, 20, 30, 47, 60, 101}) {
        for (long long m = n - 1; m <= 3LL * n - 6; m += 3) {
            TailedTResult res = gen_T_with_tail(n, m);
            ++rep.cases;
            Rational slack = rational(4 * (n - 1) - res.achieved_m, 3) -
                             Rational(res.achieved_diameter);
            bool ok = res.achieved_n == n && slack.sign() >= 0 && slack <= rational(5, 3) &&
                      res.achieved_m >= m - 5 && res.achieved_m <= m + 5 &&
                      is_connected(res.graph) && planar_quick(res.graph);
            if (!ok)
                rep.all_feasible_ok = false;
        }
    }
    return rep;
}

struct AmhmSuiteReport {
    int samples = 0;
    bool all_hold = true;
    bool pass() const { return all_hold; }
};

inline AmhmSuiteReport run_amhm_suite(int samples = 1000, std::uint64_t seed = 20240301) {
    AmhmSuiteReport rep;
    rep.samples = samples;
    std::mt19937_64 rng(seed);
    for (int it = 0; it < samples; ++it) {
        int n = 2 + static_cast<int>(rng() % 24);
        Graph g(n);
        for (int v = 1; v < n; ++v)
            g.add_edge(v, static_cast<int>(rng() % static_cast<unsigned>(v)));
        int extra = static_cast<int>(rng() % 30);
        for (int i = 0; i < extra; ++i) {
            int u = static_cast<int>(rng() % static_cast<unsigned>(n));
            int v = static_cast<int>(rng() % static_cast<unsigned>(n));
            if (u != v)
                g.add_edge(u, v);
        }
        std::vector<int> subset;
        for (int v = 0; v < n; ++v)
            if (rng() % 2)
                subset.push_back(v);
        if (subset.empty())
            subset.push_back(static_cast<int>(rng() % static_cast<unsigned>(n)));
        if (!check_amhm(g, subset).holds)
            rep.all_hold = false;
    }
    return rep;
}

struct CanonicalInvarianceReport {
    int trials = 0;
    bool relabelings_invariant = true;
    bool distinct_classes_distinct = true; // spot pair: path vs star
    bool pass() const { return relabelings_invariant && distinct_classes_distinct; }
};

inline CanonicalInvarianceReport run_canonical_invariance(int trials = 1000,
                                                          std::uint64_t seed = 20240302) {
    CanonicalInvarianceReport rep;
    rep.trials = trials;
    std::mt19937_64 rng(seed);
    for (int it = 0; it < trials; ++it) {
        int n = 8;
        Graph g(n);
        for (int v = 1; v < n; ++v)
            g.add_edge(v, static_cast<int>(rng() % static_cast<unsigned>(v)));
        int extra = static_cast<int>(rng() % 12);
        for (int i = 0; i < extra; ++i) {
            int u = static_cast<int>(rng() % static_cast<unsigned>(n));
            int v = static_cast<int>(rng() % static_cast<unsigned>(n));
            if (u != v)
                g.add_edge(u, v);
        }
        std::vector<int> p(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            p[static_cast<std::size_t>(v)] = v;
        std::shuffle(p.begin(), p.end(), rng);
        Graph h(n);
        for (auto [u, v] : g.edges())
            h.add_edge(p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(v)]);
        if (canonical_form(g) != canonical_form(h))
            rep.relabelings_invariant = false;
    }
    Graph p4 = gen_path(4);
    Graph star = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    rep.distinct_classes_distinct = canonical_form(p4) != canonical_form(star);
    return rep;
}

struct SurgeryContractReport {
    int instances = 0;
    bool all_hold = true;
    bool pass() const { return all_hold; }
};

// Random structured graphs provide endless surgery instances with connected
// levels of size at most 2; the diameter must drop by exactly the number of
// removed levels, and the result must stay planar.
inline SurgeryContractReport run_surgery_contract_suite(int instances = 100,
                                                        std::uint64_t seed = 20240303) {
    SurgeryContractReport rep;
    std::mt19937_64 rng(seed);
    while (rep.instances < instances) {
        LevelSequence seq = random_level_sequence(rng, 12);
        std::vector<int> small;
        for (std::size_t i = 0; i < seq.sizes.size(); ++i)
            if (seq.sizes[i] <= 2)
                small.push_back(static_cast<int>(i));
        if (small.size() < 2)
            continue;
        int a = small[rng() % small.size()];
        int b = small[rng() % small.size()];
        if (a == b)
            continue;
        int L = std::min(a, b), R = std::max(a, b);
        Graph g = gen_structured_graph(seq);
        auto [result, report] = apply_surgery(g, 0, L, R); // asserts the contract itself
        ++rep.instances;
        if (report.delta_diameter != R - L - 1 || !report.result_planar ||
            !is_connected(result))
            rep.all_hold = false;
    }
    return rep;
}

} // namespace planarcert
