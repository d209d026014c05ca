#pragma once

#include "planarcert/certify.hpp"
#include "planarcert/graph.hpp"
#include "planarcert/planarity.hpp"
#include "planarcert/rational.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace planarcert {

// The 7 boundary-level cases. Singletons: omega/alpha/beta/beta'; connected
// pairs: mu/nu/nu'. The primed cases additionally require two neighbors on
// the inner side (toward the levels being removed).
enum class LevelTypeTag { Omega, Alpha, Beta, BetaPrime, Mu, Nu, NuPrime };

constexpr const char* level_type_name(LevelTypeTag t) {
    switch (t) {
    case LevelTypeTag::Omega:     return "omega";
    case LevelTypeTag::Alpha:     return "alpha";
    case LevelTypeTag::Beta:      return "beta";
    case LevelTypeTag::BetaPrime: return "beta'";
    case LevelTypeTag::Mu:        return "mu";
    case LevelTypeTag::Nu:        return "nu";
    case LevelTypeTag::NuPrime:   return "nu'";
    }
    return "?";
}

// Collapse to the parameter/bonus class used by the grid certificates.
constexpr TypeClass type_class_of(LevelTypeTag t) {
    switch (t) {
    case LevelTypeTag::Omega:     return TypeClass::Omega;
    case LevelTypeTag::Alpha:     return TypeClass::Alpha;
    case LevelTypeTag::Beta:
    case LevelTypeTag::BetaPrime: return TypeClass::Beta;
    case LevelTypeTag::Mu:        return TypeClass::Mu;
    case LevelTypeTag::Nu:
    case LevelTypeTag::NuPrime:   return TypeClass::Nu;
    }
    return TypeClass::Omega;
}

enum class Side { Left, Right };

namespace detail {

inline int count_in_level(const Graph& g, int v, const std::vector<int>& level) {
    int c = 0;
    for (int u : g.neighbors(v))
        if (std::binary_search(level.begin(), level.end(), u))
            ++c;
    return c;
}

} // namespace detail

// Every case of the given side that level i matches, in declaration order.
// Left endpoints look outward toward level i-1 and inward toward i+1; right
// endpoints mirror that. The case set is not exhaustive; an empty result
// means the level falls outside the 7 cases.
inline std::vector<LevelTypeTag> classify_level_all(const Graph& g, const LevelDecomposition& ld,
                                                    int i, Side side) {
    int D = ld.eccentricity();
    if (i < 0 || i > D)
        throw std::invalid_argument("classify_level: level index out of range");

    std::vector<LevelTypeTag> out;
    if ((side == Side::Left && i == 0) || (side == Side::Right && i == D)) {
        out.push_back(LevelTypeTag::Omega);
        return out;
    }

    static const std::vector<int> kEmpty;
    const auto& level = ld.levels[static_cast<std::size_t>(i)];
    auto level_at = [&](int j) -> const std::vector<int>& {
        if (j < 0 || j > D)
            return kEmpty;
        return ld.levels[static_cast<std::size_t>(j)];
    };
    const auto& outer = side == Side::Left ? level_at(i - 1) : level_at(i + 1);
    const auto& inner = side == Side::Left ? level_at(i + 1) : level_at(i - 1);

    if (level.size() == 1) {
        int v = level[0];
        int o = detail::count_in_level(g, v, outer);
        int in = detail::count_in_level(g, v, inner);
        if (o == 1)
            out.push_back(LevelTypeTag::Alpha);
        if (o == 2)
            out.push_back(LevelTypeTag::Beta);
        if (o >= 2 && in >= 2)
            out.push_back(LevelTypeTag::BetaPrime);
    } else if (level.size() == 2 && g.has_edge(level[0], level[1])) {
        int u = level[0], v = level[1];
        int ou = detail::count_in_level(g, u, outer);
        int ov = detail::count_in_level(g, v, outer);
        int iu = detail::count_in_level(g, u, inner);
        int iv = detail::count_in_level(g, v, inner);
        if (ou == 1 && ov == 1) {
            // same single outside neighbor?
            int nu = -1, nv = -2;
            for (int w : g.neighbors(u))
                if (std::binary_search(outer.begin(), outer.end(), w))
                    nu = w;
            for (int w : g.neighbors(v))
                if (std::binary_search(outer.begin(), outer.end(), w))
                    nv = w;
            if (nu == nv)
                out.push_back(LevelTypeTag::Mu);
        }
        if (ou == 2 && ov == 2)
            out.push_back(LevelTypeTag::Nu);
        if (ou >= 2 && ov >= 2 && iu >= 2 && iv >= 2)
            out.push_back(LevelTypeTag::NuPrime);
    }
    return out;
}

// Single best match: the primed case wins over its unprimed sibling since it
// carries the stronger two-sided condition.
inline std::optional<LevelTypeTag> classify_level(const Graph& g, const LevelDecomposition& ld,
                                                  int i, Side side) {
    auto all = classify_level_all(g, ld, i, side);
    if (all.empty())
        return std::nullopt;
    for (LevelTypeTag t : {LevelTypeTag::Omega, LevelTypeTag::BetaPrime, LevelTypeTag::NuPrime,
                           LevelTypeTag::Beta, LevelTypeTag::Nu, LevelTypeTag::Alpha,
                           LevelTypeTag::Mu})
        if (std::find(all.begin(), all.end(), t) != all.end())
            return t;
    return std::nullopt;
}

// Exact before/after accounting of one operation; deltas are before minus
// after, so a shrinking diameter shows up as a positive delta_diameter.
struct SurgeryReport {
    GraphMetrics before, after;
    int delta_n = 0;
    long long delta_m = 0;
    int delta_diameter = 0;
    Rational delta_inverse_deg;
    Rational delta_fitness;
    bool result_planar = false;
    bool contract_asserted = false; // small connected endpoints: D and planarity guaranteed
};

// Removes every level strictly between L and R and joins the two boundary
// levels by a complete bipartite set of edges. Works for levels of any size;
// when both endpoints are connected levels of size at most 2 the classical
// guarantees are asserted: the result is planar and the diameter drops by
// exactly the number of removed levels.
inline std::pair<Graph, SurgeryReport> apply_surgery(const Graph& g, int s, int L, int R) {
    LevelDecomposition ld = level_decomposition(g, s);
    int D = ld.eccentricity();
    if (L < 0 || R > D || L >= R)
        throw std::invalid_argument("apply_surgery: need 0 <= L < R <= eccentricity");

    SurgeryReport rep;
    rep.before = compute_metrics(g);

    std::vector<bool> keep(static_cast<std::size_t>(g.vertex_count()), false);
    for (int i = 0; i <= D; ++i)
        if (i <= L || i >= R)
            for (int v : ld.levels[static_cast<std::size_t>(i)])
                keep[static_cast<std::size_t>(v)] = true;
    std::vector<int> map;
    Graph result = g.induced(keep, &map);
    for (int u : ld.levels[static_cast<std::size_t>(L)])
        for (int v : ld.levels[static_cast<std::size_t>(R)])
            result.add_edge(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]);

    if (!is_connected(result))
        throw std::logic_error("apply_surgery: result is disconnected");

    rep.after = compute_metrics(result);
    rep.delta_n = rep.before.n - rep.after.n;
    rep.delta_m = rep.before.m - rep.after.m;
    rep.delta_diameter = rep.before.diameter - rep.after.diameter;
    rep.delta_inverse_deg = rep.before.inverse_deg - rep.after.inverse_deg;
    rep.delta_fitness = rep.before.fitness - rep.after.fitness;
    rep.result_planar = planar_quick(result);

    const auto& VL = ld.levels[static_cast<std::size_t>(L)];
    const auto& VR = ld.levels[static_cast<std::size_t>(R)];
    bool small_connected = VL.size() <= 2 && VR.size() <= 2 &&
                           (VL.size() < 2 || g.has_edge(VL[0], VL[1])) &&
                           (VR.size() < 2 || g.has_edge(VR[0], VR[1]));
    if (small_connected && planar_quick(g)) {
        rep.contract_asserted = true;
        if (rep.after.diameter != rep.before.diameter - (R - L - 1))
            throw std::logic_error("apply_surgery: diameter contract violated");
        if (!rep.result_planar)
            throw std::logic_error("apply_surgery: planarity contract violated");
    }
    return {std::move(result), rep};
}

struct ShortcutResult {
    Graph graph;
    Rational delta_inverse_deg; // exactly 1/2: the neighbors keep their degrees
};

// Removes a degree-2 vertex whose neighbors are nonadjacent and connects the
// neighbors directly.
inline ShortcutResult shortcut_degree2(const Graph& g, int v) {
    if (g.degree(v) != 2)
        throw std::invalid_argument("shortcut_degree2: vertex does not have degree 2");
    int a = g.neighbors(v)[0], b = g.neighbors(v)[1];
    if (g.has_edge(a, b))
        throw std::invalid_argument("shortcut_degree2: neighbors already adjacent");

    Rational before = inverse_degree(g);
    std::vector<bool> keep(static_cast<std::size_t>(g.vertex_count()), true);
    keep[static_cast<std::size_t>(v)] = false;
    std::vector<int> map;
    Graph result = g.induced(keep, &map);
    result.add_edge(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]);

    ShortcutResult res;
    res.delta_inverse_deg = before - inverse_degree(result);
    res.graph = std::move(result);
    return res;
}

struct AugmentResult {
    Graph graph;
    Rational delta_inverse_deg;             // exact total change, before minus after
    Rational delta_excluding_w;             // same, ignoring w's degree bump
    bool result_planar = false;
};

// Adds one vertex adjacent to u, v, w and s on the local pattern left behind
// by an omega-mu surgery: s adjacent to the connected pair {u, v}, and w a
// common neighbor of the pair.
inline AugmentResult omega_mu_augment(const Graph& g, int s, int u, int v, int w) {
    for (auto [a, b] : {std::pair{s, u}, std::pair{s, v}, std::pair{u, v},
                        std::pair{w, u}, std::pair{w, v}})
        if (!g.has_edge(a, b))
            throw std::invalid_argument("omega_mu_augment: required pattern edge missing");
    if (s == w || s == u || s == v || w == u || w == v || u == v)
        throw std::invalid_argument("omega_mu_augment: vertices must be distinct");

    Rational before = inverse_degree(g);
    Graph result(g.vertex_count() + 1);
    for (auto [a, b] : g.edges())
        result.add_edge(a, b);
    int x = g.vertex_count();
    for (int y : {u, v, w, s})
        result.add_edge(x, y);

    AugmentResult res;
    res.delta_inverse_deg = before - inverse_degree(result);
    res.delta_excluding_w = res.delta_inverse_deg -
                            (rational(1, g.degree(w)) - rational(1, g.degree(w) + 1));
    res.result_planar = planar_quick(result);
    res.graph = std::move(result);
    return res;
}

} // namespace planarcert
