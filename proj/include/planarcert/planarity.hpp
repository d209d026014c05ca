#pragma once

#include "planarcert/graph.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <iterator>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace planarcert {

// m <= 3n-6 for planar graphs on n >= 3 vertices. Returns false only when the
// graph is certifiably non-planar by edge count; true means "not excluded".
inline bool euler_filter(const Graph& g) {
    long long n = g.vertex_count();
    return n < 3 || g.edge_count() <= 3 * n - 6;
}

enum class WitnessKind { K5, K33 };

// Planarity decision with a checkable certificate: a rotation system when
// planar, and the edges of a K5 or K3,3 subdivision when not.
struct PlanarityVerdict {
    bool is_planar = false;
    std::vector<std::vector<int>> rotation;          // per-vertex neighbor order
    std::vector<std::pair<int, int>> witness_edges;  // subdivision edges
    WitnessKind witness_kind = WitnessKind::K5;
};

// Number of face orbits of the rotation system, traced per directed edge with
// the "next edge clockwise after arriving" rule.
inline int count_faces(const Graph& g, const std::vector<std::vector<int>>& rotation) {
    int n = g.vertex_count();
    // position of u in rotation[v]
    std::vector<std::map<int, std::size_t>> pos(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        for (std::size_t i = 0; i < rotation[static_cast<std::size_t>(v)].size(); ++i)
            pos[static_cast<std::size_t>(v)][rotation[static_cast<std::size_t>(v)][i]] = i;

    std::map<std::pair<int, int>, bool> used;
    for (int v = 0; v < n; ++v)
        for (int u : rotation[static_cast<std::size_t>(v)])
            used[{v, u}] = false;

    int faces = 0;
    for (auto& [arc, seen] : used) {
        if (seen)
            continue;
        ++faces;
        auto [u, v] = arc;
        while (!used[{u, v}]) {
            used[{u, v}] = true;
            const auto& rot = rotation[static_cast<std::size_t>(v)];
            std::size_t i = pos[static_cast<std::size_t>(v)].at(u);
            int w = rot[(i + 1) % rot.size()];
            u = v;
            v = w;
        }
    }
    return faces;
}

// V - E + F == 2 on every connected component, faces traced from the rotation
// system restricted to the component.
inline bool embedding_satisfies_euler(const Graph& g, const std::vector<std::vector<int>>& rotation) {
    int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int comps = 0;
    for (int v = 0; v < n; ++v) {
        if (comp[static_cast<std::size_t>(v)] != -1)
            continue;
        auto dist = bfs_distances(g, v);
        for (int u = 0; u < n; ++u)
            if (dist[static_cast<std::size_t>(u)] != kUnreachable)
                comp[static_cast<std::size_t>(u)] = comps;
        ++comps;
    }
    for (int c = 0; c < comps; ++c) {
        std::vector<bool> keep(static_cast<std::size_t>(n), false);
        for (int v = 0; v < n; ++v)
            keep[static_cast<std::size_t>(v)] = comp[static_cast<std::size_t>(v)] == c;
        std::vector<int> map;
        Graph sub = g.induced(keep, &map);
        std::vector<std::vector<int>> sub_rot(static_cast<std::size_t>(sub.vertex_count()));
        for (int v = 0; v < n; ++v) {
            if (map[static_cast<std::size_t>(v)] < 0)
                continue;
            for (int u : rotation[static_cast<std::size_t>(v)])
                sub_rot[static_cast<std::size_t>(map[static_cast<std::size_t>(v)])].push_back(
                    map[static_cast<std::size_t>(u)]);
        }
        long long V = sub.vertex_count();
        long long E = sub.edge_count();
        long long F = E == 0 ? 1 : count_faces(sub, sub_rot);
        if (V - E + F != 2)
            return false;
    }
    return true;
}

// Drops dangling paths from an edge set: repeatedly removes edges incident to
// a degree-1 vertex. The planarity backend's Kuratowski output can carry a
// stray tree edge or two on top of the actual subdivision.
inline std::vector<std::pair<int, int>> trim_to_subdivision(
    int n, std::vector<std::pair<int, int>> edges) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> degree(static_cast<std::size_t>(n), 0);
        for (auto [u, v] : edges) {
            ++degree[static_cast<std::size_t>(u)];
            ++degree[static_cast<std::size_t>(v)];
        }
        std::vector<std::pair<int, int>> kept;
        for (auto [u, v] : edges) {
            if (degree[static_cast<std::size_t>(u)] <= 1 ||
                degree[static_cast<std::size_t>(v)] <= 1)
                changed = true;
            else
                kept.emplace_back(u, v);
        }
        edges = std::move(kept);
    }
    return edges;
}

inline bool planar_quick(const Graph& g);

// Shrinks a non-planar edge set until removing any single edge would make it
// planar. A deletion-minimal non-planar graph is precisely a subdivision of
// K5 or K3,3, which is the certificate shape we publish; the backend's raw
// Kuratowski output is only guaranteed to contract to one of the two.
inline std::vector<std::pair<int, int>> minimize_nonplanar(
    int n, std::vector<std::pair<int, int>> edges) {
    auto nonplanar = [&](const std::vector<std::pair<int, int>>& es) {
        Graph h(n);
        for (auto [u, v] : es)
            h.add_edge(u, v);
        return !planar_quick(h);
    };
    if (!nonplanar(edges))
        throw std::logic_error("minimize_nonplanar: seed edge set is planar");
    for (std::size_t i = 0; i < edges.size();) {
        auto candidate = edges;
        candidate.erase(candidate.begin() + static_cast<std::ptrdiff_t>(i));
        if (nonplanar(candidate))
            edges = std::move(candidate);
        else
            ++i;
    }
    return edges;
}

// Checks that `witness_edges` (a subset of g's edges) forms a subdivision of
// K5 or K3,3 and says which. Throws if the edge set is not such a subdivision.
inline WitnessKind classify_kuratowski(const Graph& g, const std::vector<std::pair<int, int>>& witness_edges) {
    Graph w(g.vertex_count());
    for (auto [u, v] : witness_edges) {
        if (!g.has_edge(u, v))
            throw std::invalid_argument("kuratowski witness: edge not in host graph");
        w.add_edge(u, v);
    }
    std::vector<int> branch;
    for (int v = 0; v < w.vertex_count(); ++v) {
        int d = w.degree(v);
        if (d != 0 && d != 2 && d != 3 && d != 4)
            throw std::invalid_argument("kuratowski witness: vertex of degree " + std::to_string(d));
        if (d >= 3)
            branch.push_back(v);
    }

    // Walk each path of degree-2 vertices between branch vertices, consuming
    // every witness edge exactly once.
    std::map<std::pair<int, int>, int> path_count;
    std::map<std::pair<int, int>, bool> edge_used;
    for (auto [u, v] : w.edges())
        edge_used[{std::min(u, v), std::max(u, v)}] = false;
    auto consume = [&](int a, int b) {
        auto key = std::make_pair(std::min(a, b), std::max(a, b));
        auto it = edge_used.find(key);
        if (it == edge_used.end() || it->second)
            throw std::invalid_argument("kuratowski witness: edge reused or absent");
        it->second = true;
    };
    for (int b : branch) {
        for (int next : w.neighbors(b)) {
            auto key = std::make_pair(std::min(b, next), std::max(b, next));
            if (edge_used.at(key))
                continue;
            int prev = b, cur = next;
            consume(prev, cur);
            while (w.degree(cur) == 2) {
                int step = w.neighbors(cur)[0] == prev ? w.neighbors(cur)[1] : w.neighbors(cur)[0];
                consume(cur, step);
                prev = cur;
                cur = step;
            }
            if (w.degree(cur) < 3)
                throw std::invalid_argument("kuratowski witness: dangling path");
            ++path_count[{std::min(b, cur), std::max(b, cur)}];
        }
    }
    for (auto& [e, used] : edge_used)
        if (!used)
            throw std::invalid_argument("kuratowski witness: leftover edges (degree-2 cycle)");

    // Each branch pair joined by exactly one internally disjoint path. Every
    // path is walked once, from whichever endpoint the scan reaches first.
    for (auto& [pair, cnt] : path_count)
        if (cnt != 1 || pair.first == pair.second)
            throw std::invalid_argument("kuratowski witness: branch pair path count != 1");

    if (branch.size() == 5) {
        for (int v : branch)
            if (w.degree(v) != 4)
                throw std::invalid_argument("kuratowski witness: K5 branch degree != 4");
        if (path_count.size() != 10)
            throw std::invalid_argument("kuratowski witness: K5 needs all 10 branch pairs");
        return WitnessKind::K5;
    }
    if (branch.size() == 6) {
        for (int v : branch)
            if (w.degree(v) != 3)
                throw std::invalid_argument("kuratowski witness: K3,3 branch degree != 3");
        if (path_count.size() != 9)
            throw std::invalid_argument("kuratowski witness: K3,3 needs 9 branch pairs");
        // 2-color by path adjacency; must split 3 + 3 with no same-side pair.
        std::map<int, int> side;
        side[branch[0]] = 0;
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto& [pair, cnt] : path_count) {
                auto a = side.find(pair.first), b = side.find(pair.second);
                if (a != side.end() && b == side.end()) {
                    side[pair.second] = 1 - a->second;
                    changed = true;
                } else if (b != side.end() && a == side.end()) {
                    side[pair.first] = 1 - b->second;
                    changed = true;
                } else if (a != side.end() && b != side.end() && a->second == b->second) {
                    throw std::invalid_argument("kuratowski witness: odd cycle in branch graph");
                }
            }
        }
        int zeros = 0;
        for (auto& [v, s] : side)
            zeros += s == 0;
        if (side.size() != 6 || (zeros != 3))
            throw std::invalid_argument("kuratowski witness: branch graph is not K3,3");
        return WitnessKind::K33;
    }
    throw std::invalid_argument("kuratowski witness: wrong branch vertex count");
}

namespace detail {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::no_property,
                                         boost::property<boost::edge_index_t, int>>;

inline BoostGraph to_boost(const Graph& g) {
    BoostGraph bg(static_cast<std::size_t>(g.vertex_count()));
    int idx = 0;
    for (auto [u, v] : g.edges())
        boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), idx++, bg);
    return bg;
}

} // namespace detail

// Fast yes/no planarity, no certificate. Used on enumeration hot paths.
inline bool planar_quick(const Graph& g) {
    if (!euler_filter(g))
        return false;
    auto bg = detail::to_boost(g);
    return boost::boyer_myrvold_planarity_test(bg);
}

// Full planarity decision. The returned certificate is verified before the
// verdict is handed back: embeddings must satisfy Euler's formula on every
// component, witnesses must be genuine K5/K3,3 subdivisions.
inline PlanarityVerdict is_planar(const Graph& g) {
    auto bg = detail::to_boost(g);
    using Edge = boost::graph_traits<detail::BoostGraph>::edge_descriptor;
    std::vector<std::vector<Edge>> embedding(static_cast<std::size_t>(g.vertex_count()));
    std::vector<Edge> kuratowski;

    PlanarityVerdict verdict;
    verdict.is_planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = embedding.data(),
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

    if (verdict.is_planar) {
        verdict.rotation.resize(static_cast<std::size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v)
            for (Edge e : embedding[static_cast<std::size_t>(v)]) {
                int u = static_cast<int>(boost::source(e, bg)) == v
                            ? static_cast<int>(boost::target(e, bg))
                            : static_cast<int>(boost::source(e, bg));
                verdict.rotation[static_cast<std::size_t>(v)].push_back(u);
            }
        if (!embedding_satisfies_euler(g, verdict.rotation))
            throw std::logic_error("planarity: embedding fails Euler check");
    } else {
        for (Edge e : kuratowski) {
            int u = static_cast<int>(boost::source(e, bg));
            int v = static_cast<int>(boost::target(e, bg));
            verdict.witness_edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(verdict.witness_edges.begin(), verdict.witness_edges.end());
        verdict.witness_edges.erase(
            std::unique(verdict.witness_edges.begin(), verdict.witness_edges.end()),
            verdict.witness_edges.end());
        verdict.witness_edges = minimize_nonplanar(
            g.vertex_count(), trim_to_subdivision(g.vertex_count(), verdict.witness_edges));
        verdict.witness_kind = classify_kuratowski(g, verdict.witness_edges);
    }
    return verdict;
}

} // namespace planarcert
