#pragma once

#include "planarcert/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace testsupport {

using planarcert::Graph;

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

// Random spanning tree plus `extra` distinct random edges.
inline Graph random_connected_graph(std::mt19937_64& rng, int n, int extra) {
    Graph g(n);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        g.add_edge(v, parent(rng));
    }
    std::uniform_int_distribution<int> any(0, n - 1);
    for (int i = 0; i < extra; ++i) {
        int u = any(rng), v = any(rng);
        if (u != v)
            g.add_edge(u, v); // duplicates ignored
    }
    return g;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

inline Graph permute_graph(const Graph& g, const std::vector<int>& p) {
    Graph out(g.vertex_count());
    for (auto [u, v] : g.edges())
        out.add_edge(p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(v)]);
    return out;
}

// Independent articulation oracle: delete each vertex and test connectivity
// of the rest by brute force.
inline std::vector<int> brute_articulation(const Graph& g) {
    std::vector<int> out;
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        std::vector<bool> keep(static_cast<std::size_t>(n), true);
        keep[static_cast<std::size_t>(v)] = false;
        Graph sub = g.induced(keep);
        if (sub.vertex_count() >= 1 && !planarcert::is_connected(sub))
            out.push_back(v);
    }
    return out;
}

// Independent diameter oracle via Floyd-Warshall.
inline int brute_diameter(const Graph& g) {
    int n = g.vertex_count();
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n), inf));
    for (int v = 0; v < n; ++v)
        d[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = 0;
    for (auto [u, v] : g.edges()) {
        d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
        d[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    std::min(d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                             d[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
                                 d[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
    int best = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            best = std::max(best, d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return best;
}

// Graph from an edge-subset bitmask over the pairs (0,1),(0,2),(1,2),(0,3),...
// (the same column order the compact ASCII encoding uses).
inline Graph graph_from_mask(int n, unsigned long long mask) {
    Graph g(n);
    int bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (mask >> bit & 1)
                g.add_edge(u, v);
    return g;
}

} // namespace testsupport
