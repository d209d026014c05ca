#pragma once

#include "planarcert/rational.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace planarcert {

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
// No loops, no parallel edges. Construction-time mutation only; all
// operations below are pure functions, so a built Graph can be shared
// freely across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(check_size(n)) {}

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    long long edge_count() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_[check_vertex(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[check_vertex(v)].size()); }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& nb = adj_[u];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    // Inserts {u, v}; loops are rejected, duplicates are ignored.
    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw std::invalid_argument("Graph: loop edge " + std::to_string(u));
        if (has_edge(u, v))
            return;
        insert_sorted(adj_[u], v);
        insert_sorted(adj_[v], u);
        ++m_;
    }

    void remove_edge(int u, int v) {
        if (!has_edge(u, v))
            throw std::invalid_argument("Graph: removing absent edge");
        erase_sorted(adj_[u], v);
        erase_sorted(adj_[v], u);
        --m_;
    }

    // Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : adj_[u])
                if (u < v)
                    out.emplace_back(u, v);
        return out;
    }

    // Induced subgraph on `keep` (bit i set = vertex i kept), relabeled to
    // 0..k-1 in increasing original order. Returns the vertex map old->new
    // through `old_to_new` (-1 = dropped) when non-null.
    Graph induced(const std::vector<bool>& keep, std::vector<int>* old_to_new = nullptr) const {
        std::vector<int> map(adj_.size(), -1);
        int k = 0;
        for (std::size_t v = 0; v < adj_.size(); ++v)
            if (keep[v])
                map[v] = k++;
        Graph sub(k);
        for (int u = 0; u < vertex_count(); ++u) {
            if (map[u] < 0)
                continue;
            for (int v : adj_[u])
                if (u < v && map[v] >= 0)
                    sub.add_edge(map[u], map[v]);
        }
        if (old_to_new)
            *old_to_new = std::move(map);
        return sub;
    }

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

private:
    static std::size_t check_size(int n) {
        if (n < 0)
            throw std::invalid_argument("Graph: negative vertex count");
        return static_cast<std::size_t>(n);
    }
    int check_vertex(int v) const {
        if (v < 0 || v >= vertex_count())
            throw std::invalid_argument("Graph: vertex " + std::to_string(v) + " out of range");
        return v;
    }
    static void insert_sorted(std::vector<int>& nb, int v) {
        nb.insert(std::lower_bound(nb.begin(), nb.end(), v), v);
    }
    static void erase_sorted(std::vector<int>& nb, int v) {
        nb.erase(std::lower_bound(nb.begin(), nb.end(), v));
    }

    std::vector<std::vector<int>> adj_;
    long long m_ = 0;
};

inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

constexpr int kUnreachable = -1;

// Exact BFS distances from s; kUnreachable marks vertices in other components.
inline std::vector<int> bfs_distances(const Graph& g, int s) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), kUnreachable);
    dist[static_cast<std::size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(v)] == kUnreachable) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0)
        return true;
    auto dist = bfs_distances(g, 0);
    return std::find(dist.begin(), dist.end(), kUnreachable) == dist.end();
}

inline void require_connected(const Graph& g, const char* op) {
    if (g.vertex_count() < 1)
        throw std::invalid_argument(std::string(op) + ": empty graph");
    if (!is_connected(g))
        throw std::invalid_argument(std::string(op) + ": graph is not connected");
}

struct DiameterResult {
    int value = 0;
    std::pair<int, int> witness{0, 0}; // lexicographically smallest attaining pair
};

// Max pairwise BFS distance via one BFS per source. Witness ties break to the
// smallest (u, v) pair in lexicographic order.
inline DiameterResult diameter(const Graph& g) {
    require_connected(g, "diameter");
    int best = 0;
    for (int s = 0; s < g.vertex_count(); ++s) {
        auto dist = bfs_distances(g, s);
        best = std::max(best, *std::max_element(dist.begin(), dist.end()));
    }
    for (int s = 0; s < g.vertex_count(); ++s) {
        auto dist = bfs_distances(g, s);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (dist[static_cast<std::size_t>(v)] == best)
                return {best, {s, v}};
    }
    return {0, {0, 0}}; // n == 1
}

// Sum of reciprocal degrees. Degree-0 vertices make the sum undefined.
inline Rational inverse_degree(const Graph& g) {
    Rational r;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int d = g.degree(v);
        if (d == 0)
            throw std::invalid_argument("inverse_degree: vertex " + std::to_string(v) +
                                        " has degree 0");
        r += Rational(BigInt(1), BigInt(d));
    }
    return r;
}

// (2/5)*diameter - inverse_degree; negative for every connected planar graph.
inline Rational fitness(const Graph& g) {
    require_connected(g, "fitness");
    return rational(2, 5) * Rational(diameter(g).value) - inverse_degree(g);
}

// Snapshot of the quantities the bounds talk about.
struct GraphMetrics {
    int n = 0;
    long long m = 0;
    int diameter = 0;
    Rational inverse_deg;
    Rational fitness; // (2/5) * diameter - inverse_deg
};

inline GraphMetrics compute_metrics(const Graph& g) {
    GraphMetrics gm;
    gm.n = g.vertex_count();
    gm.m = g.edge_count();
    gm.diameter = diameter(g).value;
    gm.inverse_deg = inverse_degree(g);
    gm.fitness = rational(2, 5) * Rational(gm.diameter) - gm.inverse_deg;
    return gm;
}

// Vertices grouped by BFS distance from a source. levels[i] is sorted;
// an edge never joins levels whose indices differ by more than one.
struct LevelDecomposition {
    int source = 0;
    std::vector<std::vector<int>> levels;

    int eccentricity() const { return static_cast<int>(levels.size()) - 1; }
    int level_of(int v) const {
        for (std::size_t i = 0; i < levels.size(); ++i)
            if (std::binary_search(levels[i].begin(), levels[i].end(), v))
                return static_cast<int>(i);
        return -1;
    }
};

inline LevelDecomposition level_decomposition(const Graph& g, int s) {
    require_connected(g, "level_decomposition");
    auto dist = bfs_distances(g, s);
    int ecc = *std::max_element(dist.begin(), dist.end());
    LevelDecomposition ld;
    ld.source = s;
    ld.levels.assign(static_cast<std::size_t>(ecc) + 1, {});
    for (int v = 0; v < g.vertex_count(); ++v)
        ld.levels[static_cast<std::size_t>(dist[static_cast<std::size_t>(v)])].push_back(v);
    return ld;
}

// Articulation vertices by DFS lowpoint, returned sorted.
inline std::vector<int> articulation_vertices(const Graph& g) {
    require_connected(g, "articulation_vertices");
    int n = g.vertex_count();
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<bool> is_cut(static_cast<std::size_t>(n), false);
    int timer = 0;

    // Iterative DFS; (vertex, parent, next-neighbor-index) frames.
    struct Frame {
        int v, parent;
        std::size_t next = 0;
        int tree_children = 0;
    };
    std::vector<Frame> stack;
    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] != -1)
            continue;
        stack.push_back({root, -1});
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                int w = nb[f.next++];
                if (disc[static_cast<std::size_t>(w)] == -1) {
                    ++f.tree_children;
                    disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                    stack.push_back({w, f.v});
                } else if (w != f.parent) {
                    low[static_cast<std::size_t>(f.v)] =
                        std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
                }
            } else {
                Frame done = f;
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& p = stack.back();
                    low[static_cast<std::size_t>(p.v)] =
                        std::min(low[static_cast<std::size_t>(p.v)], low[static_cast<std::size_t>(done.v)]);
                    if (p.parent != -1 &&
                        low[static_cast<std::size_t>(done.v)] >= disc[static_cast<std::size_t>(p.v)])
                        is_cut[static_cast<std::size_t>(p.v)] = true;
                } else if (done.tree_children > 1) {
                    is_cut[static_cast<std::size_t>(done.v)] = true;
                }
            }
        }
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (is_cut[static_cast<std::size_t>(v)])
            out.push_back(v);
    return out;
}

} // namespace planarcert
