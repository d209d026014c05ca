#pragma once

#include "planarcert/graph.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace planarcert {

// Closed-form metrics of a generator, cross-checked against measured values
// in the test suite rather than assumed.
struct FamilyMetrics {
    int n = 0;
    long long m = 0;
    int diameter = 0;
    std::optional<Rational> inverse_deg;
};

// Double ladder L_n: two rows of n/2 columns, vertices v[row][col] joined
// whenever the column indices differ by at most one. Vertex id = 2*col + row.
inline Graph gen_L(int n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("gen_L: n must be even and >= 4");
    int cols = n / 2;
    Graph g(n);
    auto id = [](int col, int row) { return 2 * col + row; };
    for (int c = 0; c < cols; ++c) {
        g.add_edge(id(c, 0), id(c, 1));
        if (c + 1 < cols)
            for (int r1 = 0; r1 < 2; ++r1)
                for (int r2 = 0; r2 < 2; ++r2)
                    g.add_edge(id(c, r1), id(c + 1, r2));
    }
    return g;
}

inline FamilyMetrics metrics_L(int n) {
    FamilyMetrics fm;
    fm.n = n;
    fm.m = 5LL * n / 2 - 4;
    fm.diameter = n / 2 - 1;
    // four corner vertices of degree 3, the rest of degree 5
    fm.inverse_deg = rational(n - 4, 5) + rational(4, 3);
    return fm;
}

// Octahedral chain T_n: n/3 triangle layers; consecutive layers are joined by
// the antiprism pattern u[j][c]-u[j+1][c] and u[j][c]-u[j+1][(c+1) mod 3], so
// every consecutive layer pair spans an octahedron. Vertex id = 3*layer + c.
inline Graph gen_T(int n) {
    if (n < 6 || n % 3 != 0)
        throw std::invalid_argument("gen_T: n must be a multiple of 3 and >= 6");
    int layers = n / 3;
    Graph g(n);
    auto id = [](int layer, int c) { return 3 * layer + c; };
    for (int j = 0; j < layers; ++j) {
        for (int c = 0; c < 3; ++c)
            g.add_edge(id(j, c), id(j, (c + 1) % 3));
        if (j + 1 < layers)
            for (int c = 0; c < 3; ++c) {
                g.add_edge(id(j, c), id(j + 1, c));
                g.add_edge(id(j, c), id(j + 1, (c + 1) % 3));
            }
    }
    return g;
}

inline FamilyMetrics metrics_T(int n) {
    FamilyMetrics fm;
    fm.n = n;
    fm.m = 3LL * n - 6;
    // A single octahedron still has antipodal vertex pairs at distance 2;
    // from two layers up, the layer count dominates.
    fm.diameter = n == 6 ? 2 : n / 3 - 1;
    // six boundary vertices of degree 4, the rest of degree 6
    fm.inverse_deg = rational(3, 2) + rational(n - 6, 6);
    return fm;
}

inline Graph gen_path(int n) {
    if (n < 1)
        throw std::invalid_argument("gen_path: n must be >= 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

inline FamilyMetrics metrics_path(int n) {
    FamilyMetrics fm;
    fm.n = n;
    fm.m = n - 1;
    fm.diameter = n - 1;
    if (n == 2)
        fm.inverse_deg = Rational(2);
    else if (n >= 3)
        fm.inverse_deg = Rational(2) + rational(n - 2, 2);
    return fm;
}

// L_{2n/3} with a path of n/3 extra vertices hung on the first ladder vertex.
// n vertices, 2n - 4 edges, diameter 2n/3 - 1.
inline Graph gen_L_with_tail(int n) {
    if (n % 3 != 0 || 2 * n / 3 < 4)
        throw std::invalid_argument("gen_L_with_tail: n must be a multiple of 3 with 2n/3 >= 4");
    int ladder = 2 * n / 3;
    int tail = n / 3;
    Graph g = gen_L(ladder);
    Graph out(n);
    for (auto [u, v] : g.edges())
        out.add_edge(u, v);
    out.add_edge(0, ladder); // tail attaches at v[row 0][col 0]
    for (int k = 1; k < tail; ++k)
        out.add_edge(ladder + k - 1, ladder + k);
    return out;
}

inline FamilyMetrics metrics_L_with_tail(int n) {
    FamilyMetrics fm;
    fm.n = n;
    fm.m = 2LL * n - 4;
    fm.diameter = 2 * n / 3 - 1;
    return fm;
}

struct TailedTResult {
    Graph graph;
    int t_part = 0; // 0 means the construction degenerated to a pure path
    int tail = 0;
    int achieved_n = 0;
    long long achieved_m = 0;
    int achieved_diameter = 0;
};

// Octahedral chain sized to the requested edge budget, padded to n vertices
// with a path hung on one end. The achieved edge count lands within an
// additive constant of the request; callers read the exact values from the
// result rather than assuming them.
inline TailedTResult gen_T_with_tail(int n, long long m) {
    if (n < 2)
        throw std::invalid_argument("gen_T_with_tail: n must be >= 2");
    if (m < n - 1 || (n >= 3 && m > 3LL * n - 6))
        throw std::invalid_argument("gen_T_with_tail: need n-1 <= m <= 3n-6");
    long long q = m + 2 - n;
    long long t_part = q > 0 ? 3 * ((q + 5) / 6) : 0;

    TailedTResult res;
    if (t_part < 6) {
        res.graph = gen_path(n);
        res.t_part = 0;
        res.tail = n;
    } else {
        if (t_part > n)
            throw std::invalid_argument("gen_T_with_tail: infeasible (n, m) pair");
        res.t_part = static_cast<int>(t_part);
        res.tail = n - res.t_part;
        Graph t = gen_T(res.t_part);
        Graph out(n);
        for (auto [u, v] : t.edges())
            out.add_edge(u, v);
        for (int k = 0; k < res.tail; ++k)
            out.add_edge(k == 0 ? 0 : res.t_part + k - 1, res.t_part + k);
        res.graph = out;
    }
    res.achieved_n = res.graph.vertex_count();
    res.achieved_m = res.graph.edge_count();
    res.achieved_diameter = diameter(res.graph).value;
    return res;
}

// K5 minus one edge: the unique equality case of the strong lower bound
// r = (2/5) D + 37/60. Vertices 3 and 4 are the nonadjacent pair.
inline Graph gen_K5_minus() {
    Graph g(5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            if (!(u == 3 && v == 4))
                g.add_edge(u, v);
    return g;
}

} // namespace planarcert
