#pragma once

#include "planarcert/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace planarcert {

// Canonical byte string of a graph: [n, then n adjacency rows of the
// canonically relabeled graph, 2 bytes per row]. Equal forms iff isomorphic.
using CanonicalForm = std::vector<std::uint8_t>;

namespace detail {

constexpr int kCanonMaxVertices = 16;

struct CanonSearch {
    int n = 0;
    std::vector<std::uint16_t> adj;        // adjacency rows as bitmasks
    std::vector<std::uint16_t> best_rows;  // current minimum leaf
    std::vector<int> best_position;        // vertex -> canonical position at the minimum
    bool have_best = false;

    using Partition = std::vector<std::vector<int>>;

    static std::uint16_t cell_mask(const std::vector<int>& cell) {
        std::uint16_t m = 0;
        for (int v : cell)
            m |= static_cast<std::uint16_t>(1u << v);
        return m;
    }

    // Equitable refinement: split cells by neighbor counts into other cells
    // until stable. New fragments are ordered by ascending count, which keeps
    // the cell order a function of the graph structure alone.
    void refine(Partition& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t si = 0; si < cells.size() && !changed; ++si) {
                std::uint16_t splitter = cell_mask(cells[si]);
                for (std::size_t ci = 0; ci < cells.size() && !changed; ++ci) {
                    auto& cell = cells[ci];
                    if (cell.size() < 2)
                        continue;
                    int first_count =
                        std::popcount(static_cast<unsigned>(adj[static_cast<std::size_t>(cell[0])] & splitter));
                    bool uniform = true;
                    for (int v : cell)
                        if (std::popcount(static_cast<unsigned>(adj[static_cast<std::size_t>(v)] & splitter)) !=
                            first_count) {
                            uniform = false;
                            break;
                        }
                    if (uniform)
                        continue;
                    // split by count, ascending
                    std::vector<std::pair<int, int>> keyed;
                    keyed.reserve(cell.size());
                    for (int v : cell)
                        keyed.emplace_back(
                            std::popcount(static_cast<unsigned>(adj[static_cast<std::size_t>(v)] & splitter)), v);
                    std::stable_sort(keyed.begin(), keyed.end());
                    Partition fragments;
                    for (auto [cnt, v] : keyed) {
                        if (fragments.empty() || std::popcount(static_cast<unsigned>(
                                                     adj[static_cast<std::size_t>(fragments.back().front())] &
                                                     splitter)) != cnt)
                            fragments.emplace_back();
                        fragments.back().push_back(v);
                    }
                    cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(ci));
                    cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(ci),
                                 fragments.begin(), fragments.end());
                    changed = true;
                }
            }
        }
    }

    void visit_leaf(const Partition& cells) {
        std::vector<int> position(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < cells.size(); ++i)
            position[static_cast<std::size_t>(cells[i][0])] = static_cast<int>(i);
        std::vector<std::uint16_t> rows(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v) {
            std::uint16_t row = 0;
            std::uint16_t a = adj[static_cast<std::size_t>(v)];
            while (a) {
                int u = std::countr_zero(a);
                a = static_cast<std::uint16_t>(a & (a - 1));
                row |= static_cast<std::uint16_t>(1u << position[static_cast<std::size_t>(u)]);
            }
            rows[static_cast<std::size_t>(position[static_cast<std::size_t>(v)])] = row;
        }
        if (!have_best || rows < best_rows) {
            best_rows = std::move(rows);
            best_position = std::move(position);
            have_best = true;
        }
    }

    void search(Partition cells) {
        refine(cells);
        std::size_t target = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1) {
                target = i;
                break;
            }
        if (target == cells.size()) {
            visit_leaf(cells);
            return;
        }
        std::vector<int> branch = cells[target];
        std::sort(branch.begin(), branch.end());
        // A cell of pairwise twins (identical adjacency outside the cell, and
        // a clique or independent set inside) is fully interchangeable: any
        // transposition within it is an automorphism, so one branch suffices.
        {
            std::uint16_t cmask = cell_mask(branch);
            std::uint16_t outside = static_cast<std::uint16_t>(
                adj[static_cast<std::size_t>(branch[0])] & ~cmask);
            int inside = std::popcount(
                static_cast<unsigned>(adj[static_cast<std::size_t>(branch[0])] & cmask));
            bool twins = inside == 0 || inside == static_cast<int>(branch.size()) - 1;
            for (std::size_t i = 1; twins && i < branch.size(); ++i) {
                std::uint16_t row = adj[static_cast<std::size_t>(branch[i])];
                twins = static_cast<std::uint16_t>(row & ~cmask) == outside &&
                        std::popcount(static_cast<unsigned>(row & cmask)) == inside;
            }
            if (twins)
                branch.resize(1);
        }
        for (int u : branch) {
            Partition child = cells;
            std::vector<int> rest;
            for (int v : child[target])
                if (v != u)
                    rest.push_back(v);
            child[target] = {u};
            child.insert(child.begin() + static_cast<std::ptrdiff_t>(target) + 1, std::move(rest));
            search(std::move(child));
        }
    }
};

inline CanonSearch make_search(const Graph& g) {
    if (g.vertex_count() > kCanonMaxVertices)
        throw std::invalid_argument("canonical_form: vertex count above the desk-scale cap of 16");
    CanonSearch cs;
    cs.n = g.vertex_count();
    cs.adj.assign(static_cast<std::size_t>(cs.n), 0);
    for (int v = 0; v < cs.n; ++v)
        for (int u : g.neighbors(v))
            cs.adj[static_cast<std::size_t>(v)] |= static_cast<std::uint16_t>(1u << u);
    return cs;
}

inline CanonicalForm pack_form(int n, const std::vector<std::uint16_t>& rows) {
    CanonicalForm form;
    form.reserve(1 + 2 * static_cast<std::size_t>(n));
    form.push_back(static_cast<std::uint8_t>(n));
    for (std::uint16_t r : rows) {
        form.push_back(static_cast<std::uint8_t>(r & 0xff));
        form.push_back(static_cast<std::uint8_t>(r >> 8));
    }
    return form;
}

} // namespace detail

// Canonical form plus the vertex -> canonical-position map that realizes it.
struct CanonicalLabeling {
    CanonicalForm form;
    std::vector<int> position;
};

inline CanonicalLabeling canonical_labeling(const Graph& g) {
    auto cs = detail::make_search(g);
    if (cs.n == 0)
        return {detail::pack_form(0, {}), {}};
    std::vector<int> all(static_cast<std::size_t>(cs.n));
    for (int v = 0; v < cs.n; ++v)
        all[static_cast<std::size_t>(v)] = v;
    cs.search({all});
    return {detail::pack_form(cs.n, cs.best_rows), cs.best_position};
}

inline CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

// Canonical form of the graph with one distinguished vertex (it is always
// mapped to canonical position 0). Two pairs (G, v), (H, u) get equal forms
// iff some isomorphism G -> H carries v to u.
inline CanonicalForm canonical_form_distinguished(const Graph& g, int v) {
    auto cs = detail::make_search(g);
    if (v < 0 || v >= cs.n)
        throw std::invalid_argument("canonical_form_distinguished: vertex out of range");
    std::vector<int> rest;
    for (int u = 0; u < cs.n; ++u)
        if (u != v)
            rest.push_back(u);
    detail::CanonSearch::Partition initial{{v}};
    if (!rest.empty())
        initial.push_back(std::move(rest));
    cs.search(std::move(initial));
    return detail::pack_form(cs.n, cs.best_rows);
}

} // namespace planarcert
