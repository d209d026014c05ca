#pragma once

#include "planarcert/canonical.hpp"
#include "planarcert/certify.hpp"
#include "planarcert/families.hpp"
#include "planarcert/graph.hpp"
#include "planarcert/graph_io.hpp"
#include "planarcert/parallel.hpp"
#include "planarcert/planarity.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace planarcert {

namespace detail {

// Canonical deletion vertex: among the vertices whose removal keeps the graph
// connected, the one sitting at the smallest canonical position. Its orbit is
// a function of the isomorphism class only.
inline int canonical_deletion_vertex(const Graph& g, const CanonicalLabeling& lab) {
    std::vector<bool> is_cut(static_cast<std::size_t>(g.vertex_count()), false);
    for (int v : articulation_vertices(g))
        is_cut[static_cast<std::size_t>(v)] = true;
    int best = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (is_cut[static_cast<std::size_t>(v)])
            continue;
        if (best == -1 || lab.position[static_cast<std::size_t>(v)] <
                              lab.position[static_cast<std::size_t>(best)])
            best = v;
    }
    return best; // every connected graph on >= 2 vertices has a non-cut vertex
}

// One augmentation step of the canonical-construction enumeration: extend
// every parent by a new vertex joined to each nonempty neighbor subset, keep
// the child only if (a) it survives the edge-count and planarity filters,
// (b) it was not already produced from this parent by an equivalent subset,
// and (c) the new vertex is equivalent to the child's canonical deletion
// vertex. Every isomorphism class on k+1 vertices is emitted exactly once.
inline std::vector<Graph> augment_step(const std::vector<Graph>& parents) {
    if (parents.empty())
        return {};
    int k = parents.front().vertex_count();
    int child_n = k + 1;
    std::vector<std::vector<Graph>> per_parent(parents.size());

    parallel_for_index(static_cast<long long>(parents.size()), [&](long long pi) {
        const Graph& parent = parents[static_cast<std::size_t>(pi)];
        std::set<CanonicalForm> seen;
        for (unsigned subset = 1; subset < (1u << k); ++subset) {
            long long child_m = parent.edge_count() + std::popcount(subset);
            if (child_n >= 3 && child_m > 3LL * child_n - 6)
                continue;
            Graph child(child_n);
            for (auto [u, v] : parent.edges())
                child.add_edge(u, v);
            for (int u = 0; u < k; ++u)
                if (subset & (1u << u))
                    child.add_edge(u, k);
            if (!planar_quick(child))
                continue;
            CanonicalForm new_vertex_form = canonical_form_distinguished(child, k);
            if (!seen.insert(new_vertex_form).second)
                continue;
            CanonicalLabeling lab = canonical_labeling(child);
            int del = canonical_deletion_vertex(child, lab);
            if (del != k && canonical_form_distinguished(child, del) != new_vertex_form)
                continue;
            per_parent[static_cast<std::size_t>(pi)].push_back(std::move(child));
        }
    });

    std::vector<Graph> out;
    for (auto& chunk : per_parent)
        for (auto& g : chunk)
            out.push_back(std::move(g));
    return out;
}

} // namespace detail

// All connected planar graphs on exactly n vertices, one representative per
// isomorphism class, in a deterministic order independent of the worker count.
inline std::vector<Graph> enumerate_connected_planar(int n) {
    if (n < 1 || n > 9)
        throw std::invalid_argument("enumerate_connected_planar: n must be in [1, 9]");
    std::vector<Graph> level{Graph(1)};
    for (int k = 1; k < n; ++k)
        level = detail::augment_step(level);
    return level;
}

struct SearchViolation {
    int n = 0;
    std::string bound; // "aux", "quad", "main", "strong"
    std::string graph_text;
};

struct SearchReport {
    int n_max = 0;
    std::vector<long long> counts; // counts[k] = classes on k vertices, k in [1, n_max]
    std::vector<SearchViolation> violations;
    std::vector<std::string> equality_witnesses; // graph text, r == (2/5) D + 37/60
    bool equality_unique_k5_minus = false;
    std::optional<Rational> min_strong_slack;
    std::string min_slack_witness;
    std::string note;
    bool pass() const { return violations.empty() && equality_unique_k5_minus; }
};

// Exhaustive desk-scale certificate: every connected planar graph with
// 2 <= n <= n_max satisfies all four bounds, and the only graph attaining
// r = (2/5) D + 37/60 is K5 minus an edge.
inline SearchReport verify_small_graphs(int n_max = 8) {
    if (n_max < 1 || n_max > 9)
        throw std::invalid_argument("verify_small_graphs: n_max must be in [1, 9]");
    SearchReport report;
    report.n_max = n_max;
    report.counts.assign(static_cast<std::size_t>(n_max) + 1, 0);
    report.note = "n=1 skipped: inverse degree is undefined on an isolated vertex";

    CanonicalForm k5_minus_form = canonical_form(gen_K5_minus());

    std::vector<Graph> level{Graph(1)};
    report.counts[1] = 1;
    for (int n = 2; n <= n_max; ++n) {
        level = detail::augment_step(level);
        report.counts[static_cast<std::size_t>(n)] = static_cast<long long>(level.size());
        for (const Graph& g : level) {
            BoundsReport bounds = check_bounds(g);
            auto record = [&](bool holds, const char* name) {
                if (!holds)
                    report.violations.push_back({n, name, graph_to_text(g)});
            };
            record(bounds.aux.holds, "aux");
            record(bounds.quad.holds, "quad");
            record(bounds.main.holds, "main");
            record(bounds.strong.holds, "strong");
            if (bounds.strong.slack.is_zero())
                report.equality_witnesses.push_back(graph_to_text(g));
            if (!report.min_strong_slack || bounds.strong.slack < *report.min_strong_slack) {
                report.min_strong_slack = bounds.strong.slack;
                report.min_slack_witness = graph_to_text(g);
            }
        }
    }

    // Equality uniqueness: no witnesses below n=5 is fine; at n_max >= 5 the
    // witness set must be exactly { K5 minus an edge }.
    if (n_max < 5)
        report.equality_unique_k5_minus = report.equality_witnesses.empty();
    else
        report.equality_unique_k5_minus =
            report.equality_witnesses.size() == 1 &&
            canonical_form(graph_from_text(report.equality_witnesses.front())) == k5_minus_form;
    return report;
}

} // namespace planarcert
