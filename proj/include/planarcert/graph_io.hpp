#pragma once

#include "planarcert/graph.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace planarcert {

// Plain text format: first line "n m", then m lines "u v" (0-based ids).
inline void write_graph_text(const Graph& g, std::ostream& os) {
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        os << u << ' ' << v << '\n';
}

inline std::string graph_to_text(const Graph& g) {
    std::ostringstream os;
    write_graph_text(g, os);
    return os.str();
}

inline Graph read_graph_text(std::istream& is) {
    long long n = 0, m = 0;
    if (!(is >> n >> m))
        throw std::invalid_argument("graph text: missing 'n m' header");
    if (n < 0 || m < 0)
        throw std::invalid_argument("graph text: negative n or m");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(is >> u >> v))
            throw std::invalid_argument("graph text: expected " + std::to_string(m) +
                                        " edges, got " + std::to_string(i));
        g.add_edge(u, v);
    }
    return g;
}

inline Graph graph_from_text(const std::string& text) {
    std::istringstream is(text);
    return read_graph_text(is);
}

// Reader for the compact 6-bit ASCII encoding used by small-graph corpora
// (graph6). Handles orders up to 62; the multi-byte order prefix is not
// needed at this scale and is rejected.
inline Graph read_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.substr(0, 10) == ">>graph6<<")
        line.remove_prefix(10);
    if (line.empty())
        throw std::invalid_argument("graph6: empty line");
    if (line[0] == '~')
        throw std::invalid_argument("graph6: orders above 62 are not supported");
    int n = line[0] - 63;
    if (n < 0 || n > 62)
        throw std::invalid_argument("graph6: bad order byte");
    line.remove_prefix(1);

    std::size_t bits_needed = static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2;
    std::size_t bytes_needed = (bits_needed + 5) / 6;
    if (line.size() < bytes_needed)
        throw std::invalid_argument("graph6: truncated edge bits");

    Graph g(n);
    std::size_t bit = 0;
    // Upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int c = line[bit / 6] - 63;
            if (c < 0 || c > 63)
                throw std::invalid_argument("graph6: bad data byte");
            if ((c >> (5 - bit % 6)) & 1)
                g.add_edge(u, v);
        }
    }
    return g;
}

} // namespace planarcert
