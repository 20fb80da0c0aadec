#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "cendom/graph.hpp"

namespace cendom {

/// Central graph of a source graph of order n and size m: every edge
/// subdivided once and every non-adjacent original pair joined. Originals
/// keep indices [0, n); subdivision vertex n+k carries the k-th source edge
/// in lexicographic order, so construction is deterministic.
struct CentralGraph {
    Graph graph;                              // order n + m
    int origin_count = 0;                     // n
    std::vector<std::pair<int, int>> sub_edge;  // vertex n+k subdivides sub_edge[k]

    VertexSet originals() const {
        VertexSet s(graph.order());
        for (int v = 0; v < origin_count; ++v) s.set(v);
        return s;
    }
};

inline CentralGraph central(const Graph& g) {
    int n = g.order();
    if (n < 1) throw std::invalid_argument("central: graph must have at least one vertex");
    auto src_edges = g.edges();  // lexicographic by construction
    int m = static_cast<int>(src_edges.size());
    Graph c(n + m);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    for (int k = 0; k < m; ++k) {
        c.add_edge(n + k, src_edges[static_cast<std::size_t>(k)].first);
        c.add_edge(n + k, src_edges[static_cast<std::size_t>(k)].second);
    }
    return {std::move(c), n, std::move(src_edges)};
}

/// Complement of the central graph, built as complement(central(g)) and then
/// verified against its direct edge description: originals adjacent iff
/// adjacent in g, each subdivision vertex adjacent to every original except
/// its own endpoints, subdivision vertices pairwise adjacent.
inline Graph central_complement(const Graph& g) {
    CentralGraph cg = central(g);
    Graph cc = complement(cg.graph);

    int n = cg.origin_count;
    int m = static_cast<int>(cg.sub_edge.size());
    auto fail = []() { throw std::logic_error("central_complement: structural check failed"); };
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (cc.has_edge(u, v) != g.has_edge(u, v)) fail();
    for (int k = 0; k < m; ++k) {
        auto [i, j] = cg.sub_edge[static_cast<std::size_t>(k)];
        for (int v = 0; v < n; ++v)
            if (cc.has_edge(n + k, v) != (v != i && v != j)) fail();
    }
    for (int k = 0; k < m; ++k)
        for (int l = k + 1; l < m; ++l)
            if (!cc.has_edge(n + k, n + l)) fail();
    return cc;
}

}  // namespace cendom
