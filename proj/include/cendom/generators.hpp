#pragma once

#include <stdexcept>

#include "cendom/graph.hpp"

namespace cendom {

/// Vertices 0..n-1 in path order.
inline Graph path(int n) {
    if (n < 0) throw std::invalid_argument("path: negative order");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

/// Vertices 0..n-1 in cycle order; n ≥ 3.
inline Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: order must be at least 3");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete(int n) {
    if (n < 0) throw std::invalid_argument("complete: negative order");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph empty_graph(int n) {
    if (n < 0) throw std::invalid_argument("empty_graph: negative order");
    return Graph(n);
}

/// Parts [0, m) and [m, m+n); m, n ≥ 1.
inline Graph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("complete_bipartite: parts must be nonempty");
    Graph g(m + n);
    for (int u = 0; u < m; ++u)
        for (int v = m; v < m + n; ++v) g.add_edge(u, v);
    return g;
}

/// Cycle 0..n-1 plus hub n adjacent to every cycle vertex; order n+1, n ≥ 3.
inline Graph wheel(int n) {
    if (n < 3) throw std::invalid_argument("wheel: rim must have at least 3 vertices");
    Graph g(n + 1);
    for (int v = 0; v < n; ++v) {
        g.add_edge(v, (v + 1) % n);
        g.add_edge(v, n);
    }
    return g;
}

/// n triangles sharing the common vertex 0; triangle k uses {0, 2k+1, 2k+2}.
inline Graph friendship(int n) {
    if (n < 1) throw std::invalid_argument("friendship: need at least one triangle");
    Graph g(2 * n + 1);
    for (int k = 0; k < n; ++k) {
        g.add_edge(0, 2 * k + 1);
        g.add_edge(0, 2 * k + 2);
        g.add_edge(2 * k + 1, 2 * k + 2);
    }
    return g;
}

/// Tree on ℓ+m+2 vertices: leaves 0..ℓ-1 on center ℓ, adjacent center ℓ+1,
/// its m leaves after that. This numbering makes double_star(1,1) the path
/// of order 4 exactly.
inline Graph double_star(int ell, int m) {
    if (ell < 1 || m < 1) throw std::invalid_argument("double_star: each center needs a leaf");
    Graph g(ell + m + 2);
    g.add_edge(ell, ell + 1);
    for (int i = 0; i < ell; ++i) g.add_edge(ell, i);
    for (int i = 0; i < m; ++i) g.add_edge(ell + 1, ell + 2 + i);
    return g;
}

/// K_ℓ on [0, ℓ) plus n-ℓ isolated vertices; n ≥ ℓ ≥ 0.
inline Graph clique_plus_isolates(int ell, int n) {
    if (ell < 0 || ell > n) throw std::invalid_argument("clique_plus_isolates: need 0 <= l <= n");
    Graph g(n);
    for (int u = 0; u < ell; ++u)
        for (int v = u + 1; v < ell; ++v) g.add_edge(u, v);
    return g;
}

/// m-corona: a private path of order m per vertex, joined at its first
/// vertex. Vertex v's path occupies n + v*m .. n + v*m + m - 1 in path
/// order, so the output has order (m+1)·n.
inline Graph corona(const Graph& g, int m) {
    if (m < 1) throw std::invalid_argument("corona: path order must be at least 1");
    int n = g.order();
    Graph h((m + 1) * n);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    for (int v = 0; v < n; ++v) {
        int base = n + v * m;
        h.add_edge(v, base);
        for (int i = 0; i + 1 < m; ++i) h.add_edge(base + i, base + i + 1);
    }
    return h;
}

}  // namespace cendom
