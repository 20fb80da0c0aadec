#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cendom {

/// Subset of the vertices [0, universe) of a specific graph.
///
/// Backed by machine words so that intersection, union and popcount over
/// vertex sets cost one operation per 64 vertices. This is the working
/// currency of every solver: covers, dominating sets, independent sets.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe)
        : n_(universe), words_(static_cast<std::size_t>((universe + 63) / 64), 0) {
        if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~0ULL;
        s.trim();
        return s;
    }

    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.set(v);
        return s;
    }

    int universe() const { return n_; }

    bool test(int v) const {
        assert(v >= 0 && v < n_);
        return (words_[static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1ULL;
    }

    void set(int v) {
        if (v < 0 || v >= n_) throw std::out_of_range("VertexSet::set: vertex out of range");
        words_[static_cast<std::size_t>(v >> 6)] |= 1ULL << (v & 63);
    }

    void reset(int v) {
        if (v < 0 || v >= n_) throw std::out_of_range("VertexSet::reset: vertex out of range");
        words_[static_cast<std::size_t>(v >> 6)] &= ~(1ULL << (v & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_) if (w) return false;
        return true;
    }

    bool any() const { return !empty(); }

    /// other ⊆ this
    bool contains(const VertexSet& other) const {
        check_same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (other.words_[i] & ~words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& other) const {
        check_same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    int intersection_count(const VertexSet& other) const {
        check_same_universe(other);
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += __builtin_popcountll(words_[i] & other.words_[i]);
        return c;
    }

    /// Lowest member, or -1 when empty.
    int first() const { return next(-1); }

    /// Lowest member strictly greater than v, or -1 when none.
    int next(int v) const {
        int start = v + 1;
        if (start >= n_) return -1;
        std::size_t wi = static_cast<std::size_t>(start >> 6);
        std::uint64_t w = words_[wi] & (~0ULL << (start & 63));
        while (true) {
            if (w) return static_cast<int>(wi << 6) + __builtin_ctzll(w);
            if (++wi >= words_.size()) return -1;
            w = words_[wi];
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                f(static_cast<int>(wi << 6) + __builtin_ctzll(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    VertexSet& operator&=(const VertexSet& o) {
        check_same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet& operator|=(const VertexSet& o) {
        check_same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    /// this ∖ other
    VertexSet& subtract(const VertexSet& o) {
        check_same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

    friend VertexSet set_difference(VertexSet a, const VertexSet& b) { return a.subtract(b); }

    /// [0, universe) ∖ this
    VertexSet universe_complement() const {
        VertexSet s = *this;
        for (auto& w : s.words_) w = ~w;
        s.trim();
        return s;
    }

    bool operator==(const VertexSet& o) const = default;

private:
    void trim() {
        if (n_ & 63) words_.back() &= (1ULL << (n_ & 63)) - 1;
        if (n_ == 0 && !words_.empty()) words_.clear();
    }

    void check_same_universe(const VertexSet& o) const {
        if (n_ != o.n_) throw std::invalid_argument("VertexSet: universe mismatch");
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Simple undirected graph on vertices 0..n-1, adjacency as per-vertex sets.
///
/// Adjacency is kept symmetric and irreflexive by construction; values are
/// immutable once built and safe to share across threads.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), VertexSet(n)) {
        if (n < 0) throw std::invalid_argument("Graph: negative order");
    }

    int order() const { return n_; }

    /// Number of edges.
    int size() const {
        int deg_sum = 0;
        for (const auto& a : adj_) deg_sum += a.count();
        return deg_sum / 2;
    }

    bool has_edge(int u, int v) const {
        if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
        return adj_[static_cast<std::size_t>(u)].test(v);
    }

    void add_edge(int u, int v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::out_of_range("Graph::add_edge: vertex out of range");
        if (u == v) throw std::invalid_argument("Graph::add_edge: self-loop");
        adj_[static_cast<std::size_t>(u)].set(v);
        adj_[static_cast<std::size_t>(v)].set(u);
    }

    const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    VertexSet closed_neighborhood(int v) const {
        VertexSet s = neighbors(v);
        s.set(v);
        return s;
    }

    int degree(int v) const { return neighbors(v).count(); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            neighbors(u).for_each([&](int v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    VertexSet vertex_set() const { return VertexSet::full(n_); }

    bool operator==(const Graph& o) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

inline void check_in_range(const Graph& g, const VertexSet& s, const char* what) {
    if (s.universe() != g.order())
        throw std::invalid_argument(std::string(what) + ": vertex set universe does not match graph order");
}

/// Graph on the same vertices with each non-edge turned into an edge and vice versa.
inline Graph complement(const Graph& g) {
    Graph h(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) h.add_edge(u, v);
    return h;
}

/// Induced subgraph on V ∖ s plus the relabeling that maps its vertices back.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> source_vertex;  // new index -> original index, ascending
};

inline InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s) {
    check_in_range(g, s, "delete_vertices");
    std::vector<int> keep;
    std::vector<int> new_index(static_cast<std::size_t>(g.order()), -1);
    for (int v = 0; v < g.order(); ++v) {
        if (!s.test(v)) {
            new_index[static_cast<std::size_t>(v)] = static_cast<int>(keep.size());
            keep.push_back(v);
        }
    }
    Graph h(static_cast<int>(keep.size()));
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
        g.neighbors(keep[static_cast<std::size_t>(i)]).for_each([&](int w) {
            int j = new_index[static_cast<std::size_t>(w)];
            if (j > i) h.add_edge(i, j);
        });
    }
    return {std::move(h), std::move(keep)};
}

/// Number of edges of G - s without materializing the subgraph.
inline int edge_count_outside(const Graph& g, const VertexSet& s) {
    check_in_range(g, s, "edge_count_outside");
    int deg_sum = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (s.test(v)) continue;
        VertexSet nb = g.neighbors(v);
        nb.subtract(s);
        deg_sum += nb.count();
    }
    return deg_sum / 2;
}

/// N*(s): vertices outside s adjacent to every member of s. N*(∅) is V.
inline VertexSet n_star(const Graph& g, const VertexSet& s) {
    check_in_range(g, s, "n_star");
    if (s.empty()) return VertexSet::full(g.order());
    VertexSet out = VertexSet::full(g.order());
    s.for_each([&](int u) { out &= g.neighbors(u); });
    return out;
}

/// Members of N*(s) that are isolated in G - s. A vertex qualifies exactly
/// when its neighborhood equals s, which also covers s = ∅ (isolated in G).
inline int isolated_count_in_n_star(const Graph& g, const VertexSet& s) {
    check_in_range(g, s, "isolated_count_in_n_star");
    int c = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.neighbors(v) == s) ++c;
    return c;
}

/// Connected components as vertex sets, ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet seen(g.order());
    std::vector<int> stack;
    for (int v = 0; v < g.order(); ++v) {
        if (seen.test(v)) continue;
        VertexSet comp(g.order());
        stack.push_back(v);
        seen.set(v);
        comp.set(v);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            g.neighbors(u).for_each([&](int w) {
                if (!seen.test(w)) {
                    seen.set(w);
                    comp.set(w);
                    stack.push_back(w);
                }
            });
        }
        out.push_back(std::move(comp));
    }
    return out;
}

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

/// Detects K_ℓ ∪ K̄_{n-ℓ} with ℓ ≥ 3: exactly one component of order ≥ 2,
/// complete of order ≥ 3, everything else a singleton. Returns ℓ.
inline std::optional<int> is_clique_plus_isolates(const Graph& g) {
    std::optional<int> ell;
    for (const auto& comp : components(g)) {
        int c = comp.count();
        if (c < 2) continue;
        if (ell) return std::nullopt;  // two nontrivial components
        if (c < 3) return std::nullopt;
        bool complete = true;
        comp.for_each([&](int v) {
            if (g.neighbors(v).intersection_count(comp) != c - 1) complete = false;
        });
        if (!complete) return std::nullopt;
        ell = c;
    }
    return ell;
}

/// True iff g embeds as a (not necessarily spanning) subgraph of some double
/// star: either g has no edges, or two vertices u, v cover every edge while
/// no third vertex is adjacent to both. Leaves of a double star attach to
/// exactly one center, so a common neighbor of both centers cannot exist.
inline bool is_double_star_subgraph(const Graph& g) {
    if (g.size() == 0) return true;
    const int n = g.order();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if ((g.neighbors(u) & g.neighbors(v)).any()) continue;
            VertexSet centers = VertexSet::of(n, {u, v});
            bool covered = true;
            for (int w = 0; w < n && covered; ++w) {
                if (w == u || w == v) continue;
                VertexSet nb = g.neighbors(w);
                nb.subtract(centers);
                if (nb.any()) covered = false;
            }
            if (covered) return true;
        }
    }
    return false;
}

/// Proper 2-coloring with the lowest vertex of each component colored 0,
/// or nullopt when the graph contains an odd cycle.
inline std::optional<std::vector<std::int8_t>> two_coloring(const Graph& g) {
    std::vector<std::int8_t> color(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> stack;
    for (int v = 0; v < g.order(); ++v) {
        if (color[static_cast<std::size_t>(v)] != -1) continue;
        color[static_cast<std::size_t>(v)] = 0;
        stack.push_back(v);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            bool ok = true;
            g.neighbors(u).for_each([&](int w) {
                auto& cw = color[static_cast<std::size_t>(w)];
                if (cw == -1) {
                    cw = static_cast<std::int8_t>(1 - color[static_cast<std::size_t>(u)]);
                    stack.push_back(w);
                } else if (cw == color[static_cast<std::size_t>(u)]) {
                    ok = false;
                }
            });
            if (!ok) return std::nullopt;
        }
    }
    return color;
}

}  // namespace cendom
