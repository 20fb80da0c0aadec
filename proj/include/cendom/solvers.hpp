#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cendom/central.hpp"
#include "cendom/graph.hpp"

namespace cendom {

/// Size and effort guards. Exceeding one raises BudgetExceeded; a solver
/// never degrades to an approximate answer.
struct SolverBudget {
    int oracle_max_n = 20;             // subset-enumeration oracles refuse beyond this
    int exact_central_max_v = 40;      // exact gamma on central graphs refuses beyond this
    int preservation_max_v = 22;       // gamma-set-within-originals search guard
    std::uint64_t cover_enum_node_budget = 1'000'000;  // good-cover enumeration cap
    std::optional<std::chrono::milliseconds> time_budget;
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::string guard, const std::string& msg)
        : std::runtime_error(msg), guard_(std::move(guard)) {}

    /// Name of the guard that tripped, e.g. "oracle-max-n".
    const std::string& guard() const { return guard_; }

private:
    std::string guard_;
};

/// An exact invariant value plus a set attaining it, re-checkable by the
/// matching predicate.
struct InvariantWitness {
    int value = 0;
    VertexSet witness;
};

inline bool is_dominating(const Graph& g, const VertexSet& s) {
    check_in_range(g, s, "is_dominating");
    for (int v = 0; v < g.order(); ++v)
        if (!s.test(v) && !g.neighbors(v).intersects(s)) return false;
    return true;
}

inline bool is_vertex_cover(const Graph& g, const VertexSet& s) {
    check_in_range(g, s, "is_vertex_cover");
    for (int v = 0; v < g.order(); ++v) {
        if (s.test(v)) continue;
        VertexSet nb = g.neighbors(v);
        nb.subtract(s);
        if (nb.any()) return false;
    }
    return true;
}

inline bool is_independent(const Graph& g, const VertexSet& s) {
    check_in_range(g, s, "is_independent");
    bool ok = true;
    s.for_each([&](int v) {
        if (g.neighbors(v).intersects(s)) ok = false;
    });
    return ok;
}

namespace detail {

class Deadline {
public:
    Deadline(const SolverBudget& budget, const char* where) : where_(where) {
        if (budget.time_budget)
            deadline_ = std::chrono::steady_clock::now() + *budget.time_budget;
    }

    void tick() {
        if (!deadline_) return;
        if ((++calls_ & 0x3fff) == 0 && std::chrono::steady_clock::now() >= *deadline_)
            throw BudgetExceeded("time-budget-ms", std::string(where_) + ": time budget exceeded");
    }

private:
    const char* where_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::uint64_t calls_ = 0;
};

/// Lexicographically first edge with both endpoints outside `cover`,
/// or {-1, -1} when every edge is covered.
inline std::pair<int, int> first_uncovered_edge(const Graph& g, const VertexSet& cover) {
    for (int u = 0; u < g.order(); ++u) {
        if (cover.test(u)) continue;
        VertexSet nb = g.neighbors(u);
        nb.subtract(cover);
        int w = nb.first();
        if (w != -1) return {u, w};
    }
    return {-1, -1};
}

/// Greedy maximal matching on the edges not met by `cover`; each matching
/// edge needs its own extra cover vertex, so this lower-bounds the deficit.
inline int matching_lower_bound(const Graph& g, const VertexSet& cover) {
    VertexSet used = cover;
    int count = 0;
    for (int u = 0; u < g.order(); ++u) {
        if (used.test(u)) continue;
        VertexSet nb = g.neighbors(u);
        nb.subtract(used);
        int w = nb.first();
        if (w != -1) {
            used.set(u);
            used.set(w);
            ++count;
        }
    }
    return count;
}

}  // namespace detail

/// Exact domination number by branch and bound: branch on the lowest-indexed
/// undominated vertex over its closed neighborhood, prune with the greedy
/// incumbent and the ⌈undominated/(Δ+1)⌉ lower bound.
inline InvariantWitness domination_number(const Graph& g, const SolverBudget& budget = {}) {
    const int n = g.order();
    if (n == 0) return {0, VertexSet(0)};
    detail::Deadline deadline(budget, "domination_number");

    std::vector<VertexSet> closed;
    closed.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) closed.push_back(g.closed_neighborhood(v));

    VertexSet best(n);
    {
        VertexSet dominated(n);
        int undominated = n;
        while (undominated > 0) {
            int pick = -1, gain = -1;
            for (int v = 0; v < n; ++v) {
                int got = closed[static_cast<std::size_t>(v)].count() -
                          closed[static_cast<std::size_t>(v)].intersection_count(dominated);
                if (got > gain) {
                    gain = got;
                    pick = v;
                }
            }
            best.set(pick);
            dominated |= closed[static_cast<std::size_t>(pick)];
            undominated -= gain;
        }
    }
    int best_size = best.count();

    const int denom = g.max_degree() + 1;
    std::vector<int> chosen;
    auto dfs = [&](auto&& self, const VertexSet& dominated, int size) -> void {
        deadline.tick();
        const int undominated = n - dominated.count();
        if (undominated == 0) {
            if (size < best_size) {
                best_size = size;
                VertexSet w(n);
                for (int v : chosen) w.set(v);
                best = w;
            }
            return;
        }
        if (size + (undominated + denom - 1) / denom >= best_size) return;
        const int v = dominated.universe_complement().first();
        closed[static_cast<std::size_t>(v)].for_each([&](int c) {
            chosen.push_back(c);
            self(self, dominated | closed[static_cast<std::size_t>(c)], size + 1);
            chosen.pop_back();
        });
    };
    dfs(dfs, VertexSet(n), 0);
    return {best_size, best};
}

/// Exact vertex cover number: branch on the endpoints of the lowest-indexed
/// uncovered edge, prune with a greedy maximal-matching lower bound.
inline InvariantWitness vertex_cover_number(const Graph& g, const SolverBudget& budget = {}) {
    const int n = g.order();
    detail::Deadline deadline(budget, "vertex_cover_number");

    VertexSet best(n);
    {
        // greedy incumbent: repeatedly take the vertex meeting the most
        // uncovered edges
        while (true) {
            int pick = -1, best_deg = 0;
            for (int v = 0; v < n; ++v) {
                if (best.test(v)) continue;
                VertexSet nb = g.neighbors(v);
                nb.subtract(best);
                int d = nb.count();
                if (d > best_deg) {
                    best_deg = d;
                    pick = v;
                }
            }
            if (pick == -1) break;
            best.set(pick);
        }
    }
    int best_size = best.count();

    auto dfs = [&](auto&& self, const VertexSet& cover, int size) -> void {
        deadline.tick();
        auto [u, w] = detail::first_uncovered_edge(g, cover);
        if (u == -1) {
            if (size < best_size) {
                best_size = size;
                best = cover;
            }
            return;
        }
        if (size + detail::matching_lower_bound(g, cover) >= best_size) return;
        {
            VertexSet c2 = cover;
            c2.set(u);
            self(self, c2, size + 1);
        }
        {
            VertexSet c2 = cover;
            c2.set(w);
            self(self, c2, size + 1);
        }
    };
    dfs(dfs, VertexSet(n), 0);
    return {best_size, best};
}

/// α = n - τ; the complement of a minimum cover is a maximum independent set.
inline InvariantWitness independence_number(const Graph& g, const SolverBudget& budget = {}) {
    InvariantWitness tau = vertex_cover_number(g, budget);
    return {g.order() - tau.value, tau.witness.universe_complement()};
}

enum class SearchStatus { Found, None, Inconclusive };

/// Result of the good-cover search. Inconclusive means the enumeration
/// budget tripped before the minimum covers were exhausted; it is reported
/// as such, never conflated with None.
struct GoodCoverResult {
    SearchStatus status = SearchStatus::None;
    std::optional<InvariantWitness> witness;  // set iff status == Found
};

/// Searches for a minimum vertex cover that also dominates the complement,
/// i.e. one with no outside vertex adjacent to all of it. Enumerates covers
/// at exactly the optimum size and tests that condition at the leaves.
inline GoodCoverResult good_cover(const Graph& g, const SolverBudget& budget = {}) {
    const int n = g.order();
    detail::Deadline deadline(budget, "good_cover");
    const int target = vertex_cover_number(g, budget).value;

    // a vertex adjacent to everything else is isolated in the complement and
    // must belong to any cover that dominates the complement
    VertexSet forced(n);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == n - 1) forced.set(v);
    if (forced.count() > target) return {SearchStatus::None, std::nullopt};

    std::uint64_t nodes = 0;
    bool tripped = false;
    std::optional<VertexSet> found;

    auto dfs = [&](auto&& self, const VertexSet& cover, int size) -> void {
        if (found || tripped) return;
        deadline.tick();
        if (++nodes > budget.cover_enum_node_budget) {
            tripped = true;
            return;
        }
        auto [u, w] = detail::first_uncovered_edge(g, cover);
        if (u == -1) {
            if (n_star(g, cover).empty()) found = cover;
            return;
        }
        if (size >= target) return;
        if (size + detail::matching_lower_bound(g, cover) > target) return;
        {
            VertexSet c2 = cover;
            c2.set(u);
            self(self, c2, size + 1);
        }
        {
            VertexSet c2 = cover;
            c2.set(w);
            self(self, c2, size + 1);
        }
    };
    dfs(dfs, forced, forced.count());

    if (found) return {SearchStatus::Found, InvariantWitness{target, *found}};
    if (tripped) return {SearchStatus::Inconclusive, std::nullopt};
    return {SearchStatus::None, std::nullopt};
}

/// f = minimum size of a set that is at once a vertex cover of g and a
/// dominating set of the complement. Supersets of covers are covers and
/// supersets of dominating sets dominate, so f is τ when a good cover
/// exists and τ+1 otherwise (a minimum cover plus any outside vertex).
inline InvariantWitness f_value(const Graph& g, const SolverBudget& budget = {}) {
    if (g.order() < 1) throw std::invalid_argument("f_value: graph must have at least one vertex");
    GoodCoverResult gc = good_cover(g, budget);
    if (gc.status == SearchStatus::Found) return *gc.witness;
    if (gc.status == SearchStatus::Inconclusive)
        throw BudgetExceeded("cover-enum-node-budget", "f_value: good-cover enumeration budget exceeded");
    InvariantWitness tau = vertex_cover_number(g, budget);
    VertexSet s = tau.witness;
    s.set(s.universe_complement().first());  // τ ≤ n-1, so an outside vertex exists
    return {tau.value + 1, s};
}

/// h = min over nonempty S of |S| + |E(G-S)| + i(N*(S)). Depth-first over
/// include/exclude decisions in index order; |S so far| plus the edges
/// already committed to G-S bound the objective from below.
inline InvariantWitness h_value(const Graph& g, const SolverBudget& budget = {}) {
    const int n = g.order();
    if (n < 1) throw std::invalid_argument("h_value: graph must have at least one vertex");
    detail::Deadline deadline(budget, "h_value");

    int best_value = n;  // S = V scores |V| + 0 + 0
    VertexSet best = VertexSet::full(n);

    VertexSet included(n), excluded(n);
    auto dfs = [&](auto&& self, int v, int inc_count, int exc_edges) -> void {
        deadline.tick();
        if (inc_count + exc_edges >= best_value) return;
        if (v == n) {
            if (inc_count == 0) return;  // the minimization runs over nonempty S
            int iso = 0;
            excluded.for_each([&](int w) {
                // isolated member of N*(S): neighborhood exactly S
                if (g.neighbors(w) == included) ++iso;
            });
            int value = inc_count + exc_edges + iso;
            if (value < best_value) {
                best_value = value;
                best = included;
            }
            return;
        }
        const int new_edges = g.neighbors(v).intersection_count(excluded);
        excluded.set(v);
        self(self, v + 1, inc_count, exc_edges + new_edges);
        excluded.reset(v);
        included.set(v);
        self(self, v + 1, inc_count + 1, exc_edges);
        included.reset(v);
    };
    dfs(dfs, 0, 0, 0);
    return {best_value, best};
}

/// Whether some γ-set of the central graph uses original vertices only.
/// Computes γ exactly, then enumerates original-vertex subsets at that
/// cardinality. Guarded: refuses oversized instances, never guesses.
inline bool exists_gamma_set_within_originals(const CentralGraph& cg, const SolverBudget& budget = {}) {
    const int nv = cg.graph.order();
    if (nv > budget.preservation_max_v)
        throw BudgetExceeded("preservation-max-v",
                             "exists_gamma_set_within_originals: instance too large (" + std::to_string(nv) +
                                 " central vertices, guard " + std::to_string(budget.preservation_max_v) + ")");
    InvariantWitness gamma = domination_number(cg.graph, budget);

    bool only_originals = true;
    gamma.witness.for_each([&](int v) {
        if (v >= cg.origin_count) only_originals = false;
    });
    if (only_originals) return true;

    const int k = gamma.value;
    const int n0 = cg.origin_count;
    if (k > n0) return false;
    VertexSet s(nv);
    auto rec = [&](auto&& self, int start, int depth) -> bool {
        if (depth == k) return is_dominating(cg.graph, s);
        for (int v = start; v <= n0 - (k - depth); ++v) {
            s.set(v);
            if (self(self, v + 1, depth + 1)) return true;
            s.reset(v);
        }
        return false;
    };
    if (k == 0) return is_dominating(cg.graph, s);
    return rec(rec, 0, 0);
}

/// Naive reference solvers. Deliberately a separate implementation path —
/// plain subset enumeration over word-sized masks — used to cross-validate
/// the branch-and-bound solvers wherever they both run.
namespace oracle {

namespace detail {

inline void check_size(const Graph& g, const SolverBudget& budget, const char* what) {
    // masks are 32-bit, so 31 is a hard ceiling whatever the configured guard
    if (g.order() > budget.oracle_max_n || g.order() > 31)
        throw BudgetExceeded("oracle-max-n", std::string(what) + ": instance too large for subset enumeration (n=" +
                                                 std::to_string(g.order()) + ", guard " +
                                                 std::to_string(std::min(budget.oracle_max_n, 31)) + ")");
}

inline std::vector<std::uint32_t> neighbor_masks(const Graph& g) {
    std::vector<std::uint32_t> nb(static_cast<std::size_t>(g.order()), 0);
    for (auto [u, v] : g.edges()) {
        nb[static_cast<std::size_t>(u)] |= 1u << v;
        nb[static_cast<std::size_t>(v)] |= 1u << u;
    }
    return nb;
}

inline VertexSet to_vertex_set(int n, std::uint32_t mask) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1u) s.set(v);
    return s;
}

/// Next mask with the same popcount (Gosper), or 0 on overflow past n bits.
inline std::uint32_t next_same_popcount(std::uint32_t mask, int n) {
    if (mask == 0) return 0;
    std::uint32_t c = mask & (0u - mask);
    std::uint32_t r = mask + c;
    std::uint32_t next = (((r ^ mask) >> 2) / c) | r;
    return next < (1u << n) ? next : 0;
}

template <class Pred>
inline std::optional<std::uint32_t> first_by_cardinality(int n, Pred&& pred) {
    for (int k = 0; k <= n; ++k) {
        std::uint32_t mask = k == 0 ? 0u : (1u << k) - 1u;
        while (true) {
            if (pred(mask)) return mask;
            if (k == 0) break;
            mask = next_same_popcount(mask, n);
            if (mask == 0) break;
        }
    }
    return std::nullopt;
}

}  // namespace detail

inline InvariantWitness domination_number(const Graph& g, const SolverBudget& budget = {}) {
    detail::check_size(g, budget, "oracle::domination_number");
    const int n = g.order();
    auto nb = detail::neighbor_masks(g);
    auto hit = detail::first_by_cardinality(n, [&](std::uint32_t mask) {
        for (int v = 0; v < n; ++v)
            if (!((mask >> v) & 1u) && !(nb[static_cast<std::size_t>(v)] & mask)) return false;
        return true;
    });
    return {__builtin_popcount(*hit), detail::to_vertex_set(n, *hit)};
}

inline InvariantWitness vertex_cover_number(const Graph& g, const SolverBudget& budget = {}) {
    detail::check_size(g, budget, "oracle::vertex_cover_number");
    const int n = g.order();
    auto edges = g.edges();
    auto hit = detail::first_by_cardinality(n, [&](std::uint32_t mask) {
        for (auto [u, v] : edges)
            if (!((mask >> u) & 1u) && !((mask >> v) & 1u)) return false;
        return true;
    });
    return {__builtin_popcount(*hit), detail::to_vertex_set(n, *hit)};
}

inline InvariantWitness f_value(const Graph& g, const SolverBudget& budget = {}) {
    if (g.order() < 1) throw std::invalid_argument("oracle::f_value: graph must have at least one vertex");
    detail::check_size(g, budget, "oracle::f_value");
    const int n = g.order();
    auto edges = g.edges();
    auto nb = detail::neighbor_masks(g);
    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1u;
    auto hit = detail::first_by_cardinality(n, [&](std::uint32_t mask) {
        for (auto [u, v] : edges)
            if (!((mask >> u) & 1u) && !((mask >> v) & 1u)) return false;
        for (int v = 0; v < n; ++v) {
            if ((mask >> v) & 1u) continue;
            std::uint32_t co_nb = full & ~nb[static_cast<std::size_t>(v)] & ~(1u << v);
            if (!(co_nb & mask)) return false;  // undominated in the complement
        }
        return true;
    });
    return {__builtin_popcount(*hit), detail::to_vertex_set(n, *hit)};
}

/// Full 2^n - 1 enumeration of the h objective.
inline InvariantWitness h_value(const Graph& g, const SolverBudget& budget = {}) {
    if (g.order() < 1) throw std::invalid_argument("oracle::h_value: graph must have at least one vertex");
    detail::check_size(g, budget, "oracle::h_value");
    const int n = g.order();
    auto nb = detail::neighbor_masks(g);
    auto edges = g.edges();

    int best_value = 0;
    std::uint32_t best_mask = 0;
    bool have = false;
    const std::uint32_t limit = n == 32 ? ~0u : (1u << n) - 1u;
    for (std::uint32_t mask = 1;; ++mask) {
        int value = __builtin_popcount(mask);
        for (auto [u, v] : edges)
            if (!((mask >> u) & 1u) && !((mask >> v) & 1u)) ++value;
        for (int v = 0; v < n; ++v)
            if (nb[static_cast<std::size_t>(v)] == mask) ++value;
        if (!have || value < best_value) {
            have = true;
            best_value = value;
            best_mask = mask;
        }
        if (mask == limit) break;
    }
    return {best_value, detail::to_vertex_set(n, best_mask)};
}

}  // namespace oracle

}  // namespace cendom
