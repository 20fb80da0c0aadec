#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cendom/central.hpp"
#include "cendom/graph.hpp"
#include "cendom/solvers.hpp"

namespace cendom {

enum class GraphClass {
    Type1_CliquePlusIsolates,  // K_ℓ ∪ K̄_{n-ℓ}, ℓ ≥ 3: γ(C(G)) = τ(G)
    Type2_GoodCover,           // good cover exists: γ(C(G)) = τ(G)
    Type3_NoGoodCover,         // no good cover: γ(C(G)) = τ(G) + 1
    Unsupported,               // below order 3 or edgeless
};

inline const char* to_string(GraphClass c) {
    switch (c) {
        case GraphClass::Type1_CliquePlusIsolates: return "Type1_CliquePlusIsolates";
        case GraphClass::Type2_GoodCover: return "Type2_GoodCover";
        case GraphClass::Type3_NoGoodCover: return "Type3_NoGoodCover";
        case GraphClass::Unsupported: return "Unsupported";
    }
    return "?";
}

enum class GammaSource { Exact, DerivedFromTheorem };

inline const char* to_string(GammaSource s) {
    return s == GammaSource::Exact ? "exact" : "derived-from-theorem";
}

struct GammaCentral {
    int value = 0;
    GammaSource source = GammaSource::Exact;
};

/// Full invariant panel plus the class assignment and its witnesses.
struct ClassificationReport {
    GraphClass class_tag = GraphClass::Unsupported;
    int order = 0;
    int size = 0;
    int tau = 0;
    int alpha = 0;
    std::optional<int> h;  // absent only for the empty graph on 0 vertices
    std::optional<int> f;
    std::optional<GammaCentral> gamma_central;

    VertexSet tau_cover;
    VertexSet alpha_set;
    std::optional<VertexSet> h_set;
    std::optional<VertexSet> f_set;
    std::optional<VertexSet> good_cover_set;     // present iff Type2
    std::optional<VertexSet> gamma_central_set;  // present iff gamma_central is exact
    std::vector<std::string> notes;
};

/// Assigns the class and fills the invariant panel. When the central graph
/// fits the exact budget, γ(C(G)) is solved directly and cross-checked
/// against the class-derived value; a mismatch is a hard internal error.
/// With require_exact the derived fallback becomes a budget error instead.
inline ClassificationReport classify(const Graph& g, const SolverBudget& budget = {},
                                     bool require_exact = false) {
    ClassificationReport r;
    r.order = g.order();
    r.size = g.size();

    InvariantWitness tau = vertex_cover_number(g, budget);
    r.tau = tau.value;
    r.tau_cover = tau.witness;
    r.alpha = g.order() - tau.value;
    r.alpha_set = tau.witness.universe_complement();

    if (g.order() >= 1) {
        InvariantWitness h = h_value(g, budget);
        r.h = h.value;
        r.h_set = h.witness;
        InvariantWitness f = f_value(g, budget);
        r.f = f.value;
        r.f_set = f.witness;
    }

    std::optional<int> derived;
    if (g.order() < 3 || g.size() == 0) {
        r.class_tag = GraphClass::Unsupported;
        r.notes.push_back("outside classification hypothesis (needs order >= 3 and at least one edge)");
    } else if (is_clique_plus_isolates(g)) {
        r.class_tag = GraphClass::Type1_CliquePlusIsolates;
        derived = r.tau;
    } else {
        GoodCoverResult gc = good_cover(g, budget);
        if (gc.status == SearchStatus::Found) {
            r.class_tag = GraphClass::Type2_GoodCover;
            r.good_cover_set = gc.witness->witness;
            derived = r.tau;
        } else if (gc.status == SearchStatus::None) {
            r.class_tag = GraphClass::Type3_NoGoodCover;
            derived = r.tau + 1;
        } else {
            throw BudgetExceeded("cover-enum-node-budget", "classify: good-cover search inconclusive");
        }
    }

    std::optional<InvariantWitness> exact;
    if (g.order() >= 1) {
        CentralGraph cg = central(g);
        if (cg.graph.order() <= budget.exact_central_max_v) {
            exact = domination_number(cg.graph, budget);
        } else if (require_exact) {
            throw BudgetExceeded("exact-central-max-v",
                                 "classify: central graph has " + std::to_string(cg.graph.order()) +
                                     " vertices, guard " + std::to_string(budget.exact_central_max_v));
        }
    } else if (require_exact) {
        throw std::invalid_argument("classify: exact gamma of the central graph needs at least one vertex");
    }

    if (exact && derived && exact->value != *derived)
        throw std::logic_error("classify: class-derived gamma(C(G)) = " + std::to_string(*derived) +
                               " contradicts exact value " + std::to_string(exact->value));
    if (exact) {
        r.gamma_central = {exact->value, GammaSource::Exact};
        r.gamma_central_set = exact->witness;
    } else if (derived) {
        r.gamma_central = {*derived, GammaSource::DerivedFromTheorem};
        r.notes.push_back("gamma_central derived from the class (central graph exceeds the exact budget)");
    } else {
        r.notes.push_back("gamma_central unavailable");
    }
    return r;
}

/// γ(C(G)) derived from the class alone, without solving on the central
/// graph: τ for the clique-plus-isolates family and for graphs with a good
/// cover, τ+1 otherwise. Coincides with f(G) off the exceptional family.
inline GammaCentral derived_gamma_central(const Graph& g, const SolverBudget& budget = {}) {
    if (g.order() < 3 || g.size() == 0)
        throw std::invalid_argument("derived_gamma_central: needs order >= 3 and at least one edge");
    InvariantWitness tau = vertex_cover_number(g, budget);
    if (is_clique_plus_isolates(g)) return {tau.value, GammaSource::DerivedFromTheorem};
    GoodCoverResult gc = good_cover(g, budget);
    if (gc.status == SearchStatus::Inconclusive)
        throw BudgetExceeded("cover-enum-node-budget", "derived_gamma_central: good-cover search inconclusive");
    return {gc.status == SearchStatus::Found ? tau.value : tau.value + 1, GammaSource::DerivedFromTheorem};
}

// ---------------------------------------------------------------------------
// Closed-form γ(C(G)) for the named families
// ---------------------------------------------------------------------------

enum class Family { Path, Cycle, CompleteBipartite, Wheel, Friendship, Corona1 };

inline const char* to_string(Family f) {
    switch (f) {
        case Family::Path: return "path";
        case Family::Cycle: return "cycle";
        case Family::CompleteBipartite: return "complete_bipartite";
        case Family::Wheel: return "wheel";
        case Family::Friendship: return "friendship";
        case Family::Corona1: return "corona1";
    }
    return "?";
}

/// Path/Cycle/Wheel/Friendship use p1 = n; CompleteBipartite p1 = m, p2 = n
/// with n ≥ m ≥ 2; Corona1 carries the connected base graph's order in p1.
struct FamilySpec {
    Family family = Family::Path;
    int p1 = 0;
    int p2 = 0;
};

inline int formula_gamma_central(const FamilySpec& spec) {
    auto reject = [](const char* msg) -> int { throw std::invalid_argument(msg); };
    switch (spec.family) {
        case Family::Path: {
            int n = spec.p1;
            if (n < 3) return reject("formula: path needs n >= 3");
            return n <= 5 ? (n + 1) / 2 : n / 2;
        }
        case Family::Cycle: {
            int n = spec.p1;
            if (n < 3) return reject("formula: cycle needs n >= 3");
            return n <= 4 ? n - 1 : (n + 1) / 2;
        }
        case Family::CompleteBipartite: {
            int m = spec.p1, n = spec.p2;
            if (m < 2 || n < m) return reject("formula: complete bipartite needs n >= m >= 2");
            return m + 1;
        }
        case Family::Wheel: {
            int n = spec.p1;
            if (n < 3) return reject("formula: wheel needs a rim of at least 3");
            return n == 4 ? 4 : (n + 1) / 2 + 1;
        }
        case Family::Friendship: {
            int n = spec.p1;
            if (n < 2) return reject("formula: friendship needs n >= 2");
            return n + 1;
        }
        case Family::Corona1: {
            int n = spec.p1;
            if (n < 3) return reject("formula: 1-corona needs a connected base of order >= 3");
            return n;
        }
    }
    throw std::invalid_argument("formula: unknown family");
}

// ---------------------------------------------------------------------------
// Bound corollaries around γ(C(G))
// ---------------------------------------------------------------------------

/// One inequality lhs ≤ rhs; equality_condition records the corollary's
/// "equality holds only if" clause when it was evaluated.
struct BoundCheck {
    bool applicable = false;
    int lhs = 0;
    int rhs = 0;
    bool holds = true;
    bool equality = false;
    std::optional<bool> equality_condition;
};

struct DisconnectedBound {
    bool applicable = false;
    int tau_sum = 0;
    int gamma_central = 0;
    int upper = 0;  // n - ω
    bool holds = true;
};

struct BoundsReport {
    int gamma_central = 0;
    BoundCheck tau_lower;            // τ ≤ γ(C(G)), needs order ≥ 3 and an edge
    BoundCheck alpha_upper;          // γ(C(G)) ≤ n - α + 1, the independence-number bound
    BoundCheck bipartite_strong;     // γ(C(G)) ≤ |B|+1 with |B| minimized over component swaps
    BoundCheck bipartite_canonical;  // same with the canonical 2-coloring
    bool bipartite_discrepancy = false;
    DisconnectedBound disconnected;  // Στ(G_i) ≤ γ(C(G)) ≤ n-ω for ω ≥ 2, no isolated vertex

    bool all_hold() const {
        auto cond_ok = [](const BoundCheck& b) {
            return !b.applicable || (b.holds && b.equality_condition.value_or(true));
        };
        return cond_ok(tau_lower) && cond_ok(alpha_upper) && cond_ok(bipartite_strong) &&
               cond_ok(bipartite_canonical) && (!disconnected.applicable || disconnected.holds) &&
               !bipartite_discrepancy;
    }
};

struct Bipartition {
    VertexSet a, b;  // |a| ≤ |b|
};

inline std::optional<Bipartition> bipartition_canonical(const Graph& g) {
    auto colors = two_coloring(g);
    if (!colors) return std::nullopt;
    VertexSet a(g.order()), b(g.order());
    for (int v = 0; v < g.order(); ++v)
        ((*colors)[static_cast<std::size_t>(v)] == 0 ? a : b).set(v);
    if (a.count() > b.count()) std::swap(a, b);
    return Bipartition{a, b};
}

/// 2-coloring whose larger side is as small as possible: per component either
/// color class may serve as the A-side, so the achievable |A| values are
/// subset sums over the component class sizes.
inline std::optional<Bipartition> bipartition_min_larger(const Graph& g) {
    auto colors = two_coloring(g);
    if (!colors) return std::nullopt;
    const int n = g.order();
    auto comps = components(g);
    const std::size_t nc = comps.size();

    std::vector<int> c0(nc, 0), c1(nc, 0);
    std::vector<VertexSet> side0(nc, VertexSet(n)), side1(nc, VertexSet(n));
    for (std::size_t i = 0; i < nc; ++i) {
        comps[i].for_each([&](int v) {
            if ((*colors)[static_cast<std::size_t>(v)] == 0) {
                ++c0[i];
                side0[i].set(v);
            } else {
                ++c1[i];
                side1[i].set(v);
            }
        });
    }

    // suffix[i][s] = components i..nc-1 can contribute exactly s to the A-side
    std::vector<std::vector<char>> suffix(nc + 1, std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
    suffix[nc][0] = 1;
    for (std::size_t i = nc; i-- > 0;)
        for (int s = 0; s <= n; ++s)
            if (suffix[i + 1][static_cast<std::size_t>(s)]) {
                suffix[i][static_cast<std::size_t>(s + c0[i])] = 1;
                suffix[i][static_cast<std::size_t>(s + c1[i])] = 1;
            }

    int target = -1;
    for (int s = n / 2; s >= 0; --s)
        if (suffix[0][static_cast<std::size_t>(s)]) {
            target = s;
            break;
        }

    VertexSet a(n), b(n);
    int remaining = target;
    for (std::size_t i = 0; i < nc; ++i) {
        if (remaining - c0[i] >= 0 && suffix[i + 1][static_cast<std::size_t>(remaining - c0[i])]) {
            a |= side0[i];
            b |= side1[i];
            remaining -= c0[i];
        } else {
            a |= side1[i];
            b |= side0[i];
            remaining -= c1[i];
        }
    }
    return Bipartition{a, b};
}

namespace detail {

/// Visits every independent set of size `alpha`; returns false early when the
/// visitor does.
template <class F>
inline bool for_each_maximum_independent_set(const Graph& g, int alpha, F&& visit) {
    const int n = g.order();
    VertexSet s(n);
    auto rec = [&](auto&& self, int start, int depth) -> bool {
        if (depth == alpha) return visit(s);
        for (int v = start; v <= n - (alpha - depth); ++v) {
            if (g.neighbors(v).intersects(s)) continue;
            s.set(v);
            if (!self(self, v + 1, depth + 1)) return false;
            s.reset(v);
        }
        return true;
    };
    return rec(rec, 0, 0);
}

}  // namespace detail

/// Evaluates the bound corollaries against the exact γ(C(G)). Each bound is
/// asserted only under its own hypothesis. The τ lower bound's equality
/// clause is skipped for K_ℓ ∪ K̄_{n-ℓ}: those attain equality with no good
/// cover, and the clause derives from theorems that exclude them.
inline BoundsReport check_bounds(const Graph& g, const SolverBudget& budget = {}) {
    if (g.order() < 1) throw std::invalid_argument("check_bounds: graph must have at least one vertex");
    CentralGraph cg = central(g);
    if (cg.graph.order() > budget.exact_central_max_v)
        throw BudgetExceeded("exact-central-max-v",
                             "check_bounds: central graph has " + std::to_string(cg.graph.order()) +
                                 " vertices, guard " + std::to_string(budget.exact_central_max_v));
    BoundsReport r;
    const int gamma_c = domination_number(cg.graph, budget).value;
    r.gamma_central = gamma_c;
    const int tau = vertex_cover_number(g, budget).value;
    const int alpha = g.order() - tau;
    const auto exceptional = is_clique_plus_isolates(g);

    if (g.order() >= 3 && g.size() > 0) {
        r.tau_lower.applicable = true;
        r.tau_lower.lhs = tau;
        r.tau_lower.rhs = gamma_c;
        r.tau_lower.holds = tau <= gamma_c;
        r.tau_lower.equality = tau == gamma_c;
        if (r.tau_lower.equality && !exceptional)
            r.tau_lower.equality_condition = good_cover(g, budget).status == SearchStatus::Found;
    }

    {
        // the independence-number bound: a maximum independent set S leaves
        // the cover V∖S, and V∖S plus one vertex of S dominates C(G), so
        // γ(C(G)) ≤ n - α + 1. Equality forces every minimum cover (each is
        // the complement of a maximum independent set) to miss goodness.
        r.alpha_upper.applicable = true;
        r.alpha_upper.lhs = gamma_c;
        r.alpha_upper.rhs = g.order() - alpha + 1;
        r.alpha_upper.holds = gamma_c <= r.alpha_upper.rhs;
        r.alpha_upper.equality = gamma_c == r.alpha_upper.rhs;
        if (r.alpha_upper.equality && g.order() <= budget.oracle_max_n) {
            // every maximum independent set S must meet N*(V∖S)
            bool all_meet = detail::for_each_maximum_independent_set(g, alpha, [&](const VertexSet& s) {
                return n_star(g, s.universe_complement()).any();
            });
            r.alpha_upper.equality_condition = all_meet;
        }
    }

    if (g.size() > 0) {
        auto fill = [&](BoundCheck& check, const std::optional<Bipartition>& parts) {
            if (!parts) return;
            check.applicable = true;
            check.lhs = gamma_c;
            check.rhs = parts->b.count() + 1;
            check.holds = check.lhs <= check.rhs;
            check.equality = check.lhs == check.rhs;
            if (check.equality) check.equality_condition = n_star(g, parts->a).intersects(parts->b);
        };
        fill(r.bipartite_strong, bipartition_min_larger(g));
        fill(r.bipartite_canonical, bipartition_canonical(g));
        auto failed = [](const BoundCheck& c) {
            return c.applicable && !(c.holds && c.equality_condition.value_or(true));
        };
        r.bipartite_discrepancy = failed(r.bipartite_strong) && !failed(r.bipartite_canonical);
    }

    {
        auto comps = components(g);
        bool no_isolate = true;
        for (const auto& c : comps)
            if (c.count() == 1) no_isolate = false;
        if (g.order() >= 3 && comps.size() >= 2 && no_isolate) {
            r.disconnected.applicable = true;
            int tau_sum = 0;
            for (const auto& c : comps)
                tau_sum += vertex_cover_number(delete_vertices(g, c.universe_complement()).graph, budget).value;
            r.disconnected.tau_sum = tau_sum;
            r.disconnected.gamma_central = gamma_c;
            r.disconnected.upper = g.order() - static_cast<int>(comps.size());
            r.disconnected.holds = tau_sum <= gamma_c && gamma_c <= r.disconnected.upper;
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Characterizations
// ---------------------------------------------------------------------------

/// Both sides of the h = 2 characterization, computed independently: the
/// solver value against "K_3 plus isolates, or a double-star subgraph".
struct H2Result {
    bool h_is_2 = false;
    bool characterization = false;
    bool agree() const { return h_is_2 == characterization; }
};

inline H2Result h2_characterization(const Graph& g, const SolverBudget& budget = {}) {
    if (g.order() < 3 || g.size() == 0)
        throw std::invalid_argument("h2_characterization: needs order >= 3 and at least one edge");
    H2Result r;
    r.h_is_2 = h_value(g, budget).value == 2;
    auto ell = is_clique_plus_isolates(g);
    r.characterization = (ell && *ell == 3) || is_double_star_subgraph(g);
    return r;
}

/// γ of the complement of the central graph equals 2 (connected, order ≥ 4).
inline bool check_complement_central(const Graph& g, const SolverBudget& budget = {}) {
    if (g.order() < 4 || !is_connected(g))
        throw std::invalid_argument("check_complement_central: needs a connected graph of order >= 4");
    Graph cc = central_complement(g);
    if (cc.order() > budget.exact_central_max_v)
        throw BudgetExceeded("exact-central-max-v",
                             "check_complement_central: graph has " + std::to_string(cc.order()) +
                                 " vertices, guard " + std::to_string(budget.exact_central_max_v));
    return domination_number(cc, budget).value == 2;
}

/// The three equivalent statements for connected graphs of order ≥ 4:
/// γ(C(G)) = γ(C̄(G)), γ(C(G)) = 2, and G being K_3 plus isolates or a
/// double-star subgraph with an edge. Returns whether they agree.
inline bool check_equivalence_corollary(const Graph& g, const SolverBudget& budget = {}) {
    if (g.order() < 4 || !is_connected(g))
        throw std::invalid_argument("check_equivalence_corollary: needs a connected graph of order >= 4");
    CentralGraph cg = central(g);
    if (cg.graph.order() > budget.exact_central_max_v)
        throw BudgetExceeded("exact-central-max-v",
                             "check_equivalence_corollary: central graph has " +
                                 std::to_string(cg.graph.order()) + " vertices, guard " +
                                 std::to_string(budget.exact_central_max_v));
    const int gamma_c = domination_number(cg.graph, budget).value;
    const int gamma_cc = domination_number(central_complement(g), budget).value;
    auto ell = is_clique_plus_isolates(g);
    const bool s1 = gamma_c == gamma_cc;
    const bool s2 = gamma_c == 2;
    const bool s3 = (ell && *ell == 3) || (is_double_star_subgraph(g) && g.size() >= 1);
    return s1 == s2 && s2 == s3;
}

}  // namespace cendom
