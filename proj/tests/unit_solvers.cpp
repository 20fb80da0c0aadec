#include <catch2/catch_amalgamated.hpp>

#include "cendom/central.hpp"
#include "cendom/format.hpp"
#include "cendom/generators.hpp"
#include "cendom/solvers.hpp"

using namespace cendom;

TEST_CASE("domination and cover predicates") {
    CHECK(is_dominating(complete(5), VertexSet::of(5, {2})));
    CHECK_FALSE(is_dominating(path(5), VertexSet::of(5, {0, 4})));
    CHECK_FALSE(is_dominating(empty_graph(3), VertexSet::of(3, {0, 1})));
    CHECK(is_dominating(empty_graph(3), VertexSet::full(3)));

    CHECK(is_vertex_cover(path(4), VertexSet::of(4, {1, 2})));
    CHECK(is_vertex_cover(empty_graph(4), VertexSet(4)));
    // tau(C_5) = 3: no 2-subset covers
    Graph c5 = cycle(5);
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) CHECK_FALSE(is_vertex_cover(c5, VertexSet::of(5, {a, b})));

    CHECK(is_independent(c5, VertexSet::of(5, {0, 2})));
    CHECK_FALSE(is_independent(c5, VertexSet::of(5, {0, 1})));
}

TEST_CASE("domination number") {
    CHECK(domination_number(cycle(5)).value == 2);
    CHECK(oracle::domination_number(cycle(5)).value == 2);
    for (int n = 1; n <= 7; ++n) {
        CHECK(domination_number(complete(n)).value == 1);
        CHECK(domination_number(empty_graph(n)).value == n);
    }
    CHECK(domination_number(Graph(0)).value == 0);

    auto w = domination_number(path(7));
    CHECK(w.value == 3);
    CHECK(is_dominating(path(7), w.witness));
    CHECK(w.witness.count() == 3);
}

TEST_CASE("vertex cover and independence numbers") {
    for (int n = 2; n <= 7; ++n) {
        CHECK(vertex_cover_number(complete(n)).value == n - 1);
        CHECK(independence_number(complete(n)).value == 1);
    }
    CHECK(vertex_cover_number(cycle(5)).value == 3);
    CHECK(vertex_cover_number(complete_bipartite(1, 6)).value == 1);

    for (const Graph& g : {path(6), cycle(7), wheel(5), friendship(3), complete_bipartite(3, 4)}) {
        auto tau = vertex_cover_number(g);
        auto alpha = independence_number(g);
        CHECK(tau.value + alpha.value == g.order());
        CHECK(is_vertex_cover(g, tau.witness));
        CHECK(is_independent(g, alpha.witness));
        CHECK(alpha.witness == tau.witness.universe_complement());
    }
}

TEST_CASE("h values") {
    for (int n = 1; n <= 8; ++n) CHECK(h_value(empty_graph(n)).value == 1);
    CHECK(h_value(clique_plus_isolates(4, 6)).value == 3);
    CHECK(h_value(path(5)).value == 3);
    CHECK_THROWS_AS(h_value(Graph(0)), std::invalid_argument);

    // witness re-validates under the objective
    Graph g = wheel(5);
    auto h = h_value(g);
    const VertexSet& s = h.witness;
    CHECK_FALSE(s.empty());
    CHECK(s.count() + edge_count_outside(g, s) + isolated_count_in_n_star(g, s) == h.value);
}

TEST_CASE("f values") {
    CHECK(f_value(clique_plus_isolates(4, 6)).value == 4);
    auto f = f_value(path(4));
    CHECK(f.value == 2);
    CHECK(f.witness == VertexSet::of(4, {1, 2}));
    CHECK_THROWS_AS(f_value(Graph(0)), std::invalid_argument);

    for (const Graph& g : {path(5), cycle(4), complete(5), complete_bipartite(2, 3), wheel(4)}) {
        auto fw = f_value(g);
        CHECK(is_vertex_cover(g, fw.witness));
        CHECK(is_dominating(complement(g), fw.witness));
        CHECK(fw.value <= vertex_cover_number(g).value + 1);
        CHECK(h_value(g).value <= fw.value);
    }
}

TEST_CASE("good covers") {
    auto p4 = good_cover(path(4));
    REQUIRE(p4.status == SearchStatus::Found);
    CHECK(p4.witness->witness == VertexSet::of(4, {1, 2}));

    CHECK(good_cover(complete_bipartite(1, 3)).status == SearchStatus::None);
    for (int ell = 3; ell <= 5; ++ell)
        for (int n = ell; n <= 7; ++n)
            CHECK(good_cover(clique_plus_isolates(ell, n)).status == SearchStatus::None);

    auto c6 = good_cover(cycle(6));
    REQUIRE(c6.status == SearchStatus::Found);
    CHECK(c6.witness->value == 3);
    CHECK(is_vertex_cover(cycle(6), c6.witness->witness));
    CHECK(is_dominating(complement(cycle(6)), c6.witness->witness));

    // a good cover exists exactly when f equals tau
    for (const Graph& g : {path(3), path(4), path(5), cycle(4), cycle(5), wheel(4), wheel(5)}) {
        bool found = good_cover(g).status == SearchStatus::Found;
        CHECK(found == (f_value(g).value == vertex_cover_number(g).value));
    }
}

TEST_CASE("gamma-set preservation search") {
    CHECK(exists_gamma_set_within_originals(central(path(4))));
    CHECK_FALSE(exists_gamma_set_within_originals(central(complete(4))));
    CHECK(exists_gamma_set_within_originals(central(empty_graph(3))));

    SolverBudget tight;
    tight.preservation_max_v = 5;
    CHECK_THROWS_AS(exists_gamma_set_within_originals(central(path(4)), tight), BudgetExceeded);
}

TEST_CASE("budget guards refuse instead of guessing") {
    SolverBudget budget;
    budget.oracle_max_n = 4;
    CHECK_THROWS_AS(oracle::domination_number(path(5), budget), BudgetExceeded);
    CHECK_THROWS_AS(oracle::h_value(path(5), budget), BudgetExceeded);
    try {
        oracle::vertex_cover_number(path(5), budget);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.guard() == "oracle-max-n");
    }

    SolverBudget timed;
    timed.time_budget = std::chrono::milliseconds(0);
    CHECK_THROWS_AS(domination_number(central(cycle(14)).graph, timed), BudgetExceeded);
}

// K_4 with a pendant vertex: the smallest graph separating h from f.
// Everything here is pinned by the subset-enumeration oracles.
TEST_CASE("h and f can differ off the clique-plus-isolates family") {
    Graph g = parse_graph6("D~_");
    REQUIRE_FALSE(is_clique_plus_isolates(g).has_value());

    CHECK(oracle::vertex_cover_number(g).value == 3);
    CHECK(oracle::h_value(g).value == 3);
    CHECK(oracle::f_value(g).value == 4);
    CHECK(vertex_cover_number(g).value == 3);
    CHECK(h_value(g).value == 3);
    CHECK(f_value(g).value == 4);
    CHECK(good_cover(g).status == SearchStatus::None);

    // gamma(C(G)) equals h here, one below f
    CentralGraph cg = central(g);
    CHECK(oracle::domination_number(cg.graph).value == 3);
    CHECK(domination_number(cg.graph).value == 3);
    // and no gamma-set of C(G) stays within the originals
    CHECK_FALSE(exists_gamma_set_within_originals(cg));
}
