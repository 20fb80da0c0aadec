// Acceptance suite: runs the eight release criteria and prints one verdict
// line per criterion. Exit status is the number of failed criteria.
//
// Usage: acceptance <path-to-graphs7.g6>
//
// Criteria 1, 2 and the tau-equality clause of the bounds check are known to
// report counterexamples: a family of graphs starting at K_4-plus-a-pendant
// has h(G) < f(G), and there gamma(C(G)) = tau(G) despite the absence of a
// good cover. The suite does not paper over this; failing identities are
// reported with the exact graphs so they can be reproduced with `cendom
// analyze`. See README.md.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cendom/central.hpp"
#include "cendom/classify.hpp"
#include "cendom/enumerate.hpp"
#include "cendom/format.hpp"
#include "cendom/generators.hpp"
#include "cendom/solvers.hpp"
#include "cendom/verify.hpp"
#include "test_support.hpp"

using namespace cendom;
using cendom::testing::for_each_labeled_graph;
using cendom::testing::random_graph;

namespace {

struct SubResult {
    std::string name;
    long pass = 0;
    long fail = 0;
    long skipped = 0;
    std::string first_failure;

    void record(CheckStatus status, const std::string& graph6, const std::string& detail) {
        switch (status) {
            case CheckStatus::Pass: ++pass; break;
            case CheckStatus::Skipped: ++skipped; break;
            case CheckStatus::Fail:
                ++fail;
                if (first_failure.empty()) first_failure = graph6 + " " + detail;
                break;
        }
    }
};

struct Criterion {
    int number;
    std::string title;
    std::vector<SubResult> subs;
    bool failed_hard = false;
    std::string hard_error;

    bool passed() const {
        if (failed_hard) return false;
        for (const auto& s : subs)
            if (s.fail > 0) return false;
        return true;
    }

    void print() const {
        std::cout << "criterion " << number << ": " << title << "\n";
        for (const auto& s : subs) {
            std::cout << "  " << s.name << ": " << s.pass << " pass, " << s.fail << " fail, "
                      << s.skipped << " skipped\n";
            if (!s.first_failure.empty()) std::cout << "    first counterexample: " << s.first_failure << "\n";
        }
        if (failed_hard) std::cout << "  error: " << hard_error << "\n";
        std::cout << "criterion " << number << ": " << (passed() ? "PASS" : "FAIL") << "\n";
    }
};

const std::vector<CheckId> kCorpusChecks = {CheckId::GammaHF, CheckId::Trichotomy, CheckId::HFTau,
                                            CheckId::Bounds, CheckId::H2};

void run_corpus_checks(const Graph& g, const std::string& g6, bool with_preservation,
                       std::map<CheckId, SubResult>& subs, const SolverBudget& budget) {
    std::vector<CheckId> checks = kCorpusChecks;
    if (with_preservation) checks.push_back(CheckId::Preservation);
    for (const CheckRecord& rec : run_checks(g, checks, budget))
        subs[rec.id].record(rec.status, g6, rec.detail);
}

Criterion criterion_1() {
    Criterion c{1,
                "exhaustive theorem verification over all labeled graphs on 3..6 vertices "
                "(exact gamma on central graphs)",
                {},
                false,
                {}};
    SolverBudget budget;
    std::map<CheckId, SubResult> subs;
    for (CheckId id : kAllChecks)
        if (id != CheckId::ComplementCentral && id != CheckId::Equivalence)
            subs[id].name = to_string(id);
    for (int n = 3; n <= 6; ++n) {
        for_each_labeled_graph(n, [&](const Graph& g) {
            // the subset-enumeration leg of the preservation check is scoped
            // to n <= 5
            run_corpus_checks(g, write_graph6(g), n <= 5, subs, budget);
        });
    }
    for (CheckId id : kAllChecks)
        if (subs.count(id)) c.subs.push_back(subs[id]);
    return c;
}

Criterion criterion_2(const std::vector<Graph>& fixture, const std::vector<std::string>& lines) {
    Criterion c{2, "isomorph-reduced corpus of all 1044 graphs on 7 vertices", {}, false, {}};
    SolverBudget budget;

    SubResult integrity;
    integrity.name = "fixture integrity (1044 lines matching the enumerator)";
    auto fresh = nonisomorphic_graphs(7);
    if (fixture.size() == 1044 && fresh.size() == 1044) {
        bool same = true;
        for (std::size_t i = 0; i < fixture.size(); ++i)
            if (!(fixture[i] == fresh[i])) same = false;
        if (same)
            ++integrity.pass;
        else
            integrity.record(CheckStatus::Fail, "", "fixture disagrees with the enumerator");
    } else {
        integrity.record(CheckStatus::Fail, "",
                         "expected 1044 graphs, fixture has " + std::to_string(fixture.size()));
    }
    c.subs.push_back(integrity);

    std::map<CheckId, SubResult> subs;
    for (CheckId id : kCorpusChecks) subs[id].name = to_string(id);
    for (std::size_t i = 0; i < fixture.size(); ++i)
        run_corpus_checks(fixture[i], lines[i], false, subs, budget);
    for (CheckId id : kCorpusChecks) c.subs.push_back(subs[id]);
    return c;
}

int exact_gamma_central(const Graph& g, const SolverBudget& budget) {
    CentralGraph cg = central(g);
    if (cg.graph.order() > budget.exact_central_max_v)
        throw BudgetExceeded("exact-central-max-v", "acceptance: central graph too large");
    return domination_number(cg.graph, budget).value;
}

Criterion criterion_3() {
    Criterion c{3, "family formulas, exact mode", {}, false, {}};
    SolverBudget budget;
    auto sweep = [&](const std::string& name, auto&& members) {
        SubResult r;
        r.name = name;
        members([&](const Graph& g, const FamilySpec& spec, const std::string& label) {
            int formula = formula_gamma_central(spec);
            int exact = exact_gamma_central(g, budget);
            r.record(formula == exact ? CheckStatus::Pass : CheckStatus::Fail, label,
                     "formula=" + std::to_string(formula) + " exact=" + std::to_string(exact));
        });
        c.subs.push_back(r);
    };
    sweep("paths n=3..14", [&](auto&& row) {
        for (int n = 3; n <= 14; ++n) row(path(n), FamilySpec{Family::Path, n, 0}, "P_" + std::to_string(n));
    });
    sweep("cycles n=3..14", [&](auto&& row) {
        for (int n = 3; n <= 14; ++n) row(cycle(n), FamilySpec{Family::Cycle, n, 0}, "C_" + std::to_string(n));
    });
    sweep("complete bipartite 2<=m<=n<=5", [&](auto&& row) {
        for (int m = 2; m <= 5; ++m)
            for (int n = m; n <= 5; ++n)
                row(complete_bipartite(m, n), FamilySpec{Family::CompleteBipartite, m, n},
                    "K_{" + std::to_string(m) + "," + std::to_string(n) + "}");
    });
    sweep("wheels n=3..9", [&](auto&& row) {
        for (int n = 3; n <= 9; ++n) row(wheel(n), FamilySpec{Family::Wheel, n, 0}, "W_" + std::to_string(n));
    });
    sweep("friendship n=2..5", [&](auto&& row) {
        for (int n = 2; n <= 5; ++n)
            row(friendship(n), FamilySpec{Family::Friendship, n, 0}, "F_" + std::to_string(n));
    });
    sweep("1-corona of every connected base, order 3..5", [&](auto&& row) {
        for (int n = 3; n <= 5; ++n)
            for (const Graph& base : nonisomorphic_graphs(n, true))
                row(corona(base, 1), FamilySpec{Family::Corona1, n, 0}, write_graph6(base) + " corona");
    });
    return c;
}

Criterion criterion_4() {
    Criterion c{4, "family formulas, f-derived mode (wider parameter ranges)", {}, false, {}};
    SolverBudget budget;
    auto sweep = [&](const std::string& name, auto&& members) {
        SubResult r;
        r.name = name;
        members([&](const Graph& g, const FamilySpec& spec, const std::string& label) {
            int formula = formula_gamma_central(spec);
            int derived = derived_gamma_central(g, budget).value;
            bool ok = formula == derived;
            // off the exceptional family the derived value is literally f(G);
            // assert that identity too
            if (ok && !is_clique_plus_isolates(g)) ok = f_value(g, budget).value == formula;
            r.record(ok ? CheckStatus::Pass : CheckStatus::Fail, label,
                     "formula=" + std::to_string(formula) + " derived=" + std::to_string(derived));
        });
        c.subs.push_back(r);
    };
    sweep("paths n=3..40", [&](auto&& row) {
        for (int n = 3; n <= 40; ++n) row(path(n), FamilySpec{Family::Path, n, 0}, "P_" + std::to_string(n));
    });
    sweep("cycles n=3..40", [&](auto&& row) {
        for (int n = 3; n <= 40; ++n) row(cycle(n), FamilySpec{Family::Cycle, n, 0}, "C_" + std::to_string(n));
    });
    sweep("complete bipartite 2<=m<=n<=10", [&](auto&& row) {
        for (int m = 2; m <= 10; ++m)
            for (int n = m; n <= 10; ++n)
                row(complete_bipartite(m, n), FamilySpec{Family::CompleteBipartite, m, n},
                    "K_{" + std::to_string(m) + "," + std::to_string(n) + "}");
    });
    sweep("wheels n=3..16", [&](auto&& row) {
        for (int n = 3; n <= 16; ++n) row(wheel(n), FamilySpec{Family::Wheel, n, 0}, "W_" + std::to_string(n));
    });
    sweep("friendship n=2..8", [&](auto&& row) {
        for (int n = 2; n <= 8; ++n)
            row(friendship(n), FamilySpec{Family::Friendship, n, 0}, "F_" + std::to_string(n));
    });
    return c;
}

Criterion criterion_5() {
    Criterion c{5, "complement-central theorem and equivalence corollary, connected graphs on 4..7 vertices",
                {}, false, {}};
    SolverBudget budget;
    SubResult cc, eq;
    cc.name = "gamma of the central complement equals 2";
    eq.name = "the three equivalent statements agree";
    for (int n = 4; n <= 7; ++n) {
        for (const Graph& g : nonisomorphic_graphs(n, true)) {
            std::string g6 = write_graph6(g);
            cc.record(check_complement_central(g, budget) ? CheckStatus::Pass : CheckStatus::Fail, g6,
                      "gamma(complement(C(G))) != 2");
            eq.record(check_equivalence_corollary(g, budget) ? CheckStatus::Pass : CheckStatus::Fail, g6,
                      "statements disagree");
        }
    }
    c.subs.push_back(cc);
    c.subs.push_back(eq);
    return c;
}

Criterion criterion_6() {
    Criterion c{6, "branch-and-bound solvers agree with subset-enumeration oracles", {}, false, {}};
    SolverBudget budget;
    SubResult small, randoms;
    small.name = "all labeled graphs n<=6, gamma and tau";
    for (int n = 1; n <= 6; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            bool ok = domination_number(g, budget).value == oracle::domination_number(g, budget).value &&
                      vertex_cover_number(g, budget).value == oracle::vertex_cover_number(g, budget).value;
            small.record(ok ? CheckStatus::Pass : CheckStatus::Fail, write_graph6(g), "solver/oracle mismatch");
        });
    randoms.name = "1000 random graphs, n<=14, densities {0.1,0.3,0.5,0.8}";
    std::mt19937 rng(1234321);
    const double densities[] = {0.1, 0.3, 0.5, 0.8};
    for (int i = 0; i < 1000; ++i) {
        int n = 1 + static_cast<int>(rng() % 14);
        Graph g = random_graph(rng, n, densities[i % 4]);
        bool ok = domination_number(g, budget).value == oracle::domination_number(g, budget).value &&
                  vertex_cover_number(g, budget).value == oracle::vertex_cover_number(g, budget).value;
        randoms.record(ok ? CheckStatus::Pass : CheckStatus::Fail, write_graph6(g), "solver/oracle mismatch");
    }
    c.subs.push_back(small);
    c.subs.push_back(randoms);
    return c;
}

Criterion criterion_7() {
    Criterion c{7, "clique-plus-isolates family: h, f, tau and exact gamma on C(G), 3<=l<=n<=9", {}, false, {}};
    SolverBudget budget;
    budget.exact_central_max_v = 64;  // C(K_9) has 45 vertices
    SubResult r;
    r.name = "h=l-1, f=l, tau=l-1, gamma(C(G))=l-1";
    for (int ell = 3; ell <= 9; ++ell)
        for (int n = ell; n <= 9; ++n) {
            Graph g = clique_plus_isolates(ell, n);
            std::string label = "K_" + std::to_string(ell) + "+" + std::to_string(n - ell) + "K_1";
            bool ok = h_value(g, budget).value == ell - 1 && f_value(g, budget).value == ell &&
                      vertex_cover_number(g, budget).value == ell - 1 &&
                      exact_gamma_central(g, budget) == ell - 1;
            r.record(ok ? CheckStatus::Pass : CheckStatus::Fail, label, "family values off");
        }
    c.subs.push_back(r);
    return c;
}

Criterion criterion_8(const std::vector<Graph>& fixture, const std::vector<std::string>& lines) {
    Criterion c{8, "graph6 conformance: fixture round trip and designated parse errors", {}, false, {}};
    SubResult rt;
    rt.name = "round trip over the n=7 fixture";
    for (std::size_t i = 0; i < fixture.size(); ++i) {
        bool ok = write_graph6(fixture[i]) == lines[i] && parse_graph6(lines[i]) == fixture[i];
        rt.record(ok ? CheckStatus::Pass : CheckStatus::Fail, lines[i], "round trip mismatch");
    }
    c.subs.push_back(rt);

    SubResult err;
    err.name = "malformed inputs raise their designated errors";
    auto expect = [&](const std::string& text, ParseErrorKind kind, const std::string& label) {
        try {
            parse_graph6(text);
            err.record(CheckStatus::Fail, label, "no error raised");
        } catch (const ParseError& e) {
            err.record(e.kind() == kind ? CheckStatus::Pass : CheckStatus::Fail, label, "wrong error kind");
        } catch (...) {
            err.record(CheckStatus::Fail, label, "wrong exception type");
        }
    };
    expect("", ParseErrorKind::EmptyInput, "empty input");
    expect("~??", ParseErrorKind::MalformedHeader, "long-form header");
    expect(std::string("B\x07"), ParseErrorKind::OutOfRangeChar, "out-of-range character");
    expect("D?", ParseErrorKind::Truncated, "truncated bit vector");
    c.subs.push_back(err);
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <graphs7.g6>\n";
        return 99;
    }
    std::ifstream in(argv[1], std::ios::binary);
    if (!in) {
        std::cerr << "acceptance: cannot open fixture '" << argv[1] << "'\n";
        return 99;
    }
    std::vector<std::string> lines;
    std::vector<Graph> fixture;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        lines.push_back(line);
        fixture.push_back(parse_graph6(line));
    }

    std::vector<Criterion> results;
    results.push_back(criterion_1());
    results.push_back(criterion_2(fixture, lines));
    results.push_back(criterion_3());
    results.push_back(criterion_4());
    results.push_back(criterion_5());
    results.push_back(criterion_6());
    results.push_back(criterion_7());
    results.push_back(criterion_8(fixture, lines));

    int failed = 0;
    for (const Criterion& c : results) {
        c.print();
        std::cout << "\n";
        if (!c.passed()) ++failed;
    }
    std::cout << "summary: " << (results.size() - failed) << " of " << results.size()
              << " criteria passed\n";
    if (failed > 0)
        std::cout << "note: the failing identities are disproved by the reported graphs; "
                     "every counterexample reproduces under `cendom analyze`\n";
    return failed;
}
