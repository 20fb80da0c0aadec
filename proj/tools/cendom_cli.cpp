// cendom: central-graph domination analyzer.
//
// Subcommands:
//   analyze  one graph -> JSON invariant panel, class and theorem checks
//   corpus   graph6 file -> run theorem checks on every line
//   family   closed-form gamma(C(G)) vs computed values across a family
//   gen      emit a named family member as graph6 or an edge list
//
// Exit codes: 0 success, 1 check failures, 2 input errors, 3 budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cendom/central.hpp"
#include "cendom/classify.hpp"
#include "cendom/enumerate.hpp"
#include "cendom/format.hpp"
#include "cendom/generators.hpp"
#include "cendom/graph.hpp"
#include "cendom/parallel.hpp"
#include "cendom/solvers.hpp"
#include "cendom/verify.hpp"

namespace {

using cendom::Graph;
using cendom::SolverBudget;
using cendom::VertexSet;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

struct BudgetOptions {
    int oracle_max_n = SolverBudget{}.oracle_max_n;
    int exact_central_max_v = SolverBudget{}.exact_central_max_v;
    int preservation_max_v = SolverBudget{}.preservation_max_v;
    long long time_budget_ms = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--oracle-max-n", oracle_max_n,
                        "Vertex limit for subset-enumeration oracles");
        cmd->add_option("--exact-central-max-v", exact_central_max_v,
                        "Vertex limit for exact gamma on central graphs");
        cmd->add_option("--preservation-max-v", preservation_max_v,
                        "Vertex limit for the gamma-set-within-originals search");
        cmd->add_option("--time-budget-ms", time_budget_ms,
                        "Per-solver time budget in milliseconds (0 = none)");
    }

    SolverBudget budget() const {
        SolverBudget b;
        b.oracle_max_n = oracle_max_n;
        b.exact_central_max_v = exact_central_max_v;
        b.preservation_max_v = preservation_max_v;
        if (time_budget_ms > 0) b.time_budget = std::chrono::milliseconds(time_budget_ms);
        return b;
    }
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cendom::ParseError(cendom::ParseErrorKind::EmptyInput, 0, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph parse_graph(const std::string& text, const std::string& format) {
    if (format == "edgelist") return cendom::parse_edge_list(text);
    // graph6: the first non-blank line
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) return cendom::parse_graph6(line);
    }
    throw cendom::ParseError(cendom::ParseErrorKind::EmptyInput, 0, "graph6: empty input");
}

ordered_json json_set(const VertexSet& s) {
    ordered_json arr = ordered_json::array();
    s.for_each([&](int v) { arr.push_back(v); });
    return arr;
}

ordered_json json_opt_set(const std::optional<VertexSet>& s) {
    return s ? json_set(*s) : ordered_json(nullptr);
}

ordered_json json_bound(const cendom::BoundCheck& c) {
    ordered_json j;
    j["applicable"] = c.applicable;
    if (!c.applicable) return j;
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["holds"] = c.holds;
    j["equality"] = c.equality;
    j["equality_condition"] = c.equality_condition ? ordered_json(*c.equality_condition) : ordered_json(nullptr);
    return j;
}

ordered_json json_bounds(const cendom::BoundsReport& b) {
    ordered_json j;
    j["gamma_central"] = b.gamma_central;
    j["tau_lower"] = json_bound(b.tau_lower);
    j["alpha_upper"] = json_bound(b.alpha_upper);
    j["bipartite"] = json_bound(b.bipartite_strong);
    j["bipartite_canonical"] = json_bound(b.bipartite_canonical);
    j["bipartite_discrepancy"] = b.bipartite_discrepancy;
    ordered_json d;
    d["applicable"] = b.disconnected.applicable;
    if (b.disconnected.applicable) {
        d["tau_sum"] = b.disconnected.tau_sum;
        d["gamma_central"] = b.disconnected.gamma_central;
        d["upper"] = b.disconnected.upper;
        d["holds"] = b.disconnected.holds;
    }
    j["disconnected"] = d;
    j["all_hold"] = b.all_hold();
    return j;
}

void emit(const ordered_json& j, bool pretty) {
    if (pretty)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

int run_analyze(const std::string& input, const std::string& format, const BudgetOptions& bopts,
                bool require_exact_gamma, const std::string& emit_central_path,
                const std::string& emit_central_format, bool pretty) {
    SolverBudget budget = bopts.budget();
    Graph g = parse_graph(read_input(input), format);

    cendom::ClassificationReport rep = cendom::classify(g, budget, require_exact_gamma);

    if (!emit_central_path.empty()) {
        if (g.order() < 1) throw std::invalid_argument("--emit-central: graph must have at least one vertex");
        cendom::CentralGraph cg = cendom::central(g);
        std::ofstream out(emit_central_path, std::ios::binary);
        if (!out) throw std::invalid_argument("--emit-central: cannot open '" + emit_central_path + "'");
        if (emit_central_format == "graph6")
            out << cendom::write_graph6(cg.graph) << "\n";
        else
            out << cendom::write_edge_list(cg.graph);
    }

    ordered_json j;
    j["schema"] = 1;
    j["order"] = rep.order;
    j["size"] = rep.size;
    j["tau"] = rep.tau;
    j["alpha"] = rep.alpha;
    j["h"] = rep.h ? ordered_json(*rep.h) : ordered_json(nullptr);
    j["f"] = rep.f ? ordered_json(*rep.f) : ordered_json(nullptr);
    if (rep.gamma_central) {
        ordered_json gc;
        gc["value"] = rep.gamma_central->value;
        gc["source"] = cendom::to_string(rep.gamma_central->source);
        j["gamma_central"] = gc;
    } else {
        j["gamma_central"] = nullptr;
    }
    j["class"] = cendom::to_string(rep.class_tag);

    ordered_json w;
    w["tau_cover"] = json_set(rep.tau_cover);
    w["alpha_set"] = json_set(rep.alpha_set);
    w["h_set"] = json_opt_set(rep.h_set);
    w["f_set"] = json_opt_set(rep.f_set);
    w["good_cover"] = json_opt_set(rep.good_cover_set);
    w["gamma_central_set"] = json_opt_set(rep.gamma_central_set);
    j["witnesses"] = w;

    std::vector<std::string> notes = rep.notes;
    if (g.order() >= 1) {
        try {
            j["bounds"] = json_bounds(cendom::check_bounds(g, budget));
        } catch (const cendom::BudgetExceeded& e) {
            if (require_exact_gamma) throw;
            j["bounds"] = nullptr;
            notes.push_back(std::string("bounds skipped: ") + e.what());
        }
    } else {
        j["bounds"] = nullptr;
    }

    ordered_json checks;
    if (g.order() >= 3 && g.size() > 0) {
        cendom::H2Result h2 = cendom::h2_characterization(g, budget);
        ordered_json jh2;
        jh2["h_is_2"] = h2.h_is_2;
        jh2["characterization"] = h2.characterization;
        jh2["agree"] = h2.agree();
        checks["h2"] = jh2;
    } else {
        checks["h2"] = nullptr;
    }
    if (g.order() >= 4 && cendom::is_connected(g)) {
        try {
            Graph cc = cendom::central_complement(g);
            if (cc.order() > budget.exact_central_max_v)
                throw cendom::BudgetExceeded("exact-central-max-v",
                                             "complement central check exceeds the exact budget");
            int gamma_cc = cendom::domination_number(cc, budget).value;
            ordered_json jcc;
            jcc["gamma"] = gamma_cc;
            jcc["holds"] = gamma_cc == 2;
            checks["complement_central"] = jcc;
            ordered_json jeq;
            jeq["agree"] = cendom::check_equivalence_corollary(g, budget);
            checks["equivalence"] = jeq;
        } catch (const cendom::BudgetExceeded& e) {
            if (require_exact_gamma) throw;
            checks["complement_central"] = nullptr;
            checks["equivalence"] = nullptr;
            notes.push_back(std::string("complement-central checks skipped: ") + e.what());
        }
    } else {
        checks["complement_central"] = nullptr;
        checks["equivalence"] = nullptr;
    }
    j["checks"] = checks;
    j["notes"] = notes;

    emit(j, pretty);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// corpus
// ---------------------------------------------------------------------------

struct CorpusResult {
    std::size_t line_no = 0;
    std::string graph6;
    bool parse_failed = false;
    std::string parse_error;
    std::vector<cendom::CheckRecord> records;
};

int run_corpus(const std::string& path, const std::string& selector, const BudgetOptions& bopts,
               unsigned jobs, bool pretty) {
    SolverBudget budget = bopts.budget();
    std::vector<cendom::CheckId> checks = cendom::parse_check_selector(selector);

    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "corpus: cannot open '" << path << "'\n";
        return kExitInputError;
    }
    std::vector<std::pair<std::size_t, std::string>> lines;
    {
        std::string line;
        std::size_t no = 0;
        while (std::getline(in, line)) {
            ++no;
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (line.empty() || line == ">>graph6<<") continue;
            lines.emplace_back(no, line);
        }
    }

    std::vector<CorpusResult> results(lines.size());
    cendom::parallel_for_index(lines.size(), jobs, [&](std::size_t i) {
        CorpusResult& r = results[i];
        r.line_no = lines[i].first;
        r.graph6 = lines[i].second;
        try {
            Graph g = cendom::parse_graph6(r.graph6);
            r.records = cendom::run_checks(g, checks, budget);
        } catch (const cendom::ParseError& e) {
            r.parse_failed = true;
            r.parse_error = e.what();
        }
    });

    std::size_t parse_failures = 0;
    std::size_t check_failures = 0;
    struct Tally { std::size_t pass = 0, fail = 0, skipped = 0; };
    std::vector<Tally> tally(checks.size());
    ordered_json counterexamples = ordered_json::array();
    ordered_json parse_failure_list = ordered_json::array();

    for (const CorpusResult& r : results) {
        if (r.parse_failed) {
            ++parse_failures;
            ordered_json pf;
            pf["line"] = r.line_no;
            pf["error"] = r.parse_error;
            parse_failure_list.push_back(pf);
            continue;
        }
        for (std::size_t c = 0; c < r.records.size(); ++c) {
            const auto& rec = r.records[c];
            switch (rec.status) {
                case cendom::CheckStatus::Pass: ++tally[c].pass; break;
                case cendom::CheckStatus::Skipped: ++tally[c].skipped; break;
                case cendom::CheckStatus::Fail: {
                    ++tally[c].fail;
                    ++check_failures;
                    ordered_json ce;
                    ce["line"] = r.line_no;
                    ce["graph6"] = r.graph6;
                    ce["check"] = cendom::to_string(rec.id);
                    ce["detail"] = rec.detail;
                    counterexamples.push_back(ce);
                    break;
                }
            }
        }
    }

    std::size_t failures = parse_failures + check_failures;
    if (pretty) {
        std::cout << "corpus " << path << ": " << results.size() << " lines, " << parse_failures
                  << " parse failures\n";
        for (std::size_t c = 0; c < checks.size(); ++c)
            std::cout << "  " << cendom::to_string(checks[c]) << ": " << tally[c].pass << " pass, "
                      << tally[c].fail << " fail, " << tally[c].skipped << " skipped\n";
        for (const auto& ce : counterexamples)
            std::cout << "  FAIL line " << ce["line"] << " " << ce["graph6"].get<std::string>() << " ["
                      << ce["check"].get<std::string>() << "] " << ce["detail"].get<std::string>() << "\n";
        for (const auto& pf : parse_failure_list)
            std::cout << "  PARSE FAIL line " << pf["line"] << ": " << pf["error"].get<std::string>() << "\n";
        std::cout << (failures == 0 ? "all checks passed\n" : "failures: " + std::to_string(failures) + "\n");
    } else {
        ordered_json j;
        j["schema"] = 1;
        j["file"] = path;
        ordered_json names = ordered_json::array();
        for (auto id : checks) names.push_back(cendom::to_string(id));
        j["checks"] = names;
        j["graphs"] = results.size() - parse_failures;
        ordered_json summary;
        for (std::size_t c = 0; c < checks.size(); ++c) {
            ordered_json t;
            t["pass"] = tally[c].pass;
            t["fail"] = tally[c].fail;
            t["skipped"] = tally[c].skipped;
            summary[cendom::to_string(checks[c])] = t;
        }
        j["summary"] = summary;
        j["parse_failures"] = parse_failure_list;
        j["counterexamples"] = counterexamples;
        j["failures"] = failures;
        emit(j, false);
    }
    return failures == 0 ? kExitOk : kExitCheckFailure;
}

// ---------------------------------------------------------------------------
// family
// ---------------------------------------------------------------------------

struct Range {
    int lo = 0, hi = 0;
};

Range parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad range '" + text + "' (expected N or LO..HI)");
    }
}

int computed_gamma_central(const Graph& g, const std::string& mode, const SolverBudget& budget) {
    if (mode == "exact") {
        cendom::CentralGraph cg = cendom::central(g);
        if (cg.graph.order() > budget.exact_central_max_v)
            throw cendom::BudgetExceeded("exact-central-max-v",
                                         "family: central graph has " + std::to_string(cg.graph.order()) +
                                             " vertices, guard " +
                                             std::to_string(budget.exact_central_max_v));
        return cendom::domination_number(cg.graph, budget).value;
    }
    return cendom::derived_gamma_central(g, budget).value;
}

int run_family(const std::string& family, const std::vector<std::string>& ranges,
               const std::string& mode, const BudgetOptions& bopts, bool pretty) {
    SolverBudget budget = bopts.budget();
    if (mode != "exact" && mode != "f-derived")
        throw std::invalid_argument("family: mode must be exact or f-derived");

    struct Row {
        ordered_json params;
        int formula = 0;
        int computed = 0;
        std::string note;
    };
    std::vector<Row> rows;

    auto one_range = [&]() -> Range {
        if (ranges.size() != 1)
            throw std::invalid_argument("family " + family + ": expected one parameter range");
        return parse_range(ranges[0]);
    };

    if (family == "path" || family == "cycle" || family == "wheel" || family == "friendship") {
        Range r = one_range();
        for (int n = r.lo; n <= r.hi; ++n) {
            cendom::FamilySpec spec;
            spec.p1 = n;
            Graph g;
            if (family == "path") {
                spec.family = cendom::Family::Path;
                g = cendom::path(n < 0 ? 0 : n);
            } else if (family == "cycle") {
                spec.family = cendom::Family::Cycle;
                g = n >= 3 ? cendom::cycle(n) : Graph();
            } else if (family == "wheel") {
                spec.family = cendom::Family::Wheel;
                g = n >= 3 ? cendom::wheel(n) : Graph();
            } else {
                spec.family = cendom::Family::Friendship;
                g = n >= 1 ? cendom::friendship(n) : Graph();
            }
            int formula = cendom::formula_gamma_central(spec);  // rejects out-of-hypothesis params
            Row row;
            row.params["n"] = n;
            row.formula = formula;
            row.computed = computed_gamma_central(g, mode, budget);
            if (cendom::is_clique_plus_isolates(g))
                row.note = "exceptional member: derived value from the clique class";
            rows.push_back(std::move(row));
        }
    } else if (family == "complete_bipartite") {
        if (ranges.size() != 2)
            throw std::invalid_argument("family complete_bipartite: expected ranges for m and n");
        Range rm = parse_range(ranges[0]);
        Range rn = parse_range(ranges[1]);
        if (rm.lo < 2 || rn.lo < 2)
            throw std::invalid_argument("family complete_bipartite: needs n >= m >= 2");
        for (int m = rm.lo; m <= rm.hi; ++m)
            for (int n = std::max(m, rn.lo); n <= rn.hi; ++n) {
                cendom::FamilySpec spec{cendom::Family::CompleteBipartite, m, n};
                Row row;
                row.params["m"] = m;
                row.params["n"] = n;
                row.formula = cendom::formula_gamma_central(spec);
                row.computed = computed_gamma_central(cendom::complete_bipartite(m, n), mode, budget);
                rows.push_back(std::move(row));
            }
    } else if (family == "corona1") {
        Range r = one_range();
        for (int n = r.lo; n <= r.hi; ++n) {
            cendom::FamilySpec spec{cendom::Family::Corona1, n, 0};
            int formula = cendom::formula_gamma_central(spec);
            for (const Graph& base : cendom::nonisomorphic_graphs(n, /*connected_only=*/true)) {
                Row row;
                row.params["order"] = n;
                row.params["base"] = cendom::write_graph6(base);
                row.formula = formula;
                row.computed = computed_gamma_central(cendom::corona(base, 1), mode, budget);
                rows.push_back(std::move(row));
            }
        }
    } else {
        throw std::invalid_argument("unknown family '" + family + "'");
    }

    bool all_match = true;
    for (const Row& row : rows)
        if (row.formula != row.computed) all_match = false;

    if (pretty) {
        std::cout << "family " << family << " mode " << mode << "\n";
        for (const Row& row : rows) {
            std::cout << "  " << row.params.dump() << " formula=" << row.formula
                      << " computed=" << row.computed << (row.formula == row.computed ? " ok" : " MISMATCH");
            if (!row.note.empty()) std::cout << "  (" << row.note << ")";
            std::cout << "\n";
        }
        std::cout << (all_match ? "all rows match\n" : "MISMATCHES FOUND\n");
    } else {
        ordered_json j;
        j["schema"] = 1;
        j["family"] = family;
        j["mode"] = mode;
        ordered_json jrows = ordered_json::array();
        for (const Row& row : rows) {
            ordered_json jr;
            jr["params"] = row.params;
            jr["formula"] = row.formula;
            jr["computed"] = row.computed;
            jr["match"] = row.formula == row.computed;
            if (!row.note.empty()) jr["note"] = row.note;
            jrows.push_back(jr);
        }
        j["rows"] = jrows;
        j["all_match"] = all_match;
        emit(j, false);
    }
    return all_match ? kExitOk : kExitCheckFailure;
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

int run_gen(const std::string& family, const std::vector<int>& params, const std::string& format,
            const std::string& base_path, const std::string& base_format) {
    auto want = [&](std::size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("gen " + family + ": expected " + std::to_string(k) +
                                        " integer parameter(s)");
    };
    Graph g;
    if (family == "path") {
        want(1);
        g = cendom::path(params[0]);
    } else if (family == "cycle") {
        want(1);
        g = cendom::cycle(params[0]);
    } else if (family == "complete") {
        want(1);
        g = cendom::complete(params[0]);
    } else if (family == "empty") {
        want(1);
        g = cendom::empty_graph(params[0]);
    } else if (family == "complete_bipartite") {
        want(2);
        g = cendom::complete_bipartite(params[0], params[1]);
    } else if (family == "wheel") {
        want(1);
        g = cendom::wheel(params[0]);
    } else if (family == "friendship") {
        want(1);
        g = cendom::friendship(params[0]);
    } else if (family == "double_star") {
        want(2);
        g = cendom::double_star(params[0], params[1]);
    } else if (family == "clique_plus_isolates") {
        want(2);
        g = cendom::clique_plus_isolates(params[0], params[1]);
    } else if (family == "corona") {
        want(1);
        Graph base = parse_graph(read_input(base_path), base_format);
        g = cendom::corona(base, params[0]);
    } else {
        throw std::invalid_argument("unknown family '" + family + "'");
    }

    if (format == "graph6")
        std::cout << cendom::write_graph6(g) << "\n";
    else
        std::cout << cendom::write_edge_list(g);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"central-graph domination analyzer"};
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Analyze one graph and print a JSON report");
    std::string an_input = "-";
    std::string an_format = "graph6";
    bool an_pretty = false;
    bool an_require_exact = false;
    std::string an_emit_central, an_emit_central_format = "edgelist";
    BudgetOptions an_budget;
    analyze->add_option("input", an_input, "Input file, or - for stdin")->capture_default_str();
    analyze->add_option("--format", an_format, "Input format")
        ->check(CLI::IsMember({"graph6", "edgelist"}))
        ->capture_default_str();
    analyze->add_flag("--pretty", an_pretty, "Indent the JSON output");
    analyze->add_flag("--require-exact-gamma", an_require_exact,
                      "Fail (exit 3) instead of deriving gamma(C(G)) when over budget");
    analyze->add_option("--emit-central", an_emit_central, "Also write C(G) to this path");
    analyze->add_option("--emit-central-format", an_emit_central_format, "Format for --emit-central")
        ->check(CLI::IsMember({"graph6", "edgelist"}))
        ->capture_default_str();
    an_budget.attach(analyze);

    // corpus
    auto* corpus = app.add_subcommand("corpus", "Run theorem checks over a graph6 file");
    std::string co_file;
    std::string co_checks = "all";
    unsigned co_jobs = cendom::default_jobs();
    bool co_pretty = false;
    BudgetOptions co_budget;
    corpus->add_option("file", co_file, "graph6 file, one graph per line")->required();
    corpus->add_option("--checks", co_checks,
                       "Comma-separated checks: gamma-h-f, trichotomy, h-f-tau, bounds, h2, "
                       "preservation, complement-central, equivalence, or all")
        ->capture_default_str();
    corpus->add_option("--jobs", co_jobs, "Worker threads (output order is input order regardless)");
    corpus->add_flag("--pretty", co_pretty, "Human-readable summary instead of JSON");
    co_budget.attach(corpus);

    // family
    auto* family = app.add_subcommand("family", "Compare closed-form gamma(C(G)) against computed values");
    std::string fa_name;
    std::vector<std::string> fa_ranges;
    std::string fa_mode = "exact";
    bool fa_pretty = false;
    BudgetOptions fa_budget;
    family->add_option("name", fa_name, "path, cycle, complete_bipartite, wheel, friendship or corona1")
        ->required();
    family->add_option("range", fa_ranges, "Parameter range(s), e.g. 3..40 (two for complete_bipartite)")
        ->required();
    family->add_option("--mode", fa_mode, "exact: solve gamma on C(G); f-derived: class-derived value")
        ->check(CLI::IsMember({"exact", "f-derived"}))
        ->capture_default_str();
    family->add_flag("--pretty", fa_pretty, "Human-readable table instead of JSON");
    fa_budget.attach(family);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a named family member");
    std::string ge_name;
    std::vector<int> ge_params;
    std::string ge_format = "graph6";
    std::string ge_base = "-";
    std::string ge_base_format = "graph6";
    gen->add_option("name", ge_name,
                    "path, cycle, complete, empty, complete_bipartite, wheel, friendship, "
                    "double_star, clique_plus_isolates or corona")
        ->required();
    gen->add_option("params", ge_params, "Integer parameters");
    gen->add_option("--format", ge_format, "Output format")
        ->check(CLI::IsMember({"graph6", "edgelist"}))
        ->capture_default_str();
    gen->add_option("--base", ge_base, "corona: base graph file, or - for stdin")->capture_default_str();
    gen->add_option("--base-format", ge_base_format, "corona: base graph format")
        ->check(CLI::IsMember({"graph6", "edgelist"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*analyze)
            return run_analyze(an_input, an_format, an_budget, an_require_exact, an_emit_central,
                               an_emit_central_format, an_pretty);
        if (*corpus) return run_corpus(co_file, co_checks, co_budget, co_jobs, co_pretty);
        if (*family) return run_family(fa_name, fa_ranges, fa_mode, fa_budget, fa_pretty);
        if (*gen) return run_gen(ge_name, ge_params, ge_format, ge_base, ge_base_format);
    } catch (const cendom::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const cendom::BudgetExceeded& e) {
        std::cerr << "budget exceeded [" << e.guard() << "]: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitOk;
}
