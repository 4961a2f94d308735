// krcycle: experiment driver for spanning clique-cycles in random graphs.
//
// Subcommands:
//   sweep    Monte Carlo sweep over (n, omega) grids in one of three modes
//   solve    exact spanning K_r-cycle search on a graph file
//   oracle   brute-force loose Hamilton cycle search on a hypergraph file
//   balance  density / threshold calculator for a pattern graph
//
// Exit codes: 0 ok, 1 usage error, 2 I/O error.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "krcycle/balance.hpp"
#include "krcycle/certificates.hpp"
#include "krcycle/cliques.hpp"
#include "krcycle/pattern.hpp"
#include "krcycle/solver.hpp"
#include "krcycle/sweep.hpp"

namespace {

using nlohmann::json;

json stats_json(const krcycle::SearchStats& stats) {
    return {{"nodes", stats.nodes}, {"elapsed_ms", stats.elapsed_ms}};
}

json rational_json(const krcycle::Rational& q) { return q.str(); }

int run_sweep_cmd(const krcycle::SweepConfig& cfg, const std::string& out_format,
                  const std::string& out_path) {
    auto records = krcycle::run_sweep(cfg);
    auto summary = krcycle::summarize(records);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "krcycle: cannot open output file: " << out_path << "\n";
            return 2;
        }
        out = &file;
    }

    if (out_format == "json") {
        *out << krcycle::sweep_report_json(cfg, records, summary).dump(2) << "\n";
    } else {
        krcycle::write_records_csv(*out, records);
        // keep stdout machine-readable; the summary table goes to stderr
        krcycle::write_summary_csv(std::cerr, summary);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for spanning K_r-cycles and loose Hamilton cycles in random (hyper)graphs"};
    app.require_subcommand(1);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep over an (n, omega) grid");
    krcycle::SweepConfig cfg;
    std::string mode_str = "kr-cycle";
    std::string out_format = "csv";
    std::string out_path;
    sweep->add_option("--mode", mode_str, "kr-cycle | loose-hc | coverage")
        ->check(CLI::IsMember({"kr-cycle", "loose-hc", "coverage"}));
    sweep->add_option("--n", cfg.n_list, "vertex counts")->required()->expected(-1);
    sweep->add_option("--r", cfg.r, "clique size / uniformity (>= 3)");
    sweep->add_option("--omega", cfg.omega_list, "threshold multipliers")->required()->expected(-1);
    sweep->add_option("--trials", cfg.trials, "trials per grid point");
    sweep->add_option("--seed", cfg.base_seed, "base seed");
    sweep->add_option("--node-limit", cfg.budget.node_limit, "search node budget per trial");
    sweep->add_option("--time-limit-ms", cfg.budget.time_limit_ms, "search time budget per trial");
    sweep->add_option("--out", out_format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--output", out_path, "write records to a file instead of stdout");
    sweep->add_flag("--timing", cfg.timing,
                    "record measured elapsed_ms (breaks byte-reproducibility of output)");

    // solve
    auto* solve = app.add_subcommand("solve", "search one graph for a spanning K_r-cycle");
    std::string graph_path;
    int solve_r = 3;
    krcycle::SearchBudget solve_budget;
    solve->add_option("--graph", graph_path, "graph file (\"n m\" header, then \"u v\" lines)")
        ->required();
    solve->add_option("--r", solve_r, "clique size (>= 3)");
    solve->add_option("--node-limit", solve_budget.node_limit, "search node budget");
    solve->add_option("--time-limit-ms", solve_budget.time_limit_ms, "search time budget");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "brute-force loose Hamilton cycle search (n <= 10)");
    std::string hypergraph_path;
    oracle->add_option("--hypergraph", hypergraph_path,
                       "hypergraph file (\"n r m\" header, then r vertices per line)")
        ->required();

    // balance
    auto* balance = app.add_subcommand("balance", "pattern density and threshold calculator");
    std::string pattern_path;
    int kr = 0;
    std::optional<int> overlap;
    int shared_edges = 0;
    std::optional<long long> eval_n;
    double eval_omega = 1.0;
    balance->add_option("--pattern", pattern_path, "pattern graph file");
    balance->add_option("--kr", kr, "use the complete graph K_r as the pattern");
    balance->add_option("--overlap", overlap, "shared vertices between adjacent copies (first-moment mode)");
    balance->add_option("--shared-edges", shared_edges, "shared edges between adjacent copies");
    balance->add_option("--n", eval_n, "evaluate threshold formulas numerically at this n");
    balance->add_option("--omega", eval_omega, "multiplier for numeric threshold evaluation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*sweep) {
            if (mode_str == "loose-hc") cfg.mode = krcycle::SweepMode::loose_hc;
            else if (mode_str == "coverage") cfg.mode = krcycle::SweepMode::coverage;
            else cfg.mode = krcycle::SweepMode::kr_cycle;
            return run_sweep_cmd(cfg, out_format, out_path);
        }

        if (*solve) {
            krcycle::Graph g = krcycle::read_graph_file(graph_path);
            auto outcome = krcycle::find_spanning_kr_cycle(g, solve_r, solve_budget);
            json j{{"status", krcycle::to_string(outcome.status)},
                   {"uncovered", outcome.uncovered_count},
                   {"short_circuited", outcome.short_circuited},
                   {"stats", stats_json(outcome.stats)}};
            if (outcome.certificate) j["certificate"] = krcycle::to_json(*outcome.certificate);
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (*oracle) {
            krcycle::Hypergraph h = krcycle::read_hypergraph_file(hypergraph_path);
            auto outcome = krcycle::brute_force_loose_hc(h);
            json j{{"status", krcycle::to_string(outcome.status)},
                   {"stats", stats_json(outcome.stats)}};
            if (outcome.certificate) {
                j["certificate"] = krcycle::to_json(*outcome.certificate);
                j["ordering"] = outcome.certificate->ordering;
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (*balance) {
            if (pattern_path.empty() == (kr == 0)) {
                std::cerr << "krcycle balance: give exactly one of --pattern or --kr\n";
                return 1;
            }
            krcycle::PatternGraph f =
                kr > 0 ? krcycle::PatternGraph::complete(kr) : krcycle::read_pattern_file(pattern_path);

            json j{{"pattern",
                    {{"vertices", f.vertex_count()},
                     {"edges", f.edge_count()},
                     {"complete", f.is_complete()}}},
                   {"d1", rational_json(krcycle::d1(f))}};

            auto bal = krcycle::is_strictly_one_balanced(f);
            j["strictly_1_balanced"] = bal.strictly_1_balanced;
            if (bal.witness) {
                json edges = json::array();
                for (auto [u, v] : bal.witness->edges) edges.push_back({u, v});
                j["witness"] = {{"vertices", bal.witness->vertices},
                                {"edges", edges},
                                {"d1", rational_json(bal.witness->d1_value)}};
            }

            json thresholds;
            if (f.is_complete()) {
                int r = f.vertex_count();
                auto rep = krcycle::kr_threshold(eval_n.value_or(1000), r);
                thresholds["p_n_exponent"] = rational_json(rep.n_exponent);
                thresholds["p_log_exponent"] = rational_json(rep.log_exponent);
                thresholds["pi_n_exponent"] = rational_json(rep.pi_n_exponent);
                thresholds["pi_log_exponent"] = rational_json(rep.pi_log_exponent);
                if (eval_n) {
                    thresholds["at_n"] = *eval_n;
                    thresholds["p"] = rep.p;
                    thresholds["p_clamped"] = rep.clamped;
                    auto pi = krcycle::loose_hc_threshold_pi(*eval_n, r, eval_omega);
                    thresholds["pi"] = pi.value;
                    thresholds["pi_clamped"] = pi.clamped;
                }
            }
            thresholds["coupling_pi_exponent"] = f.edge_count();
            thresholds["coupling_a_exact"] = f.is_complete();
            if (overlap) {
                auto fm = krcycle::f_cycle_first_moment(f, *overlap, shared_edges);
                json first_moment{{"overlap", *overlap},
                                  {"shared_edges", shared_edges},
                                  {"p_exponent", rational_json(fm.p_exponent)},
                                  {"pi_exponent", rational_json(fm.pi_exponent)},
                                  {"below_overlap2_threshold", fm.below_overlap2_threshold}};
                if (eval_n) {
                    auto o2 = krcycle::overlap2_hc_threshold_pi(*eval_n, eval_omega);
                    first_moment["overlap2_threshold_pi"] = o2.value;
                }
                thresholds["first_moment"] = first_moment;
            }
            j["thresholds"] = thresholds;
            std::cout << j.dump(2) << "\n";
            return 0;
        }
    } catch (const std::runtime_error& e) { // file and format problems
        std::cerr << "krcycle: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) { // precondition violations
        std::cerr << "krcycle: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
