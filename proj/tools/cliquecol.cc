#include <cliquecol/cliques.hh>
#include <cliquecol/constructors.hh>
#include <cliquecol/errors.hh>
#include <cliquecol/exact.hh>
#include <cliquecol/graph.hh>
#include <cliquecol/report.hh>
#include <cliquecol/sweep.hh>
#include <cliquecol/theory.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace cliquecol;

using nlohmann::json;
using std::optional;
using std::string;

namespace
{
    enum ExitCode { exit_ok = 0, exit_failure = 1, exit_parameter = 2, exit_budget = 3 };

    auto print(const json & j) -> void
    {
        std::cout << j.dump(2) << '\n';
    }

    auto budget_from(optional<long long> budget_ms, int max_vertices) -> Budget
    {
        Budget b;
        if (budget_ms)
            b.time_limit = std::chrono::milliseconds(*budget_ms);
        b.max_vertices = max_vertices;
        return b;
    }

    auto gnp_params(int n, optional<double> p, optional<double> x, std::uint64_t seed) -> GnpParams
    {
        if (p.has_value() == x.has_value())
            throw ParameterError("give exactly one of --p and --x");
        return p ? GnpParams::with_p(n, *p, seed) : GnpParams::with_exponent(n, *x, seed);
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "Clique colouring of random graphs" };
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    optional<std::uint64_t> order_seed;
    string in_path, out_path;
    int n = 0, k = 3, max_vertices = 40;
    optional<double> p, x;
    optional<long long> budget_ms;

    auto * gen = app.add_subcommand("gen", "Sample G(n,p) and write an edge list");
    gen->add_option("--n", n, "Vertex count")->required();
    gen->add_option("--p", p, "Edge probability");
    gen->add_option("--x", x, "Exponent, p = n^(x-1)");
    gen->add_option("--seed", seed, "Sampling seed");
    gen->add_option("--out", out_path, "Output file (stdout if absent)");

    bool want_stats = false, want_json = false;
    optional<int> clique_k;
    auto * cliques = app.add_subcommand("cliques", "Maximal clique and triangle statistics");
    cliques->add_option("--in", in_path, "Edge-list file")->required();
    cliques->add_option("--k", clique_k, "Also count K_{k+1} per edge");
    cliques->add_flag("--stats", want_stats, "Per-edge triangle statistics");
    cliques->add_flag("--json", want_json, "JSON output");
    cliques->add_option("--seed", seed, "Unused; accepted for uniformity");

    string method = "portfolio";
    bool paper_faithful = false;
    auto * color = app.add_subcommand("color", "Clique colouring by a constructive method");
    color->add_option("--in", in_path, "Edge-list file")->required();
    color->add_option("--method", method, "Constructor")->check(CLI::IsMember({ "domset", "trifree", "dense", "portfolio" }));
    color->add_option("--p", p, "Edge probability (estimated from the graph if absent)");
    color->add_option("--seed", order_seed, "Vertex order seed (natural order if absent)");
    color->add_flag("--paper-faithful", paper_faithful, "Three-phase schedule for trifree");
    color->add_option("--out", out_path, "Colouring file, one 'v <vertex> <colour>' line per vertex");

    bool want_mcf = false, want_chi = false;
    auto * exact = app.add_subcommand("exact", "Exact clique chromatic number");
    exact->add_option("--in", in_path, "Edge-list file")->required();
    exact->add_flag("--mcf", want_mcf, "Also compute mcf and the ceil(n/mcf) bound");
    exact->add_flag("--chi", want_chi, "Also compute the chromatic number");
    exact->add_option("--budget-ms", budget_ms, "Time limit per search");
    exact->add_option("--max-vertices", max_vertices, "Size guard")->check(CLI::Range(1, exact_vertex_limit));
    exact->add_option("--seed", seed, "Unused; accepted for uniformity");

    double delta = 0.02;
    auto * bounds = app.add_subcommand("bounds", "Regime report and named constants");
    bounds->add_option("--n", n, "Vertex count")->required();
    bounds->add_option("--p", p, "Edge probability");
    bounds->add_option("--x", x, "Exponent, p = n^(x-1)");
    bounds->add_option("--k", k, "Clique size for the constants");
    bounds->add_option("--delta", delta, "Band width around breakpoints");
    bounds->add_option("--seed", seed, "Unused; accepted for uniformity");

    string config_path;
    optional<int> threads;
    optional<std::uint64_t> sweep_seed;
    auto * sweep = app.add_subcommand("sweep", "Monte Carlo sweep to CSV");
    sweep->add_option("--config", config_path, "Config file")->required();
    sweep->add_option("--out", out_path, "Override the CSV destination");
    sweep->add_option("--threads", threads, "Worker threads");
    sweep->add_option("--seed", sweep_seed, "Override the master seed");

    auto * report = app.add_subcommand("report", "Combined JSON report for one graph");
    report->add_option("--in", in_path, "Edge-list file")->required();
    report->add_option("--p", p, "Edge probability hint");
    report->add_option("--budget-ms", budget_ms, "Time limit per exact search");
    report->add_option("--max-vertices", max_vertices, "Size guard for the exact parts")->check(CLI::Range(1, exact_vertex_limit));
    report->add_option("--seed", seed, "Unused; accepted for uniformity");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_parameter;
    }

    try {
        if (gen->parsed()) {
            auto g = sample_gnp(gnp_params(n, p, x, seed));
            if (out_path.empty())
                std::cout << serialize_edge_list(g);
            else
                write_edge_list_file(g, out_path);
        }
        else if (cliques->parsed()) {
            auto g = read_edge_list_file(in_path);
            auto set = enumerate_maximal_cliques(g);
            json j{
                { "n", g.size() },
                { "m", g.edge_count() },
                { "maximal_cliques", set.count },
                { "singleton_cliques", set.singleton_count },
                { "max_clique_size", set.max_size },
            };
            if (want_stats || clique_k)
                j["edge_stats"] = to_json(clique_k ? k1_cliques_per_edge(g, *clique_k) : edge_triangle_stats(g));
            if (want_json)
                print(j);
            else {
                std::cout << "n " << g.size() << "\nm " << g.edge_count()
                    << "\nmaximal_cliques " << set.count << "\nsingleton_cliques " << set.singleton_count
                    << "\nmax_clique_size " << set.max_size << '\n';
                if (j.contains("edge_stats"))
                    for (auto & [key, value] : j["edge_stats"].items())
                        std::cout << key << ' ' << value.dump() << '\n';
            }
        }
        else if (color->parsed()) {
            auto g = read_edge_list_file(in_path);
            Colouring c;
            json extra = json::object();
            if (method == "domset")
                c = greedy_domset_colouring(g, order_seed);
            else if (method == "trifree") {
                TriFreeParams params;
                params.paper_faithful = paper_faithful;
                params.order_seed = order_seed;
                params.p = p;
                c = trifree_decomposition_colouring(g, params);
            }
            else if (method == "dense") {
                auto params = p ? DenseParams::from(g.size(), *p, order_seed) : DenseParams::estimated(g, order_seed);
                auto result = dense_two_phase_colouring(g, params);
                c = result.colouring;
                extra = json{ { "k_stop", params.k_stop }, { "fallback_used", result.fallback_used } };
            }
            else
                c = portfolio_colouring(g, p, order_seed);

            auto j = to_json(c, out_path.empty());
            j["valid"] = validate(g, c).valid;
            j.update(extra);
            if (! out_path.empty()) {
                string text;
                for (std::size_t v = 0; v < c.assignment.size(); ++v)
                    text += "v " + std::to_string(v + 1) + ' ' + std::to_string(c.assignment[v]) + '\n';
                write_file_atomically(out_path, text);
            }
            print(j);
        }
        else if (exact->parsed()) {
            auto g = read_edge_list_file(in_path);
            auto budget = budget_from(budget_ms, max_vertices);
            auto result = exact_clique_chromatic(g, budget);
            json j{
                { "n", g.size() },
                { "chi_c", result.k },
                { "witness", to_json(result.witness, true) },
                { "valid", validate(g, result.witness).valid },
                { "nodes", result.nodes },
            };
            auto sparse = sparse_lower_bound(g, budget);
            j["sparse_lower_bound"] = json{ { "bound", sparse.bound }, { "triangle_vertices", sparse.triangle_vertex_count }, { "alpha", sparse.alpha } };
            if (want_mcf) {
                auto mcf = exact_mcf(g, budget);
                j["mcf"] = json{ { "mcf", mcf.size }, { "chi_lower", mcf.chi_lower }, { "set", mcf.set }, { "nodes", mcf.nodes } };
            }
            if (want_chi) {
                auto chi = exact_chromatic(g, budget);
                j["chi"] = json{ { "chi", chi.k }, { "witness", to_json(chi.witness, true) }, { "nodes", chi.nodes } };
            }
            print(j);
        }
        else if (bounds->parsed()) {
            auto params = gnp_params(n, p, x, 0);
            RegimeOptions options;
            options.delta = delta;
            print(json{
                { "n", n },
                { "p", params.p },
                { "regime", to_json(classify_regime(n, params.p, options)) },
                { "constants", to_json(theory_constants(n, params.p, k)) },
            });
        }
        else if (sweep->parsed()) {
            auto cfg = SweepConfig::load(config_path);
            if (! out_path.empty())
                cfg.out_path = out_path;
            if (threads)
                cfg.threads = threads;
            if (sweep_seed)
                cfg.seed = *sweep_seed;
            auto records = run_sweep(cfg);
            if (cfg.out_path.empty())
                std::cout << format_csv(records);
            else
                std::cerr << records.size() << " records written to " << cfg.out_path << '\n';
        }
        else if (report->parsed()) {
            auto g = read_edge_list_file(in_path);
            ReportBudgets budgets;
            budgets.exact = budget_from(budget_ms, max_vertices);
            print(per_graph_report(g, p, budgets));
        }
    }
    catch (const ParameterError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_parameter;
    }
    catch (const ParseError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_parameter;
    }
    catch (const BudgetExhausted & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_budget;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_ok;
}
