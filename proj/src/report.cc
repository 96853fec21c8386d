#include <cliquecol/constructors.hh>
#include <cliquecol/errors.hh>
#include <cliquecol/report.hh>

using namespace cliquecol;

using nlohmann::json;

namespace
{
    template <typename T_>
    auto optional_json(const std::optional<T_> & v) -> json
    {
        return v ? json(*v) : json(nullptr);
    }
}

auto cliquecol::to_json(const Colouring & c, bool with_assignment) -> json
{
    json j{ { "palette", c.palette }, { "method", c.method } };
    if (with_assignment)
        j["assignment"] = c.assignment;
    return j;
}

auto cliquecol::to_json(const RegimeReport & r) -> json
{
    json j{
        { "label", r.label },
        { "x", r.x },
        { "lower_bound", optional_json(r.lower_bound) },
        { "upper_bound", optional_json(r.upper_bound) },
        { "exponent_prediction", optional_json(r.exponent_prediction) },
        { "exponent_only", r.exponent_only },
        { "order_of_magnitude", r.order_of_magnitude },
        { "notes", r.notes },
    };
    if (! r.neighbours.empty()) {
        j["neighbours"] = json::array();
        for (auto & n : r.neighbours)
            j["neighbours"].push_back(to_json(n));
    }
    return j;
}

auto cliquecol::to_json(const TheoryConstants & t) -> json
{
    return json{
        { "n", t.n },
        { "p", t.p },
        { "k", t.k },
        { "c", optional_json(t.c) },
        { "eps", optional_json(t.eps) },
        { "eps_prime", optional_json(t.eps_prime) },
        { "k_cap", optional_json(t.k_cap) },
        { "s_thm47", optional_json(t.s_thm47) },
        { "C_def", optional_json(t.C_def) },
        { "k1_claim1", optional_json(t.k1_claim1) },
        { "k2_claim2", optional_json(t.k2_claim2) },
        { "absent", t.absent },
    };
}

auto cliquecol::to_json(const EdgeStats & s) -> json
{
    json j{
        { "edges", s.per_edge_triangles.size() },
        { "max_triangles", s.max_triangles },
        { "edges_not_in_triangle", s.edges_not_in_triangle },
        { "triangle_total", s.triangle_total },
    };
    if (s.k) {
        j["k"] = *s.k;
        j["max_k1_cliques"] = s.max_k1_cliques;
    }
    return j;
}

auto cliquecol::per_graph_report(const Graph & g, std::optional<double> p_hint, const ReportBudgets & budgets) -> json
{
    json j{ { "n", g.size() }, { "m", g.edge_count() } };

    auto portfolio = portfolio_colouring(g, p_hint, std::nullopt);
    auto portfolio_json = to_json(portfolio, true);
    portfolio_json["valid"] = validate(g, portfolio).valid;
    j["portfolio"] = portfolio_json;

    j["edge_stats"] = to_json(edge_triangle_stats(g));

    double pairs = 0.5 * g.size() * (g.size() - 1.0);
    double p = p_hint.value_or(pairs > 0 ? static_cast<double>(g.edge_count()) / pairs : 0.0);
    if (g.size() >= 3 && p > 0.0 && p < 1.0)
        j["regime"] = to_json(classify_regime(g.size(), p));
    else
        j["regime"] = json{ { "status", "not applicable" } };

    if (g.size() > std::min(budgets.exact.max_vertices, exact_vertex_limit)) {
        j["exact"] = json{ { "status", "skipped" } };
        j["mcf"] = json{ { "status", "skipped" } };
        return j;
    }

    try {
        auto exact = exact_clique_chromatic(g, budgets.exact);
        j["exact"] = json{
            { "status", "ok" },
            { "chi_c", exact.k },
            { "witness", to_json(exact.witness, true) },
            { "valid", validate(g, exact.witness).valid },
            { "nodes", exact.nodes },
        };
    }
    catch (const BudgetExhausted & e) {
        j["exact"] = json{ { "status", "timeout" }, { "lower", e.lower() }, { "upper", e.upper() } };
    }

    try {
        auto mcf = exact_mcf(g, budgets.exact);
        j["mcf"] = json{
            { "status", "ok" },
            { "mcf", mcf.size },
            { "chi_lower", mcf.chi_lower },
            { "set", mcf.set },
            { "nodes", mcf.nodes },
        };
    }
    catch (const BudgetExhausted & e) {
        j["mcf"] = json{ { "status", "timeout" }, { "lower", e.lower() }, { "upper", e.upper() } };
    }
    return j;
}
