#ifndef CLIQUECOL_GUARD_REPORT_HH
#define CLIQUECOL_GUARD_REPORT_HH 1

#include <cliquecol/cliques.hh>
#include <cliquecol/colouring.hh>
#include <cliquecol/exact.hh>
#include <cliquecol/graph.hh>
#include <cliquecol/theory.hh>

#include <json.hpp>

#include <optional>

namespace cliquecol
{
    auto to_json(const Colouring & c, bool with_assignment) -> nlohmann::json;
    auto to_json(const RegimeReport & r) -> nlohmann::json;
    auto to_json(const TheoryConstants & t) -> nlohmann::json;
    /// Summary only: maxima and totals, not the per-edge lists.
    auto to_json(const EdgeStats & s) -> nlohmann::json;

    struct ReportBudgets
    {
        Budget exact;
    };

    /**
     * Portfolio colouring, regime report, edge statistics and, for graphs
     * within the exact guard, the exact clique chromatic number and mcf.
     * Timeouts and out-of-range components are recorded in-band under
     * "status". The regime uses p_hint, or the edge density when absent.
     */
    auto per_graph_report(const Graph & g, std::optional<double> p_hint, const ReportBudgets & budgets = {}) -> nlohmann::json;
}

#endif
