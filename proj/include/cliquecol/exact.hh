#ifndef CLIQUECOL_GUARD_EXACT_HH
#define CLIQUECOL_GUARD_EXACT_HH 1

#include <cliquecol/colouring.hh>
#include <cliquecol/graph.hh>

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace cliquecol
{
    /// Hard limit of the exact solvers: vertex sets are single machine words.
    inline constexpr int exact_vertex_limit = 64;

    /// Limits for the exact searches. Unset limits are unlimited.
    struct Budget
    {
        std::optional<std::chrono::milliseconds> time_limit;
        std::optional<std::uint64_t> node_limit;
        int max_vertices = 40;
        std::size_t max_cliques = default_clique_limit;
    };

    struct ExactResult
    {
        int k = 0;
        Colouring witness;
        std::uint64_t nodes = 0;
    };

    /**
     * Smallest k admitting a colouring with no monochromatic maximal clique of
     * size >= 2. Proves infeasibility of every smaller k by branch and bound
     * over the maximal-clique hypergraph: vertex 0 is fixed to colour 0, a new
     * colour index never exceeds the largest used + 1, and the branching vertex
     * is the one in most unsatisfied hyperedges (ties to the lowest index).
     * Edge hyperedges act as proper-colouring constraints. A graph with no
     * maximal clique of size >= 2 needs 1 colour, or 0 if it has no vertices.
     */
    auto exact_clique_chromatic(const Graph & g, const Budget & budget = {}) -> ExactResult;

    /// Chromatic number with a proper-colouring witness.
    auto exact_chromatic(const Graph & g, const Budget & budget = {}) -> ExactResult;

    struct McfResult
    {
        int size = 0;
        std::vector<int> set;
        /// ceil(n / size), over all n vertices including isolated ones; 0 when n = 0.
        int chi_lower = 0;
        std::uint64_t nodes = 0;
    };

    /// Largest vertex set containing no maximal clique of size >= 2 (the
    /// complement of a minimum hitting set of those cliques).
    auto exact_mcf(const Graph & g, const Budget & budget = {}) -> McfResult;

    struct IndependentSet
    {
        int size = 0;
        std::vector<int> set;
    };

    auto independence_number(const Graph & g, const Budget & budget = {}) -> IndependentSet;

    /// Vertices lying in at least one triangle.
    auto triangle_vertices(const Graph & g) -> std::vector<int>;

    struct SparseBound
    {
        /// ceil((n - t) / alpha), or 0 when n <= t.
        int bound = 0;
        int triangle_vertex_count = 0;
        int alpha = 0;
    };

    auto sparse_lower_bound(const Graph & g, const Budget & budget = {}) -> SparseBound;

    /// True iff the set contains no maximal clique of g of size >= 2.
    auto is_maximal_clique_free(const Graph & g, const std::vector<int> & set) -> bool;
}

#endif
