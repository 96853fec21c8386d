#ifndef CLIQUECOL_GUARD_CONSTRUCTORS_HH
#define CLIQUECOL_GUARD_CONSTRUCTORS_HH 1

#include <cliquecol/colouring.hh>
#include <cliquecol/graph.hh>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cliquecol
{
    /// Greedy maximal independent set, scanning `order` (a permutation of V).
    /// Returned in insertion order.
    auto greedy_mis(const Graph & g, std::span<const int> order) -> std::vector<int>;

    /**
     * Colours from an ordered dominating set a = (v_1, ..., v_k): for i = 1..k
     * every uncoloured neighbour of v_i gets colour i; what remains is an
     * independent subset of a and gets colour 0. Uses at most k + 1 colours.
     * Throws ParameterError naming a vertex that a does not dominate.
     */
    auto dominating_set_colouring(const Graph & g, std::span<const int> a) -> Colouring;

    /// dominating_set_colouring of a greedy maximal independent set.
    auto greedy_domset_colouring(const Graph & g, std::optional<std::uint64_t> order_seed = std::nullopt) -> Colouring;

    struct TriFreeParams
    {
        double eta = 0.5;
        double beta = 0.2;
        bool paper_faithful = false;
        std::optional<std::uint64_t> order_seed;
        /// Edge probability for the phase thresholds; estimated as m / C(n,2) when unset.
        std::optional<double> p;

        /// Throws ParameterError unless 0 < eta < 1/sqrt(2) and eta^2/2 < beta < 1/4.
        auto check() const -> void;
    };

    /// Phase thresholds of the faithful schedule.
    struct TriFreeSchedule
    {
        int target_size = 0;        // j0 = ceil(eta p^(-3/2) (ln n)^(1/2))
        double large_phase_floor;   // t = p^(-3/2) n^beta
        int batch_size = 0;         // s* = ceil(p^(-3/2))
        double singleton_floor;     // (ln n)^2
    };

    auto trifree_schedule(int n, double p, const TriFreeParams & params) -> TriFreeSchedule;

    /**
     * Repeatedly extracts a colour class by scanning the uncoloured vertices in
     * order and keeping w when A + w is triangle-free and no new edge wa is a
     * maximal clique of g (i.e. w and a have a common neighbour). Each class
     * is therefore free of maximal cliques. In the default mode every class is
     * grown maximally; the faithful mode follows the three-phase schedule.
     */
    auto trifree_decomposition_colouring(const Graph & g, const TriFreeParams & params = {}) -> Colouring;

    struct DenseParams
    {
        double p = 0.5;
        double gamma = 0.0;     // 2 log_{1/p}(ln n) / log_{1/p}(n)
        int k_stop = 1;         // ceil((1/2 + gamma) log_{1/(1-p)} n), at least 1
        std::optional<std::uint64_t> order_seed;

        /// Requires 0 < p < 1.
        static auto from(int n, double p, std::optional<std::uint64_t> order_seed = std::nullopt) -> DenseParams;
        /// p estimated as m / C(n,2).
        static auto estimated(const Graph & g, std::optional<std::uint64_t> order_seed = std::nullopt) -> DenseParams;
    };

    struct DenseColouring
    {
        Colouring colouring;
        int independent_size = 0;   // |A| when the greedy stopped
        int leftover = 0;           // undominated vertices given the extra colour
        bool fallback_used = false;
    };

    /**
     * Greedy independent set stopped at k_stop vertices, dominating-set classes
     * 0..|A|, and a single extra colour for the undominated rest (merged into
     * class 0 when it is independent, since it has no neighbour in A). If the
     * extra class holds a maximal clique of g it is recoloured by
     * greedy_domset_colouring of the induced subgraph with fresh colours.
     */
    auto dense_two_phase_colouring(const Graph & g, const DenseParams & params) -> DenseColouring;

    /// Best valid colouring of domset, trifree and (for 0.05 <= p_hint < 1) dense.
    /// Ties go to the earlier method in that order; the method label names the winner.
    auto portfolio_colouring(const Graph & g, std::optional<double> p_hint, std::optional<std::uint64_t> seed) -> Colouring;

    inline constexpr double portfolio_dense_threshold = 0.05;
}

#endif
