#ifndef CLIQUECOL_GUARD_CLIQUES_HH
#define CLIQUECOL_GUARD_CLIQUES_HH 1

#include <cliquecol/graph.hh>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace cliquecol
{
    inline constexpr std::size_t default_clique_limit = 10'000'000;

    /**
     * Maximal cliques of a graph in canonical order: each clique sorted
     * ascending, the list sorted lexicographically. Size-1 cliques (isolated
     * vertices) are listed but counted separately in singleton_count, since
     * clique colourings ignore them.
     */
    struct CliqueSet
    {
        std::vector<std::vector<int>> cliques;
        std::size_t max_size = 0;
        std::size_t count = 0;
        std::size_t singleton_count = 0;
    };

    /// Returning false from the visitor stops the enumeration early.
    using CliqueVisitor = std::function<bool (std::span<const int>)>;

    /// Pivoting Bron-Kerbosch over bit-rows. Visits every maximal clique of
    /// G[within]; vertices outside `within` are ignored entirely. Returns
    /// false if the visitor stopped the enumeration.
    auto visit_maximal_cliques(const Graph & g, const VertexSet & within, const CliqueVisitor & visitor) -> bool;

    /// Throws CliqueOverflow when more than max_count cliques exist.
    auto enumerate_maximal_cliques(const Graph & g, std::optional<std::size_t> max_count = default_clique_limit) -> CliqueSet;

    /// Vertices adjacent to every member of the given set (excluding the members).
    auto common_neighbours(const Graph & g, std::span<const int> vertices) -> VertexSet;

    auto is_clique(const Graph & g, std::span<const int> vertices) -> bool;
    auto is_maximal_clique(const Graph & g, std::span<const int> vertices) -> bool;

    struct EdgeCount
    {
        int u, v;
        std::uint64_t count;

        auto operator==(const EdgeCount &) const -> bool = default;
    };

    /// Per-edge clique statistics. per_edge_triangles[i].count = |N(u) & N(v)|.
    /// The K_{k+1} fields are filled only by k1_cliques_per_edge.
    struct EdgeStats
    {
        std::vector<EdgeCount> per_edge_triangles;
        std::uint64_t max_triangles = 0;
        std::uint64_t edges_not_in_triangle = 0;
        std::uint64_t triangle_total = 0;

        std::optional<int> k;
        std::vector<EdgeCount> per_edge_k1_cliques;
        std::uint64_t max_k1_cliques = 0;
    };

    auto edge_triangle_stats(const Graph & g) -> EdgeStats;

    /// For each edge, the number of (k+1)-cliques containing it. Requires k >= 2.
    auto k1_cliques_per_edge(const Graph & g, int k) -> EdgeStats;

    /// Exact number of k-cliques with every vertex in s. Requires k >= 2.
    auto count_k_cliques_in_subset(const Graph & g, std::span<const int> s, int k) -> std::uint64_t;

    /// Number of r-cliques inside a candidate set; r = 0 counts the empty clique.
    auto count_cliques_within(const Graph & g, const VertexSet & candidates, int r) -> std::uint64_t;

    struct Rational
    {
        std::int64_t numerator, denominator;

        auto value() const -> double { return static_cast<double>(numerator) / static_cast<double>(denominator); }
    };

    /// e(G[w]) / (|w| - 2), unreduced. Requires |w| >= 3.
    auto dense_set_ratio(const Graph & g, std::span<const int> w) -> Rational;
}

#endif
