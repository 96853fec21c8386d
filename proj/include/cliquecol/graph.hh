#ifndef CLIQUECOL_GUARD_GRAPH_HH
#define CLIQUECOL_GUARD_GRAPH_HH 1

#include <cliquecol/vertex_set.hh>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cliquecol
{
    using Edge = std::pair<int, int>;

    struct GnpParams;

    /**
     * An immutable undirected simple graph on vertices 0..n-1, stored as one
     * adjacency bit-row per vertex. The edge count is cached at construction.
     */
    class Graph
    {
        private:
            std::vector<VertexSet> _rows;
            std::size_t _edges = 0;

            explicit Graph(std::vector<VertexSet> && rows, std::size_t edges);

            friend auto sample_gnp(const GnpParams & params) -> Graph;

        public:
            Graph() = default;

            /// Rejects self-loops and out-of-range endpoints; duplicate edges are idempotent.
            static auto from_edges(int n, std::span<const Edge> edges) -> Graph;
            static auto edgeless(int n) -> Graph;
            static auto complete(int n) -> Graph;
            static auto cycle(int n) -> Graph;
            static auto petersen() -> Graph;

            auto size() const -> int { return static_cast<int>(_rows.size()); }
            auto edge_count() const -> std::size_t { return _edges; }

            auto adjacent(int u, int v) const -> bool { return _rows[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v)); }
            auto neighbours(int v) const -> const VertexSet & { return _rows[static_cast<std::size_t>(v)]; }
            auto degree(int v) const -> std::size_t { return _rows[static_cast<std::size_t>(v)].count(); }

            /// Edges (u, v) with u < v in lexicographic order.
            auto edges() const -> std::vector<Edge>;

            /// The subgraph induced by the given vertices, relabelled 0..k-1 in the order supplied.
            auto induced(std::span<const int> vertices) const -> Graph;

            auto operator==(const Graph &) const -> bool = default;
    };

    /// G(n, p) parameters. Exactly one of p and the exponent x is authoritative; p = n^(x-1).
    struct GnpParams
    {
        int n = 0;
        double p = 0.0;
        std::uint64_t seed = 0;
        std::optional<double> x;

        static auto with_p(int n, double p, std::uint64_t seed) -> GnpParams;
        static auto with_exponent(int n, double x, std::uint64_t seed) -> GnpParams;
    };

    /// Each pair {i,j} is an edge iff unit_interval(keyed_hash(seed, i, j)) < p,
    /// so the sample does not depend on evaluation order.
    auto sample_gnp(const GnpParams & params) -> Graph;

    /// Reads "c ..." comments, one "p edge N M" header and "e U V" lines (1-indexed).
    auto parse_edge_list(std::string_view text) -> Graph;
    auto read_edge_list_file(const std::string & path) -> Graph;

    /// Canonical form: header then edges sorted with u < v, LF endings.
    auto serialize_edge_list(const Graph & g) -> std::string;
    auto write_edge_list_file(const Graph & g, const std::string & path) -> void;
}

#endif
