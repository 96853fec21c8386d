#include <cliquecol/cliques.hh>
#include <cliquecol/errors.hh>

#include <algorithm>

using namespace cliquecol;

using std::size_t;
using std::span;
using std::uint64_t;
using std::vector;

namespace
{
    struct BronKerbosch
    {
        const Graph & g;
        const CliqueVisitor & visitor;
        vector<int> current;

        auto choose_pivot(const VertexSet & p, const VertexSet & x) const -> int
        {
            int best = -1;
            size_t best_count = 0;
            auto consider = [&] (int u) {
                auto c = g.neighbours(u).intersection_count(p);
                if (best == -1 || c > best_count) {
                    best = u;
                    best_count = c;
                }
            };
            p.for_each(consider);
            x.for_each(consider);
            return best;
        }

        // Returns false when the visitor asked to stop.
        auto expand(VertexSet & p, VertexSet & x) -> bool
        {
            if (p.empty()) {
                if (x.empty() && ! current.empty())
                    return visitor(current);
                return true;
            }

            int pivot = choose_pivot(p, x);
            VertexSet branch = p;
            branch.subtract(g.neighbours(pivot));

            for (auto v = branch.next(0); v != VertexSet::npos; v = branch.next(v + 1)) {
                auto & row = g.neighbours(static_cast<int>(v));
                VertexSet new_p = p & row;
                VertexSet new_x = x & row;
                current.push_back(static_cast<int>(v));
                bool keep_going = expand(new_p, new_x);
                current.pop_back();
                if (! keep_going)
                    return false;
                p.reset(v);
                x.set(v);
            }
            return true;
        }
    };
}

auto cliquecol::visit_maximal_cliques(const Graph & g, const VertexSet & within, const CliqueVisitor & visitor) -> bool
{
    BronKerbosch bk{g, visitor, {}};
    VertexSet p = within;
    VertexSet x(static_cast<size_t>(g.size()));
    return bk.expand(p, x);
}

auto cliquecol::enumerate_maximal_cliques(const Graph & g, std::optional<size_t> max_count) -> CliqueSet
{
    CliqueSet result;
    visit_maximal_cliques(g, VertexSet::full(static_cast<size_t>(g.size())), [&] (span<const int> clique) {
        if (max_count && result.cliques.size() >= *max_count)
            throw CliqueOverflow(*max_count);
        vector<int> sorted(clique.begin(), clique.end());
        std::sort(sorted.begin(), sorted.end());
        result.max_size = std::max(result.max_size, sorted.size());
        if (sorted.size() == 1)
            ++result.singleton_count;
        result.cliques.push_back(std::move(sorted));
        return true;
    });
    std::sort(result.cliques.begin(), result.cliques.end());
    result.count = result.cliques.size();
    return result;
}

auto cliquecol::common_neighbours(const Graph & g, span<const int> vertices) -> VertexSet
{
    auto n = static_cast<size_t>(g.size());
    VertexSet result = VertexSet::full(n);
    for (int v : vertices)
        result &= g.neighbours(v);
    for (int v : vertices)
        result.reset(static_cast<size_t>(v));
    return result;
}

auto cliquecol::is_clique(const Graph & g, span<const int> vertices) -> bool
{
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (! g.adjacent(vertices[i], vertices[j]))
                return false;
    return true;
}

auto cliquecol::is_maximal_clique(const Graph & g, span<const int> vertices) -> bool
{
    return ! vertices.empty() && is_clique(g, vertices) && common_neighbours(g, vertices).empty();
}

auto cliquecol::count_cliques_within(const Graph & g, const VertexSet & candidates, int r) -> uint64_t
{
    if (r <= 0)
        return 1;
    if (r == 1)
        return candidates.count();

    uint64_t total = 0;
    VertexSet remaining = candidates;
    for (auto v = remaining.next(0); v != VertexSet::npos; v = remaining.next(v + 1)) {
        remaining.reset(v);
        VertexSet next = remaining & g.neighbours(static_cast<int>(v));
        if (r == 2)
            total += next.count();
        else if (next.count() >= static_cast<size_t>(r - 1))
            total += count_cliques_within(g, next, r - 1);
    }
    return total;
}

auto cliquecol::edge_triangle_stats(const Graph & g) -> EdgeStats
{
    EdgeStats stats;
    stats.per_edge_triangles.reserve(g.edge_count());
    uint64_t sum = 0;
    for (auto [u, v] : g.edges()) {
        uint64_t t = g.neighbours(u).intersection_count(g.neighbours(v));
        stats.per_edge_triangles.push_back({u, v, t});
        stats.max_triangles = std::max(stats.max_triangles, t);
        if (t == 0)
            ++stats.edges_not_in_triangle;
        sum += t;
    }
    stats.triangle_total = sum / 3;
    return stats;
}

auto cliquecol::k1_cliques_per_edge(const Graph & g, int k) -> EdgeStats
{
    if (k < 2)
        throw ParameterError("k must be at least 2");

    EdgeStats stats = edge_triangle_stats(g);
    stats.k = k;
    stats.per_edge_k1_cliques.reserve(stats.per_edge_triangles.size());
    for (auto & e : stats.per_edge_triangles) {
        VertexSet common = g.neighbours(e.u) & g.neighbours(e.v);
        // a (k+1)-clique through uv is uv plus a (k-1)-clique among the common neighbours
        uint64_t c = count_cliques_within(g, common, k - 1);
        stats.per_edge_k1_cliques.push_back({e.u, e.v, c});
        stats.max_k1_cliques = std::max(stats.max_k1_cliques, c);
    }
    return stats;
}

auto cliquecol::count_k_cliques_in_subset(const Graph & g, span<const int> s, int k) -> uint64_t
{
    if (k < 2)
        throw ParameterError("k must be at least 2");
    for (int v : s)
        if (v < 0 || v >= g.size())
            throw ParameterError("subset vertex out of range");
    return count_cliques_within(g, VertexSet::of(static_cast<size_t>(g.size()), s), k);
}

auto cliquecol::dense_set_ratio(const Graph & g, span<const int> w) -> Rational
{
    VertexSet members = VertexSet::of(static_cast<size_t>(g.size()), w);
    auto size = members.count();
    if (size < 3)
        throw ParameterError("a dense-set ratio needs at least three vertices");
    auto edges = static_cast<std::int64_t>(count_cliques_within(g, members, 2));
    return Rational{edges, static_cast<std::int64_t>(size) - 2};
}
