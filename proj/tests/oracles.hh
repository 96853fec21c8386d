#ifndef CLIQUECOL_GUARD_TESTS_ORACLES_HH
#define CLIQUECOL_GUARD_TESTS_ORACLES_HH 1

// Brute-force reference implementations. They share nothing with the library
// beyond the Graph adjacency query, and are only usable on tiny graphs.

#include <cliquecol/graph.hh>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle
{
    using cliquecol::Graph;
    using Mask = std::uint64_t;

    inline auto members(Mask m) -> std::vector<int>
    {
        std::vector<int> out;
        for (int v = 0; m; ++v, m >>= 1)
            if (m & 1)
                out.push_back(v);
        return out;
    }

    inline auto is_clique(const Graph & g, Mask m) -> bool
    {
        auto vs = members(m);
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (! g.adjacent(vs[i], vs[j]))
                    return false;
        return true;
    }

    /// Every clique that no single vertex extends, by filtering all 2^n subsets.
    inline auto maximal_cliques(const Graph & g) -> std::vector<Mask>
    {
        int n = g.size();
        std::vector<Mask> out;
        for (Mask m = 1; m < (Mask{ 1 } << n); ++m) {
            if (! is_clique(g, m))
                continue;
            bool maximal = true;
            for (int v = 0; v < n && maximal; ++v)
                if (! (m >> v & 1) && is_clique(g, m | Mask{ 1 } << v))
                    maximal = false;
            if (maximal)
                out.push_back(m);
        }
        return out;
    }

    inline auto nontrivial_maximal_cliques(const Graph & g) -> std::vector<Mask>
    {
        auto all = maximal_cliques(g);
        std::erase_if(all, [] (Mask m) { return std::popcount(m) < 2; });
        return all;
    }

    inline auto monochromatic(const std::vector<int> & colour, Mask m) -> bool
    {
        auto vs = members(m);
        return std::all_of(vs.begin(), vs.end(), [&] (int v) { return colour[static_cast<std::size_t>(v)] == colour[static_cast<std::size_t>(vs[0])]; });
    }

    inline auto is_clique_colouring(const Graph & g, const std::vector<int> & colour) -> bool
    {
        for (Mask m : nontrivial_maximal_cliques(g))
            if (monochromatic(colour, m))
                return false;
        return true;
    }

    /// Tries every assignment in {0..k-1}^n for k = 1, 2, ...
    template <typename Accept_>
    auto smallest_palette(int n, Accept_ accept) -> int
    {
        if (n == 0)
            return 0;
        for (int k = 1; k <= n; ++k) {
            std::vector<int> colour(static_cast<std::size_t>(n), 0);
            while (true) {
                if (accept(colour))
                    return k;
                int i = 0;
                while (i < n && ++colour[static_cast<std::size_t>(i)] == k)
                    colour[static_cast<std::size_t>(i++)] = 0;
                if (i == n)
                    break;
            }
        }
        return n;
    }

    inline auto clique_chromatic(const Graph & g) -> int
    {
        auto hyper = nontrivial_maximal_cliques(g);
        return smallest_palette(g.size(), [&] (const std::vector<int> & colour) {
            return std::none_of(hyper.begin(), hyper.end(), [&] (Mask m) { return monochromatic(colour, m); });
        });
    }

    inline auto chromatic(const Graph & g) -> int
    {
        auto edges = g.edges();
        return smallest_palette(g.size(), [&] (const std::vector<int> & colour) {
            return std::none_of(edges.begin(), edges.end(), [&] (auto e) {
                return colour[static_cast<std::size_t>(e.first)] == colour[static_cast<std::size_t>(e.second)];
            });
        });
    }

    /// Largest subset containing no maximal clique of size >= 2.
    inline auto mcf(const Graph & g) -> int
    {
        auto hyper = nontrivial_maximal_cliques(g);
        int best = 0;
        for (Mask s = 0; s < (Mask{ 1 } << g.size()); ++s)
            if (std::none_of(hyper.begin(), hyper.end(), [&] (Mask m) { return (m & s) == m; }))
                best = std::max(best, std::popcount(s));
        return best;
    }

    inline auto independence_number(const Graph & g) -> int
    {
        int best = 0;
        for (Mask s = 0; s < (Mask{ 1 } << g.size()); ++s) {
            auto vs = members(s);
            bool independent = true;
            for (std::size_t i = 0; i < vs.size() && independent; ++i)
                for (std::size_t j = i + 1; j < vs.size() && independent; ++j)
                    independent = ! g.adjacent(vs[i], vs[j]);
            if (independent)
                best = std::max(best, static_cast<int>(vs.size()));
        }
        return best;
    }

    /// Vertices in some triangle, by scanning all triples.
    inline auto triangle_vertex_count(const Graph & g) -> int
    {
        int n = g.size();
        std::vector<bool> in(static_cast<std::size_t>(n), false);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c))
                        in[static_cast<std::size_t>(a)] = in[static_cast<std::size_t>(b)] = in[static_cast<std::size_t>(c)] = true;
        return static_cast<int>(std::count(in.begin(), in.end(), true));
    }

    inline auto triangles_on_edge(const Graph & g, int u, int v) -> std::uint64_t
    {
        std::uint64_t count = 0;
        for (int w = 0; w < g.size(); ++w)
            if (w != u && w != v && g.adjacent(u, w) && g.adjacent(v, w))
                ++count;
        return count;
    }

    /// k-subsets of s that are cliques, by recursive enumeration of all k-subsets.
    inline auto k_cliques_in(const Graph & g, const std::vector<int> & s, int k) -> std::uint64_t
    {
        std::uint64_t count = 0;
        std::vector<int> chosen;
        auto rec = [&] (auto & self, std::size_t from) -> void {
            if (static_cast<int>(chosen.size()) == k) {
                for (std::size_t i = 0; i < chosen.size(); ++i)
                    for (std::size_t j = i + 1; j < chosen.size(); ++j)
                        if (! g.adjacent(chosen[i], chosen[j]))
                            return;
                ++count;
                return;
            }
            for (std::size_t i = from; i < s.size(); ++i) {
                chosen.push_back(s[i]);
                self(self, i + 1);
                chosen.pop_back();
            }
        };
        rec(rec, 0);
        return count;
    }
}

namespace gen
{
    using cliquecol::Graph;

    /// Independent of the library sampler: a std::mt19937_64 stream.
    inline auto random_graph(int n, double p, std::uint64_t seed) -> Graph
    {
        std::mt19937_64 rng(seed);
        std::bernoulli_distribution coin(p);
        std::vector<cliquecol::Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng))
                    edges.emplace_back(i, j);
        return Graph::from_edges(n, edges);
    }

    inline auto is_triangle_free(const Graph & g) -> bool
    {
        return oracle::triangle_vertex_count(g) == 0;
    }

    /// Rejection-sampled triangle-free graph.
    inline auto triangle_free_graph(int n, double p, std::mt19937_64 & rng) -> Graph
    {
        while (true) {
            auto g = random_graph(n, p, rng());
            if (is_triangle_free(g))
                return g;
        }
    }
}

#endif
