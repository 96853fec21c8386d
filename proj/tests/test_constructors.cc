#include "oracles.hh"

#include <cliquecol/cliques.hh>
#include <cliquecol/constructors.hh>
#include <cliquecol/errors.hh>
#include <cliquecol/rng.hh>

#include <doctest.h>

#include <array>
#include <cmath>

using namespace cliquecol;

namespace
{
    auto star(int leaves) -> Graph
    {
        std::vector<Edge> e;
        for (int i = 1; i <= leaves; ++i)
            e.emplace_back(0, i);
        return Graph::from_edges(leaves + 1, e);
    }

    auto natural(int n) -> std::vector<int>
    {
        return vertex_order(n, std::nullopt);
    }

    auto check_domset_structure(const Graph & g, std::span<const int> a, const Colouring & c) -> void
    {
        CHECK(c.palette <= static_cast<int>(a.size()) + 1);
        VertexSet in_a = VertexSet::of(static_cast<std::size_t>(g.size()), a);
        for (int v = 0; v < g.size(); ++v) {
            int colour = c.assignment[static_cast<std::size_t>(v)];
            if (colour == 0) {
                CHECK(in_a.test(static_cast<std::size_t>(v)));
                for (int u = 0; u < g.size(); ++u)
                    if (u != v && c.assignment[static_cast<std::size_t>(u)] == 0)
                        CHECK(! g.adjacent(u, v));
            }
            else {
                int dominator = a[static_cast<std::size_t>(colour - 1)];
                CHECK(g.adjacent(dominator, v));
                CHECK(dominator != v);
            }
        }
    }
}

TEST_CASE("greedy maximal independent set")
{
    CHECK(greedy_mis(Graph::complete(6), natural(6)) == std::vector<int>{ 0 });
    CHECK(greedy_mis(Graph::cycle(5), natural(5)) == std::vector<int>{ 0, 2 });
    CHECK(greedy_mis(Graph::edgeless(5), natural(5)).size() == 5);

    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto g = gen::random_graph(40, 0.1 + 0.02 * static_cast<double>(seed), seed);
        auto mis = greedy_mis(g, seeded_permutation(40, seed));
        auto in = VertexSet::of(40, mis);
        for (int v : mis)
            CHECK(! g.neighbours(v).intersects(in));
        for (int v = 0; v < 40; ++v)
            if (! in.test(static_cast<std::size_t>(v)))
                CHECK(g.neighbours(v).intersects(in));
    }
}

TEST_CASE("dominating-set colouring on small graphs")
{
    auto s = dominating_set_colouring(star(5), std::vector<int>{ 0 });
    CHECK(s.palette == 2);
    CHECK(s.assignment == std::vector<int>{ 0, 1, 1, 1, 1, 1 });
    CHECK(validate(star(5), s).valid);

    auto k4 = dominating_set_colouring(Graph::complete(4), std::vector<int>{ 0 });
    CHECK(k4.assignment == std::vector<int>{ 0, 1, 1, 1 });
    CHECK(validate(Graph::complete(4), k4).valid);

    auto c5 = dominating_set_colouring(Graph::cycle(5), std::vector<int>{ 0, 2 });
    CHECK(c5.assignment == std::vector<int>{ 0, 1, 0, 2, 1 });
    CHECK(c5.palette == 3);
    CHECK(validate(Graph::cycle(5), c5).valid);
}

TEST_CASE("a non-dominating list is rejected with the undominated vertex named")
{
    try {
        dominating_set_colouring(Graph::cycle(6), std::vector<int>{ 0 });
        FAIL("expected an error");
    }
    catch (const ParameterError & e) {
        CHECK(std::string(e.what()).find("vertex 2") != std::string::npos);
    }
}

TEST_CASE("greedy dominating-set colouring")
{
    for (int n = 2; n <= 9; ++n)
        CHECK(greedy_domset_colouring(Graph::complete(n)).palette == 2);
    CHECK(greedy_domset_colouring(Graph::cycle(5)).palette == 3);
    auto edgeless = greedy_domset_colouring(Graph::edgeless(4));
    CHECK(edgeless.palette == 1);
    CHECK(edgeless.assignment == std::vector<int>{ 0, 0, 0, 0 });
}

TEST_CASE("triangle-free decomposition on small graphs")
{
    auto k4 = trifree_decomposition_colouring(Graph::complete(4));
    CHECK(k4.assignment == std::vector<int>{ 0, 0, 1, 1 });
    CHECK(validate(Graph::complete(4), k4).valid);

    // triangle-free input: every class is independent
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = gen::triangle_free_graph(25, 0.1, rng);
        auto c = trifree_decomposition_colouring(g);
        for (auto [u, v] : g.edges())
            CHECK(c.assignment[static_cast<std::size_t>(u)] != c.assignment[static_cast<std::size_t>(v)]);
    }
}

TEST_CASE("triangle-free classes hold no triangle and no maximal edge")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = gen::random_graph(60, 0.15 + 0.03 * static_cast<double>(seed % 10), seed);
        TriFreeParams params;
        params.paper_faithful = seed % 2;
        params.order_seed = seed;
        auto c = trifree_decomposition_colouring(g, params);
        for (auto & cls : c.classes()) {
            if (cls.size() < 2)
                continue;
            auto sub = g.induced(cls);
            CHECK(oracle::triangle_vertex_count(sub) == 0);
            for (auto [u, v] : sub.edges())
                CHECK(! is_maximal_clique(g, std::vector<int>{ cls[static_cast<std::size_t>(u)], cls[static_cast<std::size_t>(v)] }));
        }
        CHECK(validate(g, c).valid);
    }
}

TEST_CASE("triangle-free parameters")
{
    TriFreeParams p;
    CHECK_NOTHROW(p.check());
    p.eta = 0.8;
    CHECK_THROWS_AS(p.check(), ParameterError);
    p.eta = 0.5;
    p.beta = 0.1;   // below eta^2 / 2 = 0.125
    CHECK_THROWS_AS(p.check(), ParameterError);
    p.beta = 0.3;
    CHECK_THROWS_AS(p.check(), ParameterError);

    auto s = trifree_schedule(2000, 0.1, TriFreeParams{});
    CHECK(s.batch_size == static_cast<int>(std::ceil(std::pow(0.1, -1.5))));
    CHECK(s.target_size == static_cast<int>(std::ceil(0.5 * std::pow(0.1, -1.5) * std::sqrt(std::log(2000.0)))));
    CHECK(s.large_phase_floor == doctest::Approx(std::pow(0.1, -1.5) * std::pow(2000.0, 0.2)));
    CHECK(s.singleton_floor == doctest::Approx(std::pow(std::log(2000.0), 2)));
}

TEST_CASE("triangle-free palette at n = 2000, pn = n^0.6 stays within 4 p^(3/2) n / sqrt(ln n)")
{
    int n = 2000;
    auto params = GnpParams::with_exponent(n, 0.6, 42);
    auto g = sample_gnp(params);
    auto c = trifree_decomposition_colouring(g);
    CHECK(validate(g, c).valid);
    CHECK(c.palette <= 4.0 * std::pow(params.p, 1.5) * n / std::sqrt(std::log(n)));
}

TEST_CASE("dense parameters follow their formulas")
{
    auto d = DenseParams::from(10000, 0.5);
    double ln_n = std::log(10000.0);
    CHECK(d.gamma == doctest::Approx(2.0 * std::log(ln_n) / ln_n));
    CHECK(d.k_stop == static_cast<int>(std::ceil((0.5 + d.gamma) * ln_n / std::log(2.0))));
    CHECK(d.k_stop >= 1);
    CHECK_THROWS_AS(DenseParams::from(100, 0.0), ParameterError);
    CHECK_THROWS_AS(DenseParams::from(100, 1.0), ParameterError);
    CHECK(DenseParams::from(2, 0.5).k_stop == 1);
}

TEST_CASE("dense two-phase colouring on small graphs")
{
    for (int n = 2; n <= 8; ++n) {
        auto r = dense_two_phase_colouring(Graph::complete(n), DenseParams::from(n, 0.5));
        CHECK(r.colouring.palette == 2);
        CHECK(! r.fallback_used);
    }
    auto edgeless = dense_two_phase_colouring(Graph::edgeless(20), DenseParams::from(20, 0.3));
    CHECK(edgeless.colouring.palette == 1);
    CHECK_THROWS_AS(DenseParams::estimated(Graph::edgeless(20)), ParameterError);
}

TEST_CASE("dense two-phase colouring stays within k_stop + 2 or falls back validly")
{
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = sample_gnp(GnpParams::with_p(400, 0.5, seed));
        auto params = DenseParams::from(400, 0.5, seed);
        auto r = dense_two_phase_colouring(g, params);
        CHECK(validate(g, r.colouring).valid);
        if (! r.fallback_used)
            CHECK(r.colouring.palette <= params.k_stop + 2);
    }
}

TEST_CASE("portfolio colouring")
{
    auto k6 = portfolio_colouring(Graph::complete(6), std::nullopt, std::nullopt);
    CHECK(k6.palette == 2);
    CHECK(k6.method == "portfolio:domset");
    CHECK(portfolio_colouring(Graph::cycle(5), 0.5, std::nullopt).palette == 3);
    CHECK(portfolio_colouring(Graph::edgeless(4), std::nullopt, std::nullopt).palette == 1);
}

TEST_CASE("constructors are valid and deterministic on random graphs")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        int n = std::array{ 10, 30, 80 }[seed % 3];
        double p = std::array{ 0.01, 0.05, 0.2, 0.5, 0.9 }[seed % 5];
        auto g = sample_gnp(GnpParams::with_p(n, p, seed));

        auto domset = greedy_domset_colouring(g, seed);
        auto mis = greedy_mis(g, seeded_permutation(n, seed));
        check_domset_structure(g, mis, domset);
        CHECK(validate(g, domset).valid);

        auto tri = trifree_decomposition_colouring(g);
        CHECK(validate(g, tri).valid);
        auto dense = dense_two_phase_colouring(g, DenseParams::from(n, p)).colouring;
        CHECK(validate(g, dense).valid);
        auto port = portfolio_colouring(g, p, seed);
        CHECK(validate(g, port).valid);
        CHECK(port.palette <= domset.palette);

        CHECK(greedy_domset_colouring(g, seed).assignment == domset.assignment);
        CHECK(trifree_decomposition_colouring(g).assignment == tri.assignment);
    }
}
