#include "oracles.hh"

#include <cliquecol/errors.hh>
#include <cliquecol/graph.hh>
#include <cliquecol/rng.hh>

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <map>

using namespace cliquecol;

TEST_CASE("vertex set basics")
{
    VertexSet s(130);
    CHECK(s.empty());
    s.set(0);
    s.set(64);
    s.set(129);
    CHECK(s.count() == 3);
    CHECK(s.next() == 0);
    CHECK(s.next(1) == 64);
    CHECK(s.next(65) == 129);
    CHECK(s.next(130) == VertexSet::npos);
    CHECK(s.members() == std::vector<int>{ 0, 64, 129 });

    auto full = VertexSet::full(130);
    CHECK(full.count() == 130);
    CHECK(s.is_subset_of(full));
    full.subtract(s);
    CHECK(full.count() == 127);
    CHECK(! full.intersects(s));
    CHECK((full & s).empty());
}

TEST_CASE("named graphs")
{
    CHECK(Graph::complete(5).edge_count() == 10);
    CHECK(Graph::edgeless(4).edge_count() == 0);
    CHECK(Graph::cycle(7).edge_count() == 7);
    auto pet = Graph::petersen();
    CHECK(pet.size() == 10);
    CHECK(pet.edge_count() == 15);
    for (int v = 0; v < 10; ++v)
        CHECK(pet.degree(v) == 3);
    CHECK_THROWS_AS(Graph::cycle(2), ParameterError);
}

TEST_CASE("from_edges rejects loops and out-of-range endpoints")
{
    std::vector<Edge> loop{ { 1, 1 } }, far{ { 0, 3 } }, dup{ { 0, 1 }, { 1, 0 }, { 0, 1 } };
    CHECK_THROWS_AS(Graph::from_edges(3, loop), ParameterError);
    CHECK_THROWS_AS(Graph::from_edges(3, far), ParameterError);
    CHECK(Graph::from_edges(3, dup).edge_count() == 1);
}

TEST_CASE("adjacency invariants hold on random graphs")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = sample_gnp(GnpParams::with_p(37, 0.3, seed));
        std::size_t degree_sum = 0;
        for (int u = 0; u < g.size(); ++u) {
            CHECK(! g.adjacent(u, u));
            degree_sum += g.degree(u);
            for (int v = 0; v < g.size(); ++v)
                CHECK(g.adjacent(u, v) == g.adjacent(v, u));
        }
        CHECK(degree_sum == 2 * g.edge_count());
        CHECK(g.edges().size() == g.edge_count());
    }
}

TEST_CASE("sampling extremes")
{
    CHECK(sample_gnp(GnpParams::with_p(5, 0.0, 1)).edge_count() == 0);
    CHECK(sample_gnp(GnpParams::with_p(5, 1.0, 1)) == Graph::complete(5));
    CHECK(sample_gnp(GnpParams::with_p(0, 0.5, 1)).size() == 0);
    CHECK_THROWS_AS(GnpParams::with_p(5, 1.5, 1), ParameterError);
    CHECK_THROWS_AS(GnpParams::with_p(5, -0.1, 1), ParameterError);
    CHECK_THROWS_AS(GnpParams::with_exponent(5, 1.5, 1), ParameterError);
}

TEST_CASE("exponent parameterisation")
{
    auto params = GnpParams::with_exponent(1000, 0.5, 3);
    CHECK(params.p == doctest::Approx(std::pow(1000.0, -0.5)));
    REQUIRE(params.x);
    CHECK(*params.x == 0.5);
}

TEST_CASE("edge count of G(1000, 0.1) lies within 5 sigma of the binomial mean")
{
    for (std::uint64_t seed : { 1u, 2u, 3u }) {
        auto m = sample_gnp(GnpParams::with_p(1000, 0.1, seed)).edge_count();
        CHECK(m >= 48890);
        CHECK(m <= 51010);
    }
}

TEST_CASE("sampling is deterministic and each pair depends only on (seed, i, j)")
{
    auto a = sample_gnp(GnpParams::with_p(200, 0.2, 77));
    auto b = sample_gnp(GnpParams::with_p(200, 0.2, 77));
    CHECK(a == b);
    CHECK(serialize_edge_list(a) == serialize_edge_list(b));
    for (int i = 0; i < 200; i += 7)
        for (int j = i + 1; j < 200; j += 5)
            CHECK(a.adjacent(i, j) == (unit_interval(keyed_hash(77, { static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(j) })) < 0.2));
    // a smaller graph with the same seed is the induced subgraph on a prefix
    auto small = sample_gnp(GnpParams::with_p(50, 0.2, 77));
    std::vector<int> prefix(50);
    for (int i = 0; i < 50; ++i)
        prefix[static_cast<std::size_t>(i)] = i;
    CHECK(small == a.induced(prefix));
}

TEST_CASE("labelled graphs on 3 vertices at p = 1/2 are equiprobable")
{
    // 8 labelled graphs, each with probability 1/8; sigma = sqrt(N p (1-p))
    constexpr int samples = 20000;
    std::map<std::vector<Edge>, int> freq;
    for (int s = 0; s < samples; ++s)
        ++freq[sample_gnp(GnpParams::with_p(3, 0.5, static_cast<std::uint64_t>(s))).edges()];
    CHECK(freq.size() == 8);
    double mean = samples / 8.0, sigma = std::sqrt(samples * (1.0 / 8) * (7.0 / 8));
    for (auto & [edges, count] : freq)
        CHECK(std::abs(count - mean) <= 3 * sigma);
}

TEST_CASE("edge-list parsing")
{
    auto k3 = parse_edge_list("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(k3 == Graph::complete(3));
    auto two = parse_edge_list("p edge 2 0");
    CHECK(two.size() == 2);
    CHECK(two.edge_count() == 0);
    auto commented = parse_edge_list("c a comment\n\np edge 3 2\nc another\ne 1 2\ne 1 2\n");
    CHECK(commented.edge_count() == 1);
}

TEST_CASE("edge-list errors name the line")
{
    auto line_of = [] (const char * text) -> std::size_t {
        try {
            parse_edge_list(text);
        }
        catch (const ParseError & e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("p edge 3 1\ne 1 4\n") == 2);
    CHECK(line_of("p edge 3 1\ne 2 2\n") == 2);
    CHECK(line_of("e 1 2\n") == 1);
    CHECK(line_of("p edge x 1\n") == 1);
    CHECK(line_of("p edge 3 0\np edge 3 0\n") == 2);
    CHECK(line_of("p edge 3 1\nq 1 2\n") == 2);
    CHECK(line_of("c only a comment\n") != 0);
}

TEST_CASE("serialisation is canonical and round-trips")
{
    CHECK(serialize_edge_list(Graph::complete(3)) == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
    CHECK(serialize_edge_list(Graph::edgeless(2)) == "p edge 2 0\n");
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto g = gen::random_graph(50, 0.05 + 0.035 * static_cast<double>(seed), seed);
        CHECK(parse_edge_list(serialize_edge_list(g)) == g);
    }
}

TEST_CASE("file round trip")
{
    auto path = (std::filesystem::temp_directory_path() / "cliquecol_graph_roundtrip.txt").string();
    auto g = Graph::petersen();
    write_edge_list_file(g, path);
    CHECK(read_edge_list_file(path) == g);
    std::filesystem::remove(path);
}

TEST_CASE("seeded permutations")
{
    auto p = seeded_permutation(100, 5);
    auto sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < 100; ++i)
        CHECK(sorted[static_cast<std::size_t>(i)] == i);
    CHECK(p == seeded_permutation(100, 5));
    CHECK(p != seeded_permutation(100, 6));
    CHECK(vertex_order(4, std::nullopt) == std::vector<int>{ 0, 1, 2, 3 });
}
