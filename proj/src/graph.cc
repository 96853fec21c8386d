#include <cliquecol/errors.hh>
#include <cliquecol/graph.hh>
#include <cliquecol/rng.hh>

#include <cmath>
#include <fstream>
#include <sstream>

using namespace cliquecol;

using std::size_t;
using std::string;
using std::string_view;
using std::vector;

Graph::Graph(vector<VertexSet> && rows, size_t edges) :
    _rows(std::move(rows)),
    _edges(edges)
{
}

auto Graph::from_edges(int n, std::span<const Edge> edges) -> Graph
{
    if (n < 0)
        throw ParameterError("vertex count must be non-negative");
    vector<VertexSet> rows(static_cast<size_t>(n), VertexSet(static_cast<size_t>(n)));
    size_t m = 0;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParameterError("edge endpoint out of range");
        if (u == v)
            throw ParameterError("self-loop on vertex " + std::to_string(u));
        auto & ru = rows[static_cast<size_t>(u)];
        if (! ru.test(static_cast<size_t>(v))) {
            ru.set(static_cast<size_t>(v));
            rows[static_cast<size_t>(v)].set(static_cast<size_t>(u));
            ++m;
        }
    }
    return Graph(std::move(rows), m);
}

auto Graph::edgeless(int n) -> Graph
{
    return from_edges(n, {});
}

auto Graph::complete(int n) -> Graph
{
    vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return from_edges(n, edges);
}

auto Graph::cycle(int n) -> Graph
{
    if (n < 3)
        throw ParameterError("a cycle needs at least three vertices");
    vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        edges.emplace_back(u, (u + 1) % n);
    return from_edges(n, edges);
}

auto Graph::petersen() -> Graph
{
    vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
        edges.emplace_back(i, i + 5);                // spokes
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return from_edges(10, edges);
}

auto Graph::edges() const -> vector<Edge>
{
    vector<Edge> result;
    result.reserve(_edges);
    for (int u = 0; u < size(); ++u)
        for (auto v = neighbours(u).next(static_cast<size_t>(u) + 1); v != VertexSet::npos; v = neighbours(u).next(v + 1))
            result.emplace_back(u, static_cast<int>(v));
    return result;
}

auto Graph::induced(std::span<const int> vertices) const -> Graph
{
    auto k = vertices.size();
    vector<VertexSet> rows(k, VertexSet(k));
    size_t m = 0;
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j)
            if (adjacent(vertices[i], vertices[j])) {
                rows[i].set(j);
                rows[j].set(i);
                ++m;
            }
    return Graph(std::move(rows), m);
}

auto GnpParams::with_p(int n, double p, std::uint64_t seed) -> GnpParams
{
    if (n < 0)
        throw ParameterError("n must be non-negative");
    if (! (p >= 0.0 && p <= 1.0))
        throw ParameterError("edge probability must lie in [0, 1]");
    return GnpParams{n, p, seed, std::nullopt};
}

auto GnpParams::with_exponent(int n, double x, std::uint64_t seed) -> GnpParams
{
    if (n < 1)
        throw ParameterError("an exponent needs n >= 1");
    double p = std::pow(static_cast<double>(n), x - 1.0);
    if (! (p >= 0.0 && p <= 1.0))
        throw ParameterError("exponent gives an edge probability outside [0, 1]");
    return GnpParams{n, p, seed, x};
}

auto cliquecol::sample_gnp(const GnpParams & params) -> Graph
{
    if (params.n < 0)
        throw ParameterError("n must be non-negative");
    if (! (params.p >= 0.0 && params.p <= 1.0))
        throw ParameterError("edge probability must lie in [0, 1]");

    auto n = static_cast<size_t>(params.n);
    vector<VertexSet> rows(n, VertexSet(n));
    size_t m = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (unit_interval(keyed_hash(params.seed, {i, j})) < params.p) {
                rows[i].set(j);
                rows[j].set(i);
                ++m;
            }
    return Graph(std::move(rows), m);
}

namespace
{
    auto split_fields(string_view line) -> vector<string_view>
    {
        vector<string_view> fields;
        size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                ++i;
            size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
                ++j;
            if (j > i)
                fields.push_back(line.substr(i, j - i));
            i = j;
        }
        return fields;
    }

    auto parse_count(string_view s, size_t line_no, const char * what) -> long long
    {
        long long value = 0;
        if (s.empty())
            throw ParseError(line_no, string("missing ") + what);
        for (char c : s) {
            if (c < '0' || c > '9')
                throw ParseError(line_no, string("malformed ") + what + " '" + string(s) + "'");
            value = value * 10 + (c - '0');
            if (value > (1LL << 40))
                throw ParseError(line_no, string(what) + " too large");
        }
        return value;
    }
}

auto cliquecol::parse_edge_list(string_view text) -> Graph
{
    std::optional<long long> n;
    vector<Edge> edges;

    size_t line_no = 0;
    size_t pos = 0;
    while (pos < text.size()) {
        auto eol = text.find('\n', pos);
        auto line = text.substr(pos, eol == string_view::npos ? string_view::npos : eol - pos);
        pos = (eol == string_view::npos) ? text.size() : eol + 1;
        ++line_no;

        auto fields = split_fields(line);
        if (fields.empty())
            continue;
        if (fields[0] == "c")
            continue;
        if (fields[0] == "p") {
            if (n)
                throw ParseError(line_no, "duplicate header");
            if (fields.size() != 4 || fields[1] != "edge")
                throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
            n = parse_count(fields[2], line_no, "vertex count");
            parse_count(fields[3], line_no, "edge count");
            continue;
        }
        if (fields[0] == "e") {
            if (! n)
                throw ParseError(line_no, "edge line before header");
            if (fields.size() != 3)
                throw ParseError(line_no, "malformed edge line, expected 'e <u> <v>'");
            auto u = parse_count(fields[1], line_no, "vertex index");
            auto v = parse_count(fields[2], line_no, "vertex index");
            if (u < 1 || v < 1 || u > *n || v > *n)
                throw ParseError(line_no, "vertex index out of range");
            if (u == v)
                throw ParseError(line_no, "self-loop");
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
            continue;
        }
        throw ParseError(line_no, "unrecognised line '" + string(fields[0]) + "'");
    }

    if (! n)
        throw ParseError(line_no == 0 ? 1 : line_no, "missing 'p edge' header");
    return Graph::from_edges(static_cast<int>(*n), edges);
}

auto cliquecol::read_edge_list_file(const string & path) -> Graph
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_edge_list(buffer.str());
}

auto cliquecol::serialize_edge_list(const Graph & g) -> string
{
    string out = "p edge " + std::to_string(g.size()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges()) {
        out += "e ";
        out += std::to_string(u + 1);
        out += ' ';
        out += std::to_string(v + 1);
        out += '\n';
    }
    return out;
}

auto cliquecol::write_edge_list_file(const Graph & g, const string & path) -> void
{
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw std::runtime_error("cannot write " + path);
    out << serialize_edge_list(g);
    if (! out)
        throw std::runtime_error("write failed for " + path);
}
