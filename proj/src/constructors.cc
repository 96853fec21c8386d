#include <cliquecol/cliques.hh>
#include <cliquecol/constructors.hh>
#include <cliquecol/errors.hh>
#include <cliquecol/exact.hh>
#include <cliquecol/rng.hh>

#include <cmath>
#include <limits>

using namespace cliquecol;

using std::size_t;
using std::span;
using std::vector;

auto cliquecol::greedy_mis(const Graph & g, span<const int> order) -> vector<int>
{
    auto n = static_cast<size_t>(g.size());
    if (order.size() != n)
        throw ParameterError("order must be a permutation of the vertices");
    VertexSet chosen(n), blocked(n);
    vector<int> result;
    for (int v : order) {
        if (v < 0 || static_cast<size_t>(v) >= n)
            throw ParameterError("order contains an out-of-range vertex");
        if (blocked.test(static_cast<size_t>(v)) || chosen.test(static_cast<size_t>(v)))
            continue;
        chosen.set(static_cast<size_t>(v));
        blocked |= g.neighbours(v);
        result.push_back(v);
    }
    return result;
}

auto cliquecol::dominating_set_colouring(const Graph & g, span<const int> a) -> Colouring
{
    auto n = static_cast<size_t>(g.size());
    VertexSet in_a(n), dominated(n);
    for (int v : a) {
        if (v < 0 || static_cast<size_t>(v) >= n)
            throw ParameterError("dominating set vertex out of range");
        in_a.set(static_cast<size_t>(v));
        dominated |= g.neighbours(v);
    }
    dominated |= in_a;
    if (dominated.count() != n) {
        VertexSet missing = VertexSet::full(n);
        missing.subtract(dominated);
        throw ParameterError("vertex " + std::to_string(missing.next()) + " is not dominated");
    }

    vector<int> colour(n, -1);
    for (size_t i = 0; i < a.size(); ++i)
        g.neighbours(a[i]).for_each([&] (int u) {
            if (colour[static_cast<size_t>(u)] == -1)
                colour[static_cast<size_t>(u)] = static_cast<int>(i) + 1;
        });
    for (auto & c : colour)
        if (c == -1)
            c = 0;
    return Colouring::from(std::move(colour), "domset");
}

auto cliquecol::greedy_domset_colouring(const Graph & g, std::optional<std::uint64_t> order_seed) -> Colouring
{
    auto order = vertex_order(g.size(), order_seed);
    return dominating_set_colouring(g, greedy_mis(g, order));
}

auto TriFreeParams::check() const -> void
{
    if (! (eta > 0.0 && eta < 1.0 / std::sqrt(2.0)))
        throw ParameterError("eta must lie in (0, 1/sqrt(2))");
    if (! (beta > eta * eta / 2.0 && beta < 0.25))
        throw ParameterError("beta must lie in (eta^2/2, 1/4)");
    if (p && ! (*p > 0.0 && *p < 1.0))
        throw ParameterError("p must lie in (0, 1)");
}

auto cliquecol::trifree_schedule(int n, double p, const TriFreeParams & params) -> TriFreeSchedule
{
    if (! (p > 0.0 && p < 1.0))
        throw ParameterError("the faithful schedule needs 0 < p < 1");
    double scale = std::pow(p, -1.5);
    double log_n = std::log(std::max(n, 2));
    TriFreeSchedule s;
    s.target_size = std::max(1, static_cast<int>(std::ceil(params.eta * scale * std::sqrt(log_n))));
    s.large_phase_floor = scale * std::pow(static_cast<double>(n), params.beta);
    s.batch_size = std::max(1, static_cast<int>(std::ceil(scale)));
    s.singleton_floor = log_n * log_n;
    return s;
}

namespace
{
    auto edge_density(const Graph & g) -> double
    {
        double pairs = 0.5 * g.size() * (g.size() - 1.0);
        return pairs > 0 ? static_cast<double>(g.edge_count()) / pairs : 0.0;
    }

    /// Grows one class from `candidates` (in scan order), stopping at `limit` members.
    auto grow_class(const Graph & g, const vector<int> & candidates, size_t limit) -> VertexSet
    {
        VertexSet cls(static_cast<size_t>(g.size()));
        size_t size = 0;
        for (int w : candidates) {
            if (size >= limit)
                break;
            auto & row = g.neighbours(w);
            VertexSet touching = row & cls;
            bool ok = true;
            touching.for_each([&] (int a) {
                if (! ok)
                    return;
                if (g.neighbours(a).intersects(touching))
                    ok = false;     // w, a and a common member form a triangle
                else if (! g.neighbours(a).intersects(row))
                    ok = false;     // wa would be a maximal clique inside the class
            });
            if (ok) {
                cls.set(static_cast<size_t>(w));
                ++size;
            }
        }
        return cls;
    }
}

auto cliquecol::trifree_decomposition_colouring(const Graph & g, const TriFreeParams & params) -> Colouring
{
    params.check();
    auto n = static_cast<size_t>(g.size());
    vector<int> remaining = vertex_order(g.size(), params.order_seed);
    vector<int> colour(n, -1);
    int next_colour = 0;

    auto take = [&] (const VertexSet & cls) {
        cls.for_each([&] (int v) { colour[static_cast<size_t>(v)] = next_colour; });
        ++next_colour;
        std::erase_if(remaining, [&] (int v) { return cls.test(static_cast<size_t>(v)); });
    };

    if (! params.paper_faithful) {
        while (! remaining.empty())
            take(grow_class(g, remaining, std::numeric_limits<size_t>::max()));
        return Colouring::from(std::move(colour), "trifree");
    }

    auto schedule = trifree_schedule(g.size(), params.p.value_or(edge_density(g)), params);

    while (! remaining.empty() && static_cast<double>(remaining.size()) >= schedule.large_phase_floor)
        take(grow_class(g, remaining, static_cast<size_t>(schedule.target_size)));

    while (! remaining.empty() && static_cast<double>(remaining.size()) >= schedule.singleton_floor) {
        auto s = std::min(static_cast<size_t>(schedule.batch_size), remaining.size());
        vector<int> batch(remaining.begin(), remaining.begin() + static_cast<std::ptrdiff_t>(s));
        take(grow_class(g, batch, std::numeric_limits<size_t>::max()));
    }

    for (int v : remaining)
        colour[static_cast<size_t>(v)] = next_colour++;
    return Colouring::from(std::move(colour), "trifree-faithful");
}

auto DenseParams::from(int n, double p, std::optional<std::uint64_t> order_seed) -> DenseParams
{
    if (! (p > 0.0 && p < 1.0))
        throw ParameterError("the dense colouring needs 0 < p < 1");
    DenseParams params;
    params.p = p;
    params.order_seed = order_seed;
    if (n < 3)
        return params;
    double log_n = std::log(static_cast<double>(n));
    // the base 1/p cancels in the ratio
    params.gamma = 2.0 * std::log(log_n) / log_n;
    double stop = (0.5 + params.gamma) * log_n / std::log(1.0 / (1.0 - p));
    params.k_stop = std::max(1, static_cast<int>(std::ceil(stop)));
    return params;
}

auto DenseParams::estimated(const Graph & g, std::optional<std::uint64_t> order_seed) -> DenseParams
{
    return from(g.size(), edge_density(g), order_seed);
}

auto cliquecol::dense_two_phase_colouring(const Graph & g, const DenseParams & params) -> DenseColouring
{
    auto n = static_cast<size_t>(g.size());
    if (params.k_stop < 1)
        throw ParameterError("k_stop must be at least 1");

    vector<int> independent;
    VertexSet blocked(n);
    for (int v : vertex_order(g.size(), params.order_seed)) {
        if (independent.size() == static_cast<size_t>(params.k_stop))
            break;
        if (blocked.test(static_cast<size_t>(v)))
            continue;
        independent.push_back(v);
        blocked |= g.neighbours(v);
        blocked.set(static_cast<size_t>(v));
    }

    vector<int> colour(n, -1);
    for (size_t i = 0; i < independent.size(); ++i)
        g.neighbours(independent[i]).for_each([&] (int u) {
            if (colour[static_cast<size_t>(u)] == -1)
                colour[static_cast<size_t>(u)] = static_cast<int>(i) + 1;
        });
    for (int v : independent)
        if (colour[static_cast<size_t>(v)] == -1)
            colour[static_cast<size_t>(v)] = 0;

    vector<int> leftover;
    for (size_t v = 0; v < n; ++v)
        if (colour[v] == -1)
            leftover.push_back(static_cast<int>(v));

    DenseColouring result;
    result.independent_size = static_cast<int>(independent.size());
    result.leftover = static_cast<int>(leftover.size());

    int extra = static_cast<int>(independent.size()) + 1;
    VertexSet rest = VertexSet::of(n, leftover);
    bool rest_independent = std::none_of(leftover.begin(), leftover.end(),
        [&] (int v) { return g.neighbours(v).intersects(rest); });
    for (int v : leftover)
        colour[static_cast<size_t>(v)] = rest_independent ? 0 : extra;

    result.colouring = Colouring::from(colour, "dense");
    if (! rest_independent && ! validate(g, result.colouring).valid) {
        auto sub = greedy_domset_colouring(g.induced(leftover));
        for (size_t i = 0; i < leftover.size(); ++i)
            colour[static_cast<size_t>(leftover[i])] = extra + sub.assignment[i];
        result.colouring = Colouring::from(std::move(colour), "dense");
        result.fallback_used = true;
    }
    return result;
}

auto cliquecol::portfolio_colouring(const Graph & g, std::optional<double> p_hint, std::optional<std::uint64_t> seed) -> Colouring
{
    vector<Colouring> candidates;
    candidates.push_back(greedy_domset_colouring(g, seed));
    TriFreeParams tri;
    tri.order_seed = seed;
    candidates.push_back(trifree_decomposition_colouring(g, tri));
    if (p_hint && *p_hint >= portfolio_dense_threshold && *p_hint < 1.0)
        candidates.push_back(dense_two_phase_colouring(g, DenseParams::from(g.size(), *p_hint, seed)).colouring);

    const Colouring * best = nullptr;
    for (auto & c : candidates)
        if ((! best || c.palette < best->palette) && validate(g, c).valid)
            best = &c;
    if (! best)
        throw std::logic_error("no constructor produced a valid colouring");

    Colouring winner = *best;
    winner.method = "portfolio:" + winner.method;
    return winner;
}
