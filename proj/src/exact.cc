#include <cliquecol/errors.hh>
#include <cliquecol/exact.hh>

#include <algorithm>
#include <bit>

using namespace cliquecol;

using std::size_t;
using std::uint64_t;
using std::vector;

namespace
{
    using Mask = uint64_t;
    using Clock = std::chrono::steady_clock;

    auto bit(int v) -> Mask { return Mask{1} << v; }

    auto popcount(Mask m) -> int { return std::popcount(m); }

    auto check_size(const Graph & g, const Budget & budget, const char * what) -> void
    {
        int limit = std::min(budget.max_vertices, exact_vertex_limit);
        if (g.size() > limit)
            throw ParameterError(std::string(what) + " is limited to " + std::to_string(limit)
                + " vertices, graph has " + std::to_string(g.size()));
    }

    struct Meter
    {
        const Budget & budget;
        Clock::time_point start = Clock::now();
        uint64_t nodes = 0;

        auto exhausted() -> bool
        {
            ++nodes;
            if (budget.node_limit && nodes > *budget.node_limit)
                return true;
            if (budget.time_limit && (nodes & 1023) == 1)
                return Clock::now() - start > *budget.time_limit;
            return false;
        }
    };

    struct OutOfBudget
    {
    };

    auto as_mask(std::span<const int> vertices) -> Mask
    {
        Mask m = 0;
        for (int v : vertices)
            m |= bit(v);
        return m;
    }

    /// Colourings of a hypergraph on at most 64 vertices in which no hyperedge is monochromatic.
    class HypergraphColourer
    {
        private:
            int _n;
            vector<Mask> _adjacent;            // hyperedges of size two
            vector<Mask> _large;               // hyperedges of size three or more
            vector<vector<int>> _large_of;     // indices into _large per vertex
            Meter & _meter;

            struct State
            {
                vector<int> colour;
                vector<Mask> domain;
                vector<Mask> with_colour;
                Mask coloured = 0;
                int max_used = -1;
            };

            int _k = 0;

            auto colours_in(const State & s, Mask h, int & only) const -> int
            {
                int seen = 0;
                for (int c = 0; c <= s.max_used && seen < 2; ++c)
                    if (h & s.with_colour[static_cast<size_t>(c)]) {
                        only = c;
                        ++seen;
                    }
                return seen;
            }

            auto assign(State & s, int v, int c) const -> bool
            {
                vector<int> pending{v};
                vector<int> pending_colour{c};
                while (! pending.empty()) {
                    int u = pending.back(), uc = pending_colour.back();
                    pending.pop_back();
                    pending_colour.pop_back();
                    if (s.colour[static_cast<size_t>(u)] != -1) {
                        if (s.colour[static_cast<size_t>(u)] != uc)
                            return false;
                        continue;
                    }
                    if (! (s.domain[static_cast<size_t>(u)] & bit(uc)))
                        return false;

                    s.colour[static_cast<size_t>(u)] = uc;
                    s.domain[static_cast<size_t>(u)] = bit(uc);
                    s.with_colour[static_cast<size_t>(uc)] |= bit(u);
                    s.coloured |= bit(u);
                    s.max_used = std::max(s.max_used, uc);

                    auto restrict = [&] (int w, int forbidden) -> bool {
                        auto & d = s.domain[static_cast<size_t>(w)];
                        d &= ~bit(forbidden);
                        if (! d)
                            return false;
                        if (popcount(d) == 1) {
                            pending.push_back(w);
                            pending_colour.push_back(std::countr_zero(d));
                        }
                        return true;
                    };

                    for (Mask m = _adjacent[static_cast<size_t>(u)] & ~s.coloured; m; m &= m - 1)
                        if (! restrict(std::countr_zero(m), uc))
                            return false;

                    for (int h : _large_of[static_cast<size_t>(u)]) {
                        Mask edge = _large[static_cast<size_t>(h)];
                        int only = -1;
                        if (colours_in(s, edge, only) >= 2)
                            continue;
                        Mask open = edge & ~s.coloured;
                        if (! open)
                            return false;
                        if (popcount(open) == 1 && ! restrict(std::countr_zero(open), only))
                            return false;
                    }
                }
                return true;
            }

            auto unsatisfied_count(const State & s, int v) const -> int
            {
                int count = popcount(_adjacent[static_cast<size_t>(v)]);
                for (int h : _large_of[static_cast<size_t>(v)]) {
                    int only = -1;
                    if (colours_in(s, _large[static_cast<size_t>(h)], only) < 2)
                        ++count;
                }
                return count;
            }

            auto search(State & s, vector<int> & solution) -> bool
            {
                if (_meter.exhausted())
                    throw OutOfBudget{};

                int branch = -1, best_score = -1;
                for (int v = 0; v < _n; ++v)
                    if (s.colour[static_cast<size_t>(v)] == -1) {
                        int score = unsatisfied_count(s, v);
                        if (score > best_score) {
                            best_score = score;
                            branch = v;
                        }
                    }
                if (branch == -1) {
                    solution = s.colour;
                    return true;
                }

                int top = std::min(_k - 1, s.max_used + 1);
                for (int c = 0; c <= top; ++c) {
                    if (! (s.domain[static_cast<size_t>(branch)] & bit(c)))
                        continue;
                    State child = s;
                    if (assign(child, branch, c) && search(child, solution))
                        return true;
                }
                return false;
            }

        public:
            HypergraphColourer(int n, const vector<Mask> & hyperedges, Meter & meter) :
                _n(n),
                _adjacent(static_cast<size_t>(n), 0),
                _large_of(static_cast<size_t>(n)),
                _meter(meter)
            {
                for (Mask h : hyperedges) {
                    if (popcount(h) == 2) {
                        int a = std::countr_zero(h), b = 63 - std::countl_zero(h);
                        _adjacent[static_cast<size_t>(a)] |= bit(b);
                        _adjacent[static_cast<size_t>(b)] |= bit(a);
                    }
                    else if (popcount(h) > 2) {
                        for (Mask m = h; m; m &= m - 1)
                            _large_of[static_cast<size_t>(std::countr_zero(m))].push_back(static_cast<int>(_large.size()));
                        _large.push_back(h);
                    }
                }
            }

            /// A colouring with at most k colours, or nothing if none exists. Throws OutOfBudget.
            auto colour_with(int k) -> std::optional<vector<int>>
            {
                _k = k;
                State s;
                s.colour.assign(static_cast<size_t>(_n), -1);
                s.domain.assign(static_cast<size_t>(_n), k >= 64 ? ~Mask{0} : bit(k) - 1);
                s.with_colour.assign(static_cast<size_t>(k), 0);
                vector<int> solution;
                if (_n == 0)
                    return solution;
                if (assign(s, 0, 0) && search(s, solution))
                    return solution;
                return std::nullopt;
            }
    };

    /// First-fit proper colouring in index order; an upper bound for both solvers.
    auto first_fit(const Graph & g) -> vector<int>
    {
        vector<int> colour(static_cast<size_t>(g.size()), -1);
        for (int v = 0; v < g.size(); ++v) {
            vector<bool> taken(static_cast<size_t>(g.size()) + 1, false);
            g.neighbours(v).for_each([&] (int u) {
                if (colour[static_cast<size_t>(u)] >= 0)
                    taken[static_cast<size_t>(colour[static_cast<size_t>(u)])] = true;
            });
            int c = 0;
            while (taken[static_cast<size_t>(c)])
                ++c;
            colour[static_cast<size_t>(v)] = c;
        }
        return colour;
    }

    auto solve_colouring(const Graph & g, const vector<Mask> & hyperedges, int lower, const Budget & budget,
            const char * what, const std::string & method) -> ExactResult
    {
        auto fallback = Colouring::from(first_fit(g), method);
        int upper = fallback.palette;
        Meter meter{budget};
        HypergraphColourer colourer(g.size(), hyperedges, meter);

        for (int k = lower; k < upper; ++k) {
            std::optional<vector<int>> found;
            try {
                found = colourer.colour_with(k);
            }
            catch (const OutOfBudget &) {
                throw BudgetExhausted(what, k, upper);
            }
            if (found)
                return ExactResult{k, Colouring::from(std::move(*found), method), meter.nodes};
        }
        return ExactResult{upper, std::move(fallback), meter.nodes};
    }

    /// Minimum set meeting every hyperedge, by branching on the unhit hyperedge
    /// with fewest open vertices, bounded by a greedy packing of disjoint unhit hyperedges.
    class HittingSet
    {
        private:
            vector<Mask> _edges;
            Meter & _meter;
            Mask _best = 0;
            int _best_size = 0;

            auto search(Mask chosen, Mask forbidden) -> void
            {
                if (_meter.exhausted())
                    throw OutOfBudget{};

                int size = popcount(chosen);
                const Mask * pick = nullptr;
                int pick_open = 65;
                int packing = 0;
                Mask packed = 0;
                for (auto & e : _edges) {
                    if (e & chosen)
                        continue;
                    Mask open = e & ~forbidden;
                    int c = popcount(open);
                    if (c == 0)
                        return;
                    if (c < pick_open) {
                        pick_open = c;
                        pick = &e;
                    }
                    if (! (open & packed)) {
                        packed |= open;
                        ++packing;
                    }
                }
                if (! pick) {
                    if (size < _best_size) {
                        _best_size = size;
                        _best = chosen;
                    }
                    return;
                }
                if (size + packing >= _best_size)
                    return;

                for (Mask open = *pick & ~forbidden; open; open &= open - 1) {
                    Mask v = open & -open;
                    search(chosen | v, forbidden);
                    forbidden |= v;
                }
            }

        public:
            HittingSet(vector<Mask> edges, Meter & meter) :
                _edges(std::move(edges)),
                _meter(meter)
            {
                // greedy start: repeatedly take the vertex meeting most unhit edges
                Mask chosen = 0;
                while (true) {
                    vector<int> hits(64, 0);
                    bool any = false;
                    for (auto e : _edges)
                        if (! (e & chosen)) {
                            any = true;
                            for (Mask m = e; m; m &= m - 1)
                                ++hits[static_cast<size_t>(std::countr_zero(m))];
                        }
                    if (! any)
                        break;
                    auto best = std::max_element(hits.begin(), hits.end()) - hits.begin();
                    chosen |= bit(static_cast<int>(best));
                }
                _best = chosen;
                _best_size = popcount(chosen);
            }

            auto best() const -> Mask { return _best; }
            auto best_size() const -> int { return _best_size; }

            /// Lower bound on the hitting set size from a disjoint packing.
            auto packing_bound() const -> int
            {
                int count = 0;
                Mask used = 0;
                for (auto e : _edges)
                    if (! (e & used)) {
                        used |= e;
                        ++count;
                    }
                return count;
            }

            auto solve() -> void
            {
                search(0, 0);
            }
    };

    auto clique_hyperedges(const Graph & g, const Budget & budget) -> vector<Mask>
    {
        vector<Mask> result;
        for (auto & clique : enumerate_maximal_cliques(g, budget.max_cliques).cliques)
            if (clique.size() >= 2)
                result.push_back(as_mask(clique));
        return result;
    }

    auto members_of(Mask m) -> vector<int>
    {
        vector<int> result;
        for (; m; m &= m - 1)
            result.push_back(std::countr_zero(m));
        return result;
    }

    auto all_vertices(int n) -> Mask
    {
        return n >= 64 ? ~Mask{0} : bit(n) - 1;
    }
}

auto cliquecol::exact_clique_chromatic(const Graph & g, const Budget & budget) -> ExactResult
{
    check_size(g, budget, "exact clique chromatic number");
    auto hyperedges = clique_hyperedges(g, budget);
    if (hyperedges.empty()) {
        int k = g.size() == 0 ? 0 : 1;
        return ExactResult{k, Colouring::from(vector<int>(static_cast<size_t>(g.size()), 0), "exact"), 0};
    }
    return solve_colouring(g, hyperedges, 2, budget, "exact clique chromatic number", "exact");
}

auto cliquecol::exact_chromatic(const Graph & g, const Budget & budget) -> ExactResult
{
    check_size(g, budget, "exact chromatic number");
    if (g.edge_count() == 0) {
        int k = g.size() == 0 ? 0 : 1;
        return ExactResult{k, Colouring::from(vector<int>(static_cast<size_t>(g.size()), 0), "chromatic"), 0};
    }
    vector<Mask> edges;
    for (auto [u, v] : g.edges())
        edges.push_back(bit(u) | bit(v));
    int lower = static_cast<int>(enumerate_maximal_cliques(g, budget.max_cliques).max_size);
    return solve_colouring(g, edges, lower, budget, "exact chromatic number", "chromatic");
}

auto cliquecol::exact_mcf(const Graph & g, const Budget & budget) -> McfResult
{
    check_size(g, budget, "exact mcf");
    int n = g.size();
    Meter meter{budget};
    HittingSet solver(clique_hyperedges(g, budget), meter);
    try {
        solver.solve();
    }
    catch (const OutOfBudget &) {
        throw BudgetExhausted("exact mcf", n - solver.best_size(), n - solver.packing_bound());
    }
    McfResult result;
    result.set = members_of(all_vertices(n) & ~solver.best());
    result.size = static_cast<int>(result.set.size());
    result.chi_lower = result.size == 0 ? 0 : (n + result.size - 1) / result.size;
    result.nodes = meter.nodes;
    return result;
}

auto cliquecol::independence_number(const Graph & g, const Budget & budget) -> IndependentSet
{
    check_size(g, budget, "independence number");
    int n = g.size();
    vector<Mask> edges;
    for (auto [u, v] : g.edges())
        edges.push_back(bit(u) | bit(v));
    Meter meter{budget};
    HittingSet solver(std::move(edges), meter);
    try {
        solver.solve();
    }
    catch (const OutOfBudget &) {
        throw BudgetExhausted("independence number", n - solver.best_size(), n - solver.packing_bound());
    }
    IndependentSet result;
    result.set = members_of(all_vertices(n) & ~solver.best());
    result.size = static_cast<int>(result.set.size());
    return result;
}

auto cliquecol::triangle_vertices(const Graph & g) -> vector<int>
{
    vector<int> result;
    for (int v = 0; v < g.size(); ++v) {
        bool found = false;
        auto & row = g.neighbours(v);
        row.for_each([&] (int u) {
            if (! found && g.neighbours(u).intersects(row))
                found = true;
        });
        if (found)
            result.push_back(v);
    }
    return result;
}

auto cliquecol::sparse_lower_bound(const Graph & g, const Budget & budget) -> SparseBound
{
    SparseBound result;
    result.triangle_vertex_count = static_cast<int>(triangle_vertices(g).size());
    result.alpha = independence_number(g, budget).size;
    int free = g.size() - result.triangle_vertex_count;
    if (free > 0)
        result.bound = (free + result.alpha - 1) / result.alpha;
    return result;
}

auto cliquecol::is_maximal_clique_free(const Graph & g, const vector<int> & set) -> bool
{
    VertexSet members = VertexSet::of(static_cast<size_t>(g.size()), set);
    bool ok = true;
    visit_maximal_cliques(g, members, [&] (std::span<const int> clique) {
        if (clique.size() >= 2 && common_neighbours(g, clique).empty()) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}
