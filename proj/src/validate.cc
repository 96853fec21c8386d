#include <cliquecol/colouring.hh>
#include <cliquecol/errors.hh>

#include <algorithm>
#include <map>

using namespace cliquecol;

using std::size_t;
using std::vector;

auto Colouring::from(vector<int> assignment, std::string method) -> Colouring
{
    Colouring c;
    c.method = std::move(method);
    vector<int> used = assignment;
    for (int colour : used)
        if (colour < 0)
            throw ParameterError("colours must be non-negative");
    std::sort(used.begin(), used.end());
    c.palette = static_cast<int>(std::unique(used.begin(), used.end()) - used.begin());
    c.assignment = std::move(assignment);
    return c;
}

auto Colouring::classes() const -> vector<vector<int>>
{
    int top = assignment.empty() ? -1 : *std::max_element(assignment.begin(), assignment.end());
    vector<vector<int>> result(static_cast<size_t>(top + 1));
    for (size_t v = 0; v < assignment.size(); ++v)
        result[static_cast<size_t>(assignment[v])].push_back(static_cast<int>(v));
    return result;
}

auto Colouring::compacted() const -> Colouring
{
    std::map<int, int> rank;
    for (int colour : assignment)
        rank.emplace(colour, 0);
    int next = 0;
    for (auto & [colour, r] : rank)
        r = next++;
    vector<int> relabelled;
    relabelled.reserve(assignment.size());
    for (int colour : assignment)
        relabelled.push_back(rank[colour]);
    return from(std::move(relabelled), method);
}

auto cliquecol::validate(const Graph & g, const Colouring & c, std::optional<size_t> max_cliques) -> ValidationReport
{
    auto n = static_cast<size_t>(g.size());
    if (c.assignment.size() != n)
        throw ParameterError("colouring length " + std::to_string(c.assignment.size())
            + " does not match vertex count " + std::to_string(n));

    size_t visited = 0;
    for (auto & members : c.classes()) {
        if (members.size() < 2)
            continue;

        VertexSet cls = VertexSet::of(n, members);
        bool independent = std::none_of(members.begin(), members.end(),
            [&] (int v) { return g.neighbours(v).intersects(cls); });
        if (independent)
            continue;

        // a vertex outside the class adjacent to all of it extends every clique inside
        if (! common_neighbours(g, members).empty())
            continue;

        std::optional<vector<int>> witness;
        visit_maximal_cliques(g, cls, [&] (std::span<const int> clique) {
            if (max_cliques && ++visited > *max_cliques)
                throw CliqueOverflow(*max_cliques);
            if (clique.size() >= 2 && common_neighbours(g, clique).empty()) {
                witness.emplace(clique.begin(), clique.end());
                return false;
            }
            return true;
        });

        if (witness) {
            std::sort(witness->begin(), witness->end());
            return ValidationReport{false, std::move(witness)};
        }
    }
    return ValidationReport{};
}
