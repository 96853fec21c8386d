#ifndef CLIQUECOL_GUARD_COLOURING_HH
#define CLIQUECOL_GUARD_COLOURING_HH 1

#include <cliquecol/cliques.hh>
#include <cliquecol/graph.hh>

#include <optional>
#include <string>
#include <vector>

namespace cliquecol
{
    /// A vertex colouring with non-negative colour indices. The palette is the
    /// number of distinct colours actually used, not the largest index.
    struct Colouring
    {
        std::vector<int> assignment;
        int palette = 0;
        std::string method;

        static auto from(std::vector<int> assignment, std::string method) -> Colouring;

        /// Colour classes indexed by colour value; unused values give empty classes.
        auto classes() const -> std::vector<std::vector<int>>;

        /// Relabel used colours to 0..palette-1, keeping their relative order.
        auto compacted() const -> Colouring;
    };

    struct ValidationReport
    {
        bool valid = true;
        /// A monochromatic maximal clique of size >= 2, present iff !valid.
        std::optional<std::vector<int>> witness;
    };

    /**
     * Checks that no maximal clique of size >= 2 is monochromatic. Works one
     * colour class at a time: an independent class, or a class with a common
     * neighbour outside it, cannot contain a maximal clique; otherwise the
     * maximal cliques of the induced class are enumerated and each is tested
     * for an extension in g. Throws ParameterError on a length mismatch and
     * CliqueOverflow if the enumeration exceeds max_cliques.
     */
    auto validate(const Graph & g, const Colouring & c, std::optional<std::size_t> max_cliques = default_clique_limit) -> ValidationReport;
}

#endif
