#ifndef CLIQUECOL_GUARD_SWEEP_HH
#define CLIQUECOL_GUARD_SWEEP_HH 1

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cliquecol
{
    inline constexpr const char * sweep_methods[] = { "domset", "trifree", "dense", "portfolio", "exact", "mcf" };

    /**
     * A Monte Carlo grid. Exactly one of x_values (p = n^(x-1)) and p_values
     * is non-empty. Budgets bound the exact searches; constructors always run
     * to completion.
     */
    struct SweepConfig
    {
        std::vector<int> n_values;
        std::vector<double> x_values;
        std::vector<double> p_values;
        int trials = 1;
        std::uint64_t seed = 0;
        std::vector<std::string> methods;
        std::optional<std::chrono::milliseconds> budget;
        std::map<std::string, std::chrono::milliseconds> method_budgets;
        std::string out_path;
        std::optional<int> threads;
        int exact_guard = 40;
        /// Wall-clock times make reruns differ, so they are opt-in.
        bool timings = false;

        /// Flat "key = value" lines, lists comma-separated, '#' starts a comment.
        static auto parse(std::string_view text) -> SweepConfig;
        static auto load(const std::string & path) -> SweepConfig;

        /// Throws ParameterError on an inconsistent grid.
        auto check() const -> void;
        auto budget_for(const std::string & method) const -> std::optional<std::chrono::milliseconds>;
        auto cell_count() const -> std::size_t;
    };

    struct SweepRecord
    {
        int n = 0;
        std::optional<double> x;
        double p = 0.0;
        std::uint64_t seed = 0;
        int trial = 0;
        std::string method;
        std::optional<long long> colors;
        std::optional<bool> valid;
        std::optional<long long> lower_bound;
        std::optional<double> elapsed_ms;
        std::string status;
        std::string regime;

        auto operator==(const SweepRecord &) const -> bool = default;
    };

    inline constexpr std::string_view sweep_csv_header = "n,x,p,seed,trial,method,colors,valid,lower_bound,elapsed_ms,status,regime";

    /// keyed_hash(master, n, x index, trial): any cell can be recomputed alone.
    auto trial_seed(std::uint64_t master, int n, std::size_t x_index, int trial) -> std::uint64_t;

    /// All records of one (n, x index, trial) cell, one per method, in method-name order.
    auto run_cell(const SweepConfig & cfg, int n, std::size_t x_index, int trial) -> std::vector<SweepRecord>;

    /// Runs every cell, sorts the records by (n, x, trial, method) and writes
    /// them to cfg.out_path when it is set.
    auto run_sweep(const SweepConfig & cfg) -> std::vector<SweepRecord>;

    auto format_csv(const std::vector<SweepRecord> & records) -> std::string;
    auto parse_csv(std::string_view text) -> std::vector<SweepRecord>;

    /// Writes to a temporary sibling and renames it into place; the temporary
    /// file is removed if anything fails.
    auto write_file_atomically(const std::string & path, std::string_view contents) -> void;

    /// Thread count: the explicit value, else CLIQUECOL_THREADS, else the hardware concurrency.
    auto resolve_threads(std::optional<int> requested) -> int;
}

#endif
