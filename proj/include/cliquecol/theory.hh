#ifndef CLIQUECOL_GUARD_THEORY_HH
#define CLIQUECOL_GUARD_THEORY_HH 1

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cliquecol
{
    /// Piecewise step exponent: x on (0,1/2), 1 + 3(x-1)/2 on [1/2,3/5), 1 - x on [3/5,1).
    auto f_exponent(double x) -> double;

    inline constexpr double regime_breakpoints[] = { 0.5, 0.6, 2.0 / 3.0 };

    struct RegimeOptions
    {
        double delta = 0.02;
        /// omega(n); ln ln n when unset.
        std::optional<double> omega;
        /// Edge probabilities at or above this count as dense.
        double eps = 0.01;
    };

    /**
     * Predicted clique chromatic number of G(n,p). Labels a..h name the eight
     * regimes; "boundary" means x lies within delta of a breakpoint, and the
     * neighbouring regimes are reported in `neighbours` with the widest
     * combined bounds copied to the top level.
     */
    struct RegimeReport
    {
        std::string label;
        double x = 0.0;
        std::optional<double> lower_bound;
        std::optional<double> upper_bound;
        std::optional<double> exponent_prediction;
        /// The bounds are n^e with the o(1) dropped.
        bool exponent_only = false;
        /// The bounds carry an unknown constant, taken as 1.
        bool order_of_magnitude = false;
        std::vector<std::string> notes;
        std::vector<RegimeReport> neighbours;
    };

    /// Requires n >= 3 and 0 < p < 1.
    auto classify_regime(int n, double p, const RegimeOptions & options = {}) -> RegimeReport;

    /// The formulas of a single named regime, regardless of where x falls.
    auto regime_formulas(char label, int n, double p) -> RegimeReport;

    /**
     * Named constants of the lower-bound and dense-colouring arguments. Every
     * field is absent when its formula leaves its domain, with the reason
     * recorded under the field name in `absent`.
     */
    struct TheoryConstants
    {
        int n = 0;
        double p = 0.0;
        int k = 0;
        std::optional<double> c;            // 9 ln n / ln(e / (n p^2))
        std::optional<double> eps;          // 3 (2 e c n p^2)^(1/(2c))
        std::optional<double> eps_prime;    // max(eps, 1 / ln ln(pn))
        std::optional<double> k_cap;        // (2 + eps') ln(pn) / p
        std::optional<double> s_thm47;      // 3k p^(-k/2) (ln n)^(1/(k-1))
        std::optional<double> C_def;        // (32 k^2 ln n / -ln(p^k n 4ek ln^2 n))^(1/(k-1))
        std::optional<long long> k1_claim1; // ceil(2 log_{1/p} n + 1)
        std::optional<long long> k2_claim2; // floor(log_{1/p} n - 3 log_{1/p} ln n)
        std::map<std::string, std::string> absent;
    };

    /// Requires n >= 3, 0 < p < 1 and k >= 3.
    auto theory_constants(int n, double p, int k = 3) -> TheoryConstants;

    enum class TailSide { lower, upper };

    /// exp(-d^2 mu / 2) for the lower tail (0 < d < 1), exp(-d^2 mu / (2 + d))
    /// for the upper tail (d > 0); clamped to [0, 1].
    auto chernoff_tail(double mu, double delta, TailSide side) -> double;
}

#endif
