#include <cliquecol/errors.hh>
#include <cliquecol/theory.hh>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace cliquecol;

using std::optional;
using std::string;

auto cliquecol::f_exponent(double x) -> double
{
    if (! (x > 0.0 && x < 1.0))
        throw ParameterError("f is defined on (0, 1)");
    if (x < 0.5)
        return x;
    if (x < 0.6)
        return 1.0 + 3.0 * (x - 1.0) / 2.0;
    return 1.0 - x;
}

namespace
{
    auto check_np(int n, double p) -> void
    {
        if (n < 3)
            throw ParameterError("n must be at least 3");
        if (! (p > 0.0 && p < 1.0))
            throw ParameterError("p must lie strictly between 0 and 1");
    }

    auto chromatic_estimate(double pn) -> double
    {
        return pn / (2.0 * std::log(pn));
    }

    auto sparse_lower(int n, double p) -> double
    {
        return std::pow(p, 1.5) * n / std::sqrt(std::log(static_cast<double>(n)));
    }

    const char * const part_b_gap = "the lower and upper bounds differ by more than a constant near x = 1/2; the jump there is unresolved";
    const char * const dense_gap = "no matching lower bound is known in the dense regime";
}

auto cliquecol::regime_formulas(char label, int n, double p) -> RegimeReport
{
    check_np(n, p);
    double log_n = std::log(static_cast<double>(n));
    double pn = p * n;

    RegimeReport r;
    r.label = string(1, label);
    r.x = std::log(pn) / log_n;
    switch (label) {
        case 'a':
            if (pn > 1.0)
                r.lower_bound = r.upper_bound = chromatic_estimate(pn);
            r.notes.emplace_back("chi_c ~ chi ~ pn / (2 ln pn)");
            break;
        case 'b':
            r.lower_bound = sparse_lower(n, p);
            r.order_of_magnitude = true;
            if (pn > 1.0)
                r.upper_bound = chromatic_estimate(pn);
            r.notes.emplace_back("lower Omega(p^(3/2) n / sqrt(ln n)) with the constant taken as 1, upper pn / (2 ln pn)");
            r.notes.emplace_back(part_b_gap);
            break;
        case 'c':
            r.lower_bound = r.upper_bound = sparse_lower(n, p);
            r.order_of_magnitude = true;
            r.notes.emplace_back("Theta(p^(3/2) n / sqrt(ln n)) with the constant taken as 1");
            break;
        case 'd':
            r.lower_bound = r.upper_bound = std::pow(n, 0.4);
            r.exponent_only = true;
            r.notes.emplace_back("n^(2/5 + o(1)); exponent only");
            break;
        case 'e':
        case 'g':
            r.lower_bound = 1.0 / p;
            r.upper_bound = log_n / p;
            r.notes.emplace_back("between 1/p and ln n / p, up to constants");
            break;
        case 'f':
            r.lower_bound = r.upper_bound = std::cbrt(static_cast<double>(n));
            r.exponent_only = true;
            r.notes.emplace_back("n^(1/3 + o(1)); exponent only");
            break;
        case 'h':
            r.upper_bound = 0.5 * log_n / std::log(1.0 / (1.0 - p));
            r.notes.emplace_back("upper (1/2 + o(1)) log_{1/(1-p)} n");
            r.notes.emplace_back(dense_gap);
            break;
        default:
            throw ParameterError("unknown regime label");
    }
    if (r.x > 0.0 && r.x < 1.0)
        r.exponent_prediction = f_exponent(r.x);
    return r;
}

auto cliquecol::classify_regime(int n, double p, const RegimeOptions & options) -> RegimeReport
{
    check_np(n, p);
    if (! (options.delta >= 0.0))
        throw ParameterError("band width must be non-negative");

    double log_n = std::log(static_cast<double>(n));
    double pn = p * n;
    double omega = options.omega.value_or(std::log(log_n));
    double x = std::log(pn) / log_n;

    if (pn <= 1.0 || pn < omega) {
        RegimeReport r;
        r.label = "a";
        r.x = x;
        if (x > 0.0 && x < 1.0)
            r.exponent_prediction = f_exponent(x);
        r.notes.emplace_back("pn is below omega(n); the regime formulas do not apply");
        return r;
    }

    static constexpr char neighbourhoods[3][3] = { { 'a', 'b', 'c' }, { 'c', 'd', 'e' }, { 'e', 'f', 'g' } };
    for (int i = 0; i < 3; ++i) {
        if (std::abs(x - regime_breakpoints[i]) > options.delta)
            continue;
        RegimeReport r;
        r.label = "boundary";
        r.x = x;
        if (x > 0.0 && x < 1.0)
            r.exponent_prediction = f_exponent(x);
        for (char label : neighbourhoods[i]) {
            auto part = regime_formulas(label, n, p);
            if (part.lower_bound)
                r.lower_bound = std::min(r.lower_bound.value_or(*part.lower_bound), *part.lower_bound);
            if (part.upper_bound)
                r.upper_bound = std::max(r.upper_bound.value_or(*part.upper_bound), *part.upper_bound);
            r.exponent_only = r.exponent_only || part.exponent_only;
            r.order_of_magnitude = r.order_of_magnitude || part.order_of_magnitude;
            r.neighbours.push_back(std::move(part));
        }
        r.notes.emplace_back("x lies within the band around a breakpoint; bounds span the neighbouring regimes");
        if (i == 0)
            r.notes.emplace_back(part_b_gap);
        return r;
    }

    char label;
    if (x < regime_breakpoints[0])
        label = 'a';
    else if (x < regime_breakpoints[1])
        label = 'c';
    else if (x < regime_breakpoints[2])
        label = 'e';
    else
        label = p >= options.eps ? 'h' : 'g';
    return regime_formulas(label, n, p);
}

auto cliquecol::theory_constants(int n, double p, int k) -> TheoryConstants
{
    check_np(n, p);
    if (k < 3)
        throw ParameterError("k must be at least 3");

    using std::numbers::e;
    double log_n = std::log(static_cast<double>(n));
    double log_inv_p = std::log(1.0 / p);
    double pn = p * n;
    double np2 = n * p * p;

    TheoryConstants t;
    t.n = n;
    t.p = p;
    t.k = k;

    if (np2 < e) {
        t.c = 9.0 * log_n / std::log(e / np2);
        t.eps = 3.0 * std::pow(2.0 * e * *t.c * np2, 1.0 / (2.0 * *t.c));
    }
    else {
        t.absent["c"] = "needs n p^2 < e";
        t.absent["eps"] = "needs c";
    }

    if (! t.eps)
        t.absent["eps_prime"] = "needs eps";
    else if (pn <= e)
        t.absent["eps_prime"] = "needs pn > e";
    else
        t.eps_prime = std::max(*t.eps, 1.0 / std::log(std::log(pn)));

    if (t.eps_prime)
        t.k_cap = (2.0 + *t.eps_prime) * std::log(pn) / p;
    else
        t.absent["k_cap"] = "needs eps_prime";

    t.s_thm47 = 3.0 * k * std::pow(p, -k / 2.0) * std::pow(log_n, 1.0 / (k - 1));

    double arg = std::pow(p, k) * n * 4.0 * e * k * log_n * log_n;
    if (arg < 1.0)
        t.C_def = std::pow(32.0 * k * k * log_n / -std::log(arg), 1.0 / (k - 1));
    else
        t.absent["C_def"] = "needs p^k n 4ek ln^2 n < 1";

    double log_base_n = log_n / log_inv_p;
    t.k1_claim1 = static_cast<long long>(std::ceil(2.0 * log_base_n + 1.0));
    t.k2_claim2 = static_cast<long long>(std::floor(log_base_n - 3.0 * std::log(log_n) / log_inv_p));
    return t;
}

auto cliquecol::chernoff_tail(double mu, double delta, TailSide side) -> double
{
    if (! (mu >= 0.0))
        throw ParameterError("mu must be non-negative");
    double exponent;
    if (side == TailSide::lower) {
        if (! (delta > 0.0 && delta < 1.0))
            throw ParameterError("the lower tail needs 0 < delta < 1");
        exponent = -delta * delta * mu / 2.0;
    }
    else {
        if (! (delta > 0.0))
            throw ParameterError("the upper tail needs delta > 0");
        exponent = -delta * delta * mu / (2.0 + delta);
    }
    return std::clamp(std::exp(exponent), 0.0, 1.0);
}
