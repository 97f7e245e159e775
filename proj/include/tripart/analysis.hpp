#ifndef TRIPART_ANALYSIS_HPP
#define TRIPART_ANALYSIS_HPP

#include <iosfwd>
#include <optional>

#include <gmpxx.h>

namespace tripart::analysis {

// Growth analysis of the lexicographic state space sum_{k=1}^{n/3} C(n-k, 2k).
// Natural logarithms throughout; growth bases are reported as exp(.).

/// Exact C(n, k); 0 when k > n.
mpz_class binom(unsigned long n, unsigned long k);

/// sum_{k=1}^{n/3} C(n-k, 2k). Throws std::invalid_argument unless 3 | n and n >= 3.
mpz_class state_space_sum(unsigned long n);

/// -g ln g - (1-g) ln(1-g), with 0 at both endpoints. Throws std::domain_error outside [0,1].
double entropy(double gamma);

/// entropy(gamma) / (3 - gamma).
double g_func(double gamma);

/// Derivative of the entropy, ln((1-g)/g).
double entropy_derivative(double gamma);

struct GammaMax {
    double gamma_star = 0;
    double g_star = 0;
    double base = 0;  // exp(2 g_star)
};

inline constexpr double kDefaultTolerance = 1e-10;

/// Golden-section search for the maximum of g_func on [0,1].
GammaMax maximize_g(double tol = kDefaultTolerance);

/// Crossover between the exact big-integer and log-gamma evaluations of ln C(n, k).
inline constexpr unsigned long kExactLogBinomMax = 2000;

double log_binom_exact(unsigned long n, unsigned long k);
double log_binom_lgamma(unsigned long n, unsigned long k);
/// Exact path for n <= kExactLogBinomMax, log-gamma above.
double log_binom(unsigned long n, unsigned long k);

/// ln of an exact positive integer.
double log_mpz(const mpz_class& x);

struct AnalysisPoint {
    unsigned long n = 0;
    unsigned long k = 0;
    double alpha = 0;    // k / n
    double beta = 0;     // 2 alpha / (1 - alpha)
    double epsilon = 0;  // 2 beta - 1
    double gamma = 0;    // (1 - 3 alpha) / (1 - alpha)
    double f_val = 0;    // entropy(gamma)
    double g_val = 0;    // g_func(gamma)
    double log_binom = 0;  // ln C(n - k, 2k)
};

/// Fills the alpha/beta/epsilon/gamma chain for term k of the sum at size n.
/// Throws std::domain_error unless 1 <= k and 3k <= n.
AnalysisPoint substitution_chain(unsigned long k, unsigned long n);

struct GrowthRow {
    unsigned long n = 0;
    mpz_class sum_value;
    double root = 0;           // sum_value^(1/n)
    unsigned long argmax_k = 0;
    double max_root = 0;       // (max_k C(n-k, 2k))^(1/n)
};

/// Throws std::invalid_argument unless 3 | n and n >= 3.
GrowthRow growth_row(unsigned long n);

/// Per-region maxima of C(n-k, 2k)^(1/n), split by beta = 2k/(n-k):
/// low (beta <= 1/3, i.e. 7k <= n), middle, high (beta >= 2/3, i.e. 4k >= n).
struct RegionAudit {
    unsigned long n = 0;
    std::optional<double> low_max, middle_max, high_max;
    std::optional<unsigned long> low_k, middle_k, high_k;
    // Bounds claimed for each region in the original analysis; reported, not asserted.
    static constexpr double kClaimedLow = 1.22;
    static constexpr double kClaimedMiddle = 1.7549;
    static constexpr double kClaimedHigh = 1.2;
};

RegionAudit region_audit(unsigned long n);

// ---- CSV ------------------------------------------------------------------------

void write_chain_csv(std::ostream& out, unsigned long n);
void write_growth_csv(std::ostream& out, unsigned long n_max);

}  // namespace tripart::analysis

#endif
