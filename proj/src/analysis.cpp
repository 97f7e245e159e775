#include "tripart/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

namespace tripart::analysis {

mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class out;
    if (k > n) return 0;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

namespace {

void require_multiple_of_three(unsigned long n, const char* who) {
    if (n < 3 || n % 3 != 0) {
        throw std::invalid_argument(std::string(who) + ": n must be a positive multiple of 3, got " +
                                    std::to_string(n));
    }
}

void require_unit_interval(double gamma, const char* who) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw std::domain_error(std::string(who) + ": gamma outside [0,1]");
    }
}

}  // namespace

mpz_class state_space_sum(unsigned long n) {
    require_multiple_of_three(n, "state_space_sum");
    mpz_class sum = 0;
    for (unsigned long k = 1; k <= n / 3; ++k) sum += binom(n - k, 2 * k);
    return sum;
}

double entropy(double gamma) {
    require_unit_interval(gamma, "entropy");
    if (gamma == 0.0 || gamma == 1.0) return 0.0;
    return -gamma * std::log(gamma) - (1.0 - gamma) * std::log1p(-gamma);
}

double g_func(double gamma) {
    require_unit_interval(gamma, "g_func");
    return entropy(gamma) / (3.0 - gamma);
}

double entropy_derivative(double gamma) {
    if (!(gamma > 0.0 && gamma < 1.0)) throw std::domain_error("entropy_derivative: gamma outside (0,1)");
    return std::log((1.0 - gamma) / gamma);
}

GammaMax maximize_g(double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("maximize_g: tolerance must be positive");
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 0.0, hi = 1.0;
    double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
    double g1 = g_func(x1), g2 = g_func(x2);
    while (hi - lo > tol) {
        if (g1 < g2) {
            lo = x1;
            x1 = x2, g1 = g2;
            x2 = lo + inv_phi * (hi - lo);
            g2 = g_func(x2);
        } else {
            hi = x2;
            x2 = x1, g2 = g1;
            x1 = hi - inv_phi * (hi - lo);
            g1 = g_func(x1);
        }
    }
    GammaMax out;
    out.gamma_star = (lo + hi) / 2.0;
    out.g_star = g_func(out.gamma_star);
    out.base = std::exp(2.0 * out.g_star);
    return out;
}

double log_mpz(const mpz_class& x) {
    if (x <= 0) throw std::domain_error("log_mpz: nonpositive argument");
    long exponent = 0;
    double mantissa = mpz_get_d_2exp(&exponent, x.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2;
}

double log_binom_exact(unsigned long n, unsigned long k) {
    if (k > n) throw std::domain_error("log_binom: k > n");
    return log_mpz(binom(n, k));
}

double log_binom_lgamma(unsigned long n, unsigned long k) {
    if (k > n) throw std::domain_error("log_binom: k > n");
    auto lf = [](unsigned long x) { return std::lgamma(static_cast<double>(x) + 1.0); };
    return lf(n) - lf(k) - lf(n - k);
}

double log_binom(unsigned long n, unsigned long k) {
    return n <= kExactLogBinomMax ? log_binom_exact(n, k) : log_binom_lgamma(n, k);
}

namespace {

// ln C(n-k, 2k), choosing the evaluation path by the problem size n.
double log_term(unsigned long n, unsigned long k) {
    return n <= kExactLogBinomMax ? log_binom_exact(n - k, 2 * k) : log_binom_lgamma(n - k, 2 * k);
}

}  // namespace

AnalysisPoint substitution_chain(unsigned long k, unsigned long n) {
    if (k < 1 || 3 * k > n) {
        throw std::domain_error("substitution_chain: need 1 <= k <= n/3, got k=" + std::to_string(k) +
                                " n=" + std::to_string(n));
    }
    AnalysisPoint p;
    p.n = n;
    p.k = k;
    const double nd = static_cast<double>(n), kd = static_cast<double>(k);
    p.alpha = kd / nd;
    // Exact rational forms: beta = 2k/(n-k), gamma = (n-3k)/(n-k).
    p.beta = 2.0 * kd / (nd - kd);
    p.epsilon = 2.0 * p.beta - 1.0;
    p.gamma = (nd - 3.0 * kd) / (nd - kd);
    p.f_val = entropy(p.gamma);
    p.g_val = g_func(p.gamma);
    p.log_binom = log_term(n, k);
    return p;
}

namespace {

// Index k maximizing C(n-k, 2k) over 1..n/3; ties keep the smaller k.
unsigned long argmax_term(unsigned long n) {
    unsigned long best = 1;
    if (n <= kExactLogBinomMax) {
        mpz_class best_val = binom(n - 1, 2);
        for (unsigned long k = 2; k <= n / 3; ++k) {
            mpz_class v = binom(n - k, 2 * k);
            if (v > best_val) best_val = v, best = k;
        }
    } else {
        double best_val = log_binom_lgamma(n - 1, 2);
        for (unsigned long k = 2; k <= n / 3; ++k) {
            double v = log_binom_lgamma(n - k, 2 * k);
            if (v > best_val) best_val = v, best = k;
        }
    }
    return best;
}

}  // namespace

GrowthRow growth_row(unsigned long n) {
    require_multiple_of_three(n, "growth_row");
    GrowthRow row;
    row.n = n;
    row.sum_value = state_space_sum(n);
    const double nd = static_cast<double>(n);
    row.root = std::exp(log_mpz(row.sum_value) / nd);
    row.argmax_k = argmax_term(n);
    row.max_root = std::exp(log_term(n, row.argmax_k) / nd);
    return row;
}

RegionAudit region_audit(unsigned long n) {
    require_multiple_of_three(n, "region_audit");
    RegionAudit audit;
    audit.n = n;
    const double nd = static_cast<double>(n);
    auto bump = [](std::optional<double>& best, std::optional<unsigned long>& best_k, double v,
                   unsigned long k) {
        if (!best || v > *best) best = v, best_k = k;
    };
    for (unsigned long k = 1; k <= n / 3; ++k) {
        double root = std::exp(log_term(n, k) / nd);
        if (7 * k <= n) {
            bump(audit.low_max, audit.low_k, root, k);
        } else if (4 * k >= n) {
            bump(audit.high_max, audit.high_k, root, k);
        } else {
            bump(audit.middle_max, audit.middle_k, root, k);
        }
    }
    return audit;
}

// ---- CSV ----------------------------------------------------------------------------

namespace {

std::string real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

}  // namespace

void write_chain_csv(std::ostream& out, unsigned long n) {
    if (n < 3) throw std::invalid_argument("chain table needs n >= 3");
    out << "n,k,alpha,beta,epsilon,gamma,f,g,log_binom_over_n\n";
    for (unsigned long k = 1; k <= n / 3; ++k) {
        auto p = substitution_chain(k, n);
        out << p.n << ',' << p.k << ',' << real(p.alpha) << ',' << real(p.beta) << ',' << real(p.epsilon) << ','
            << real(p.gamma) << ',' << real(p.f_val) << ',' << real(p.g_val) << ','
            << real(p.log_binom / static_cast<double>(n)) << '\n';
    }
}

void write_growth_csv(std::ostream& out, unsigned long n_max) {
    out << "n,sum,root,argmax_k,max_root\n";
    for (unsigned long n = 3; n <= n_max; n += 3) {
        auto row = growth_row(n);
        out << row.n << ',' << row.sum_value.get_str() << ',' << real(row.root) << ',' << row.argmax_k << ','
            << real(row.max_root) << '\n';
    }
}

}  // namespace tripart::analysis
