// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tripart/analysis.hpp"
#include "tripart/cli.hpp"
#include "tripart/oracle.hpp"
#include "tripart/solver_lex.hpp"

using namespace tripart;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct Criterion {
    int id;
    std::string name;
    double time_limit_s;
    std::function<Outcome()> body;
};

struct NamedGraph {
    std::string name;
    Graph g;
};

// 60 graphs: {gnp, planted} x n in {6, 9, 12} x seeds 0..9, with p cycling
// through {0.3, 0.5, 0.8} by seed.
std::vector<NamedGraph> sweep_corpus() {
    std::vector<NamedGraph> out;
    const double ps[] = {0.3, 0.5, 0.8};
    for (auto family : {Family::gnp, Family::planted}) {
        for (int n : {6, 9, 12}) {
            for (std::uint64_t seed = 0; seed < 10; ++seed) {
                double p = ps[seed % 3];
                std::ostringstream name;
                name << to_string(family) << "(n=" << n << ",p=" << p << ",seed=" << seed << ")";
                out.push_back({name.str(), generate(family, n, p, seed)});
            }
        }
    }
    return out;
}

std::vector<NamedGraph> fixtures() {
    return {{"K6", generate(Family::complete, 6)},
            {"K9", generate(Family::complete, 9)},
            {"prism", generate(Family::prism, 6)},
            {"octahedron", testing::octahedron()},
            {"C6", generate(Family::cycle, 6)}};
}

mpz_class as_mpz(std::uint64_t x) { return mpz_class(static_cast<unsigned long>(x)); }

Outcome bound_reproduction() {
    Outcome r;
    std::ostringstream out, err;
    int code = cli::run({"analyze", "gamma", "--tol", "1e-10"}, out, err);
    r.require(code == 0, "analyze gamma exited " + std::to_string(code));
    double gamma_star = NAN, base = NAN;
    std::istringstream lines(out.str());
    for (std::string line; std::getline(lines, line);) {
        if (line.rfind("gamma_star=", 0) == 0) gamma_star = std::stod(line.substr(11));
        if (line.rfind("base=", 0) == 0) base = std::stod(line.substr(5));
    }
    r.require(std::abs(gamma_star - 0.56985) <= 1e-4, "gamma_star=" + std::to_string(gamma_star));
    r.require(std::abs(base - 1.7549) <= 1e-3, "base=" + std::to_string(base));
    char buf[128];
    std::snprintf(buf, sizeof buf, "gamma_star=%.6f base=%.6f", gamma_star, base);
    if (r.ok) r.detail = buf;
    return r;
}

Outcome fixture_counts() {
    Outcome r;
    const long expected[] = {10, 280, 1, 4, 0};
    auto fx = fixtures();
    for (std::size_t i = 0; i < fx.size(); ++i) {
        const auto& [name, g] = fx[i];
        auto lex = count_lex(g).count;
        auto ie = count_ie(g);
        auto brute = count_brute(g);
        r.require(lex == expected[i] && ie == expected[i] && brute == expected[i],
                  name + ": lex=" + lex.get_str() + " ie=" + ie.get_str() + " brute=" + brute.get_str() +
                      " expected=" + std::to_string(expected[i]));
    }
    if (r.ok) r.detail = "K6=10 K9=280 prism=1 octahedron=4 C6=0";
    return r;
}

Outcome oracle_sweep() {
    Outcome r;
    int positive = 0;
    auto corpus = sweep_corpus();
    for (const auto& [name, g] : corpus) {
        auto lex = count_lex(g).count;
        auto ie = count_ie(g);
        auto brute = count_brute(g);
        r.require(lex == ie && ie == brute,
                  name + ": lex=" + lex.get_str() + " ie=" + ie.get_str() + " brute=" + brute.get_str());
        auto solved = solve_lex(g);
        r.require(solved.partition.has_value() == (brute > 0), name + ": solve_lex disagrees with count");
        if (solved.partition) {
            r.require(!validate_partition(g, *solved.partition), name + ": witness rejected");
            ++positive;
        }
    }
    if (r.ok) r.detail = std::to_string(corpus.size()) + " graphs agree, " + std::to_string(positive) + " solvable";
    return r;
}

Outcome state_space_identity() {
    Outcome r;
    const long fixtures_sum[] = {11, 64, 350};
    int i = 0;
    std::string detail;
    for (int n : {6, 9, 12, 15}) {
        auto sum = analysis::state_space_sum(static_cast<unsigned long>(n));
        r.require(sum == testing::pascal_state_sum(static_cast<unsigned>(n)),
                  "state_space_sum(" + std::to_string(n) + ") disagrees with Pascal's rule");
        if (i < 3) r.require(sum == fixtures_sum[i], "state_space_sum(" + std::to_string(n) + ")=" + sum.get_str());
        auto visited = count_lex(generate(Family::complete, n)).stats.states_visited;
        r.require(as_mpz(visited) == sum + 1, "K" + std::to_string(n) + ": states_visited=" +
                                                  std::to_string(visited) + " vs 1+sum=" + mpz_class(sum + 1).get_str());
        detail += "K" + std::to_string(n) + ":" + std::to_string(visited) + " ";
        ++i;
    }
    if (r.ok) r.detail = detail + "(= 1 + sum)";
    return r;
}

Outcome entropy_bound() {
    Outcome r;
    const double g_star = analysis::maximize_g().g_star;
    std::size_t checked = 0;
    for (unsigned long n = 3; n <= 600; n += 3) {
        const double nd = static_cast<double>(n);
        for (unsigned long k = 1; k <= n / 3; ++k) {
            double log_term = analysis::log_mpz(analysis::binom(n - k, 2 * k));
            r.require(log_term <= 2.0 * nd * g_star,
                      "C(" + std::to_string(n - k) + "," + std::to_string(2 * k) + ") exceeds exp(2n g*)");
            ++checked;
        }
        double root = std::exp(analysis::log_mpz(analysis::state_space_sum(n)) / nd);
        r.require(root <= std::pow(nd / 3.0, 1.0 / nd) * 1.75488, "sum root too large at n=" + std::to_string(n));
    }
    double root600 = std::exp(analysis::log_mpz(analysis::state_space_sum(600)) / 600.0);
    r.require(std::abs(root600 - 1.75488) <= 0.03, "sum(600)^(1/600)=" + std::to_string(root600));
    if (r.ok) r.detail = std::to_string(checked) + " terms bounded; sum(600)^(1/600)=" + std::to_string(root600);
    return r;
}

Outcome argmax_location() {
    Outcome r;
    auto row = analysis::growth_row(3000);
    double ratio = static_cast<double>(row.argmax_k) / 3000.0;
    auto m = analysis::maximize_g();
    double alpha_star = (1.0 - m.gamma_star) / (3.0 - m.gamma_star);
    r.require(std::abs(ratio - 0.17700) <= 0.002, "argmax_k/n=" + std::to_string(ratio));
    r.require(std::abs(alpha_star - 0.17700) <= 0.002, "alpha*=" + std::to_string(alpha_star));
    if (r.ok) {
        r.detail = "argmax_k=" + std::to_string(row.argmax_k) + " ratio=" + std::to_string(ratio) +
                   " alpha*=" + std::to_string(alpha_star);
    }
    return r;
}

Outcome ie_internals() {
    Outcome r;
    auto corpus = sweep_corpus();
    for (auto& f : fixtures()) corpus.push_back(std::move(f));
    std::size_t subsets = 0;
    for (const auto& [name, g] : corpus) {
        mpz_class q_factorial;
        mpz_fac_ui(q_factorial.get_mpz_t(), static_cast<unsigned long>(g.n() / 3));
        auto tab = ie_signed_sum(g, IeMode::tabulated);
        auto poly = ie_signed_sum(g, IeMode::poly_space);
        r.require(tab >= 0 && mpz_divisible_p(tab.get_mpz_t(), q_factorial.get_mpz_t()),
                  name + ": signed sum " + tab.get_str() + " not divisible by q!");
        r.require(tab == poly, name + ": tabulated and poly-space sums differ");
        r.require(count_ie(g, IeMode::tabulated) == count_ie(g, IeMode::poly_space), name + ": mode counts differ");
        auto table = triangle_table(g);
        for (std::uint64_t m = 0; m < table.size(); ++m) {
            if (table[m] != testing::triangles_by_triple_scan(g, VertexSet(m))) {
                r.require(false, name + ": a(S) mismatch at mask " + std::to_string(m));
                break;
            }
        }
        subsets += table.size();
    }
    if (r.ok) {
        r.detail = std::to_string(corpus.size()) + " graphs, " + std::to_string(subsets) + " subsets checked";
    }
    return r;
}

Outcome desk_scale() {
    Outcome r;
    auto g = generate(Family::planted, 30, 0.2, 1);
    auto result = solve_lex(g);
    r.require(result.partition.has_value(), "planted instance reported unsolvable");
    if (result.partition) r.require(!validate_partition(g, *result.partition), "witness rejected");
    mpz_class ceiling = analysis::state_space_sum(30) + 1;
    r.require(as_mpz(result.stats.states_visited) <= ceiling,
              "states_visited=" + std::to_string(result.stats.states_visited) + " > " + ceiling.get_str());
    if (r.ok) {
        r.detail = "states_visited=" + std::to_string(result.stats.states_visited) + " <= " + ceiling.get_str();
    }
    return r;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "bound reproduction", 1.0, bound_reproduction},
        {2, "fixture counts", 1.0, fixture_counts},
        {3, "oracle equivalence sweep", 120.0, oracle_sweep},
        {4, "state-space identity", 60.0, state_space_identity},
        {5, "entropy-bound property", 60.0, entropy_bound},
        {6, "argmax location", 1.0, argmax_location},
        {7, "inclusion-exclusion internals", 120.0, ie_internals},
        {8, "desk-scale performance sanity", 60.0, desk_scale},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome r;
        try {
            r = c.body();
        } catch (const std::exception& e) {
            r.ok = false;
            r.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs >= c.time_limit_s) {
            r.ok = false;
            r.detail += " [exceeded time limit " + std::to_string(c.time_limit_s) + "s]";
        }
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.3fs", secs);
        std::cout << (r.ok ? "PASS" : "FAIL") << "  criterion " << c.id << " (" << c.name << ", " << timing
                  << "): " << r.detail << std::endl;
        failed += r.ok ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
