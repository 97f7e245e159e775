#include "tripart/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "tripart/analysis.hpp"
#include "tripart/graph.hpp"
#include "tripart/oracle.hpp"
#include "tripart/solver_lex.hpp"

namespace tripart::cli {

namespace {

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open '" + path + "'");
    return parse_graph(in);
}

std::string real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void print_partition(std::ostream& out, const TrianglePartition& p) {
    out << "YES\n";
    for (const auto& t : p.triangles) out << t.a << ' ' << t.b << ' ' << t.c << '\n';
}

struct GenOptions {
    std::string family;
    int n = 0;
    std::optional<double> p;
    std::optional<std::uint64_t> seed;
    std::string output;
};

struct SolveOptions {
    std::string algo = "lex";
    std::string file;
};

struct CountOptions {
    std::string algo = "lex";
    std::string ie_mode = "tabulated";
    unsigned threads = 1;
    std::string file;
};

struct AnalyzeOptions {
    unsigned long n = 0;
    unsigned long n_max = 0;
    double tol = analysis::kDefaultTolerance;
};

struct BenchOptions {
    std::string family = "complete";
    int n_from = 3;
    int n_to = 15;
};

int cmd_gen(const GenOptions& o, std::ostream& out) {
    auto family = family_from_string(o.family);
    if (!family) throw usage_error("unknown family '" + o.family + "'");
    if ((*family == Family::gnp || *family == Family::planted) && !o.seed) {
        throw usage_error("family '" + o.family + "' needs an explicit --seed");
    }
    Graph g;
    try {
        g = generate(*family, o.n, o.p, o.seed.value_or(0));
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
    if (o.output.empty()) {
        serialize_graph(g, out);
    } else {
        std::ofstream file(o.output);
        if (!file) throw io_error("cannot write '" + o.output + "'");
        serialize_graph(g, file);
        if (!file) throw io_error("write to '" + o.output + "' failed");
    }
    return kOk;
}

int cmd_solve(const SolveOptions& o, std::ostream& out) {
    Graph g = load_graph(o.file);
    std::optional<TrianglePartition> witness;
    if (o.algo == "lex") {
        witness = solve_lex(g).partition;
    } else {
        auto found = enumerate_partitions(g, 1);
        if (!found.empty()) witness = found.front();
    }
    if (!witness) {
        out << "NO\n";
        return kNo;
    }
    print_partition(out, *witness);
    return kOk;
}

int cmd_count(const CountOptions& o, std::ostream& out) {
    Graph g = load_graph(o.file);
    mpz_class count;
    if (o.algo == "lex") {
        count = count_lex(g).count;
    } else if (o.algo == "brute") {
        count = count_brute(g);
    } else {
        count = count_ie(g, *ie_mode_from_string(o.ie_mode), o.threads);
    }
    out << count.get_str() << '\n';
    return kOk;
}

int cmd_analyze(const std::string& what, const AnalyzeOptions& o, std::ostream& out) {
    try {
        if (what == "sum") {
            out << "n=" << o.n << "\nsum=" << analysis::state_space_sum(o.n).get_str() << '\n';
        } else if (what == "growth") {
            analysis::write_growth_csv(out, o.n_max);
        } else if (what == "gamma") {
            auto m = analysis::maximize_g(o.tol);
            out << "gamma_star=" << real(m.gamma_star) << "\ng_star=" << real(m.g_star)
                << "\nbase=" << real(m.base) << '\n';
        } else if (what == "chain") {
            analysis::write_chain_csv(out, o.n);
        } else {
            auto a = analysis::region_audit(o.n);
            auto line = [&](const char* name, const std::optional<double>& v, const std::optional<unsigned long>& k,
                            double claimed) {
                out << "region_" << name << "_max=" << (v ? real(*v) : "absent") << '\n';
                out << "region_" << name << "_argmax_k=" << (k ? std::to_string(*k) : "absent") << '\n';
                out << "region_" << name << "_claimed=" << real(claimed) << '\n';
            };
            out << "n=" << a.n << '\n';
            line("low", a.low_max, a.low_k, analysis::RegionAudit::kClaimedLow);
            line("middle", a.middle_max, a.middle_k, analysis::RegionAudit::kClaimedMiddle);
            line("high", a.high_max, a.high_k, analysis::RegionAudit::kClaimedHigh);
        }
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    } catch (const std::domain_error& e) {
        throw usage_error(e.what());
    }
    return kOk;
}

int cmd_bench(const BenchOptions& o, std::ostream& out) {
    if (o.family != "complete") throw usage_error("bench supports --family complete only");
    if (o.n_from < 1 || o.n_to < o.n_from) throw usage_error("bench needs 1 <= --n-from <= --n-to");
    if (o.n_to > kMaxVertices) throw capacity_error("--n-to exceeds " + std::to_string(kMaxVertices));
    bool all_match = true;
    out << "n,states_visited,sum_plus_one,count\n";
    for (int n = o.n_from; n <= o.n_to; ++n) {
        if (n % 3 != 0) continue;
        auto result = count_lex(generate(Family::complete, n));
        mpz_class expected = analysis::state_space_sum(static_cast<unsigned long>(n)) + 1;
        mpz_class visited(static_cast<unsigned long>(result.stats.states_visited));
        all_match = all_match && visited == expected;
        out << n << ',' << result.stats.states_visited << ',' << expected.get_str() << ','
            << result.count.get_str() << '\n';
    }
    return all_match ? kOk : kNo;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact triangle-partition solver, counting oracles and state-space analysis", "tripart"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a graph in DIMACS edge format");
    gen_cmd->add_option("--family", gen.family, "complete|cycle|prism|disjoint_triangles|gnp|planted")->required();
    gen_cmd->add_option("--n", gen.n, "Vertex count")->required();
    gen_cmd->add_option("--p", gen.p, "Edge probability (gnp, planted)");
    gen_cmd->add_option("--seed", gen.seed, "RNG seed (required for gnp, planted)");
    gen_cmd->add_option("-o,--output", gen.output, "Output file (default: stdout)");

    SolveOptions solve;
    auto* solve_cmd = app.add_subcommand("solve", "Find a triangle partition; exit 0 on YES, 1 on NO");
    solve_cmd->add_option("--algo", solve.algo)->check(CLI::IsMember({"lex", "brute"}));
    solve_cmd->add_option("file", solve.file, "DIMACS graph")->required();

    CountOptions count;
    auto* count_cmd = app.add_subcommand("count", "Count triangle partitions exactly");
    count_cmd->add_option("--algo", count.algo)->check(CLI::IsMember({"lex", "ie", "brute"}));
    count_cmd->add_option("--ie-mode", count.ie_mode)->check(CLI::IsMember({"tabulated", "poly-space"}));
    count_cmd->add_option("--threads", count.threads, "Worker threads for --algo ie")->check(CLI::Range(1U, 256U));
    count_cmd->add_option("file", count.file, "DIMACS graph")->required();

    AnalyzeOptions analyze;
    auto* analyze_cmd = app.add_subcommand("analyze", "Numerical analysis of the state-space growth");
    analyze_cmd->require_subcommand(1);
    auto* a_sum = analyze_cmd->add_subcommand("sum", "Exact state-space sum for one n");
    a_sum->add_option("--n", analyze.n)->required();
    auto* a_growth = analyze_cmd->add_subcommand("growth", "Growth table (CSV) for n = 3, 6, ..., n-max");
    a_growth->add_option("--n-max", analyze.n_max)->required();
    auto* a_gamma = analyze_cmd->add_subcommand("gamma", "Maximize g(gamma) and report the growth base");
    a_gamma->add_option("--tol", analyze.tol)->check(CLI::PositiveNumber);
    auto* a_chain = analyze_cmd->add_subcommand("chain", "Substitution chain table (CSV) for one n");
    a_chain->add_option("--n", analyze.n)->required();
    auto* a_audit = analyze_cmd->add_subcommand("audit", "Per-region maxima of the sum's terms");
    a_audit->add_option("--n", analyze.n)->required();

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Check states visited against the state-space sum on K_n");
    bench_cmd->add_option("--family", bench.family);
    bench_cmd->add_option("--n-from", bench.n_from)->required();
    bench_cmd->add_option("--n-to", bench.n_to)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*gen_cmd) return cmd_gen(gen, out);
        if (*solve_cmd) return cmd_solve(solve, out);
        if (*count_cmd) return cmd_count(count, out);
        if (*bench_cmd) return cmd_bench(bench, out);
        for (auto* sub : {a_sum, a_growth, a_gamma, a_chain, a_audit}) {
            if (*sub) return cmd_analyze(sub->get_name(), analyze, out);
        }
    } catch (const usage_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const capacity_error& e) {
        err << "error: " << e.what() << '\n';
        return kCapacity;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << '\n';
        return kParseOrIo;
    } catch (const io_error& e) {
        err << "error: " << e.what() << '\n';
        return kParseOrIo;
    }
    return kUsage;
}

}  // namespace tripart::cli
