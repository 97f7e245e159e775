#include "tripart/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <thread>

namespace tripart {

// ---- backtracking ---------------------------------------------------------------

namespace {

// Plain vertex loops on purpose: this path must not share the bitmask
// successor logic of the lexicographic solver it cross-checks.
void backtrack(const Graph& g, std::vector<bool>& used, int remaining, std::uint64_t& count) {
    if (remaining == 0) {
        ++count;
        return;
    }
    Vertex a = 1;
    while (used[a]) ++a;
    used[a] = true;
    for (Vertex b = a + 1; b <= g.n(); ++b) {
        if (used[b] || !g.has_edge(a, b)) continue;
        used[b] = true;
        for (Vertex c = b + 1; c <= g.n(); ++c) {
            if (used[c] || !is_triangle(g, a, b, c)) continue;
            used[c] = true;
            backtrack(g, used, remaining - 3, count);
            used[c] = false;
        }
        used[b] = false;
    }
    used[a] = false;
}

void enumerate(const Graph& g, std::vector<bool>& used, int remaining, std::size_t limit,
               std::vector<Triangle>& path, std::vector<TrianglePartition>& out) {
    if (out.size() >= limit) return;
    if (remaining == 0) {
        out.push_back(TrianglePartition{path});
        return;
    }
    Vertex a = 1;
    while (used[a]) ++a;
    used[a] = true;
    for (Vertex b = a + 1; b <= g.n() && out.size() < limit; ++b) {
        if (used[b] || !g.has_edge(a, b)) continue;
        used[b] = true;
        for (Vertex c = b + 1; c <= g.n() && out.size() < limit; ++c) {
            if (used[c] || !is_triangle(g, a, b, c)) continue;
            used[c] = true;
            path.push_back({a, b, c});
            enumerate(g, used, remaining - 3, limit, path, out);
            path.pop_back();
            used[c] = false;
        }
        used[b] = false;
    }
    used[a] = false;
}

}  // namespace

mpz_class count_brute(const Graph& g) {
    if (g.n() % 3 != 0) return 0;
    std::vector<bool> used(static_cast<std::size_t>(g.n()) + 1, false);
    std::uint64_t count = 0;
    backtrack(g, used, g.n(), count);
    mpz_class out;
    mpz_import(out.get_mpz_t(), 1, 1, sizeof(count), 0, 0, &count);
    return out;
}

std::vector<TrianglePartition> enumerate_partitions(const Graph& g, std::size_t limit) {
    std::vector<TrianglePartition> out;
    if (g.n() % 3 != 0 || limit == 0) return out;
    std::vector<bool> used(static_cast<std::size_t>(g.n()) + 1, false);
    std::vector<Triangle> path;
    enumerate(g, used, g.n(), limit, path, out);
    return out;
}

// ---- inclusion-exclusion ---------------------------------------------------------
//
// Counting q-tuples of triangles whose union is exactly V: a tuple of q
// triangles covering all n = 3q vertices cannot overlap, so every such tuple
// is an ordered triangle partition. Tuples with union inside S number a(S)^q,
// and Moebius inversion over the subset lattice gives the exact-union count.
// Dividing by q! removes the ordering.

mpz_class ie_term(const Graph& g, VertexSet s, unsigned q) {
    mpz_class term;
    mpz_ui_pow_ui(term.get_mpz_t(), triangle_count_within(g, s), q);
    if ((g.n() - s.size()) % 2 != 0) term = -term;
    return term;
}

std::optional<IeMode> ie_mode_from_string(std::string_view name) {
    if (name == "tabulated") return IeMode::tabulated;
    if (name == "poly-space" || name == "poly_space") return IeMode::poly_space;
    return std::nullopt;
}

namespace {

// Edges of g with both ends in s.
std::uint32_t edges_within(const Graph& g, VertexSet s) {
    std::uint32_t e = 0;
    s.for_each([&](Vertex u) { e += static_cast<std::uint32_t>((g.neighbors(u) & s & above(u)).size()); });
    return e;
}

// Per-parity histogram of a(S): hist[parity][a] = number of subsets S in the
// range with |S| of that parity and a(S) = a. Exact and cheap to merge.
using Histogram = std::array<std::vector<std::uint64_t>, 2>;

template <typename TriangleCount>
Histogram histogram_range(std::uint64_t lo, std::uint64_t hi, std::size_t max_a, TriangleCount&& a) {
    Histogram h{std::vector<std::uint64_t>(max_a + 1, 0), std::vector<std::uint64_t>(max_a + 1, 0)};
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        ++h[std::popcount(mask) & 1][a(mask)];
    }
    return h;
}

}  // namespace

std::vector<std::uint32_t> triangle_table(const Graph& g) {
    if (g.n() > kTabulatedMaxVertices) {
        throw capacity_error("tabulated inclusion-exclusion supports n <= " +
                             std::to_string(kTabulatedMaxVertices) + ", got n=" + std::to_string(g.n()));
    }
    const std::uint64_t size = std::uint64_t{1} << g.n();
    std::vector<std::uint32_t> table(size, 0);
    for (std::uint64_t mask = 1; mask < size; ++mask) {
        VertexSet s(mask);
        Vertex v = s.min();
        VertexSet rest = s.without(v);
        table[mask] = table[rest.bits] + edges_within(g, g.neighbors(v) & rest);
    }
    return table;
}

mpz_class ie_signed_sum(const Graph& g, IeMode mode, unsigned threads) {
    const int n = g.n();
    if (n % 3 != 0) throw std::invalid_argument("ie_signed_sum: n must be divisible by 3");
    const unsigned q = static_cast<unsigned>(n / 3);
    const std::uint64_t size = n >= 64 ? 0 : std::uint64_t{1} << n;  // n <= 63 by Graph
    const std::size_t max_a = triangle_count_within(g, g.vertices());

    std::vector<std::uint32_t> table;
    if (mode == IeMode::tabulated) table = triangle_table(g);

    threads = std::max(1U, threads);
    if (threads > size) threads = static_cast<unsigned>(std::max<std::uint64_t>(size, 1));
    std::vector<Histogram> parts(threads);
    auto work = [&](unsigned t) {
        std::uint64_t lo = size / threads * t;
        std::uint64_t hi = t + 1 == threads ? size : size / threads * (t + 1);
        if (mode == IeMode::tabulated) {
            parts[t] = histogram_range(lo, hi, max_a, [&](std::uint64_t m) { return table[m]; });
        } else {
            parts[t] = histogram_range(lo, hi, max_a,
                                       [&](std::uint64_t m) { return triangle_count_within(g, VertexSet(m)); });
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }

    mpz_class sum = 0, power, mult;
    for (int parity = 0; parity < 2; ++parity) {
        const bool negative = ((n - parity) % 2) != 0;
        for (std::size_t a = 1; a <= max_a; ++a) {
            std::uint64_t subsets = 0;
            for (const auto& h : parts) subsets += h[parity][a];
            if (subsets == 0) continue;
            mpz_ui_pow_ui(power.get_mpz_t(), a, q);
            mpz_import(mult.get_mpz_t(), 1, 1, sizeof(subsets), 0, 0, &subsets);
            if (negative) sum -= power * mult; else sum += power * mult;
        }
    }
    // a = 0 contributes 0^q, which is 1 only when q = 0 (the empty graph; S = {} only).
    if (q == 0) sum += 1;
    return sum;
}

mpz_class count_ie(const Graph& g, IeMode mode, unsigned threads) {
    if (g.n() % 3 != 0) return 0;
    mpz_class sum = ie_signed_sum(g, mode, threads);
    mpz_class q_factorial;
    mpz_fac_ui(q_factorial.get_mpz_t(), static_cast<unsigned long>(g.n() / 3));
    if (sum < 0 || !mpz_divisible_p(sum.get_mpz_t(), q_factorial.get_mpz_t())) {
        throw std::logic_error("inclusion-exclusion sum " + sum.get_str() + " is not a nonnegative multiple of " +
                               q_factorial.get_str());
    }
    return sum / q_factorial;
}

}  // namespace tripart
