#ifndef TRIPART_ORACLE_HPP
#define TRIPART_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "tripart/graph.hpp"

namespace tripart {

/// Exhaustive backtracking count without memoization. Intended for n <= 15.
mpz_class count_brute(const Graph& g);

/// Up to `limit` triangle partitions in lexicographic order of their triple sequences.
std::vector<TrianglePartition> enumerate_partitions(const Graph& g, std::size_t limit);

/// (-1)^(n - |s|) * a(s)^q with a(s) the number of triangles inside s.
mpz_class ie_term(const Graph& g, VertexSet s, unsigned q);

enum class IeMode { tabulated, poly_space };

std::optional<IeMode> ie_mode_from_string(std::string_view name);

/// Largest n accepted by IeMode::tabulated (2^n 32-bit entries).
inline constexpr int kTabulatedMaxVertices = 26;

/// a(S) for every S in [0, 2^n), built in increasing mask order from
/// a(S) = a(S - v) + |edges inside N(v) & (S - v)|, v = min S.
/// Throws capacity_error for n > kTabulatedMaxVertices.
std::vector<std::uint32_t> triangle_table(const Graph& g);

/// Signed inclusion-exclusion sum  sum_{S subset V} (-1)^(n-|S|) a(S)^q  with q = n/3.
/// Subsets are split into `threads` contiguous mask ranges; the result does not
/// depend on the thread count. Requires 3 | n.
mpz_class ie_signed_sum(const Graph& g, IeMode mode, unsigned threads = 1);

/// Number of triangle partitions by inclusion-exclusion: ie_signed_sum / q!.
/// Returns 0 when 3 does not divide n. Throws std::logic_error when the signed
/// sum is negative or not divisible by q!.
mpz_class count_ie(const Graph& g, IeMode mode = IeMode::tabulated, unsigned threads = 1);

}  // namespace tripart

#endif
