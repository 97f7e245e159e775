#ifndef TRIPART_SOLVER_LEX_HPP
#define TRIPART_SOLVER_LEX_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "tripart/graph.hpp"

namespace tripart {

/// Vertices covered by the first j triangles of a lexicographically ordered
/// partial partition; j = |covered| / 3.
struct DpState {
    VertexSet covered;

    int j() const { return covered.size() / 3; }
    bool operator==(const DpState&) const = default;
};

struct DpStats {
    std::uint64_t states_visited = 0;        // distinct states entered, empty and full included
    std::uint64_t transitions_explored = 0;  // candidate triangles generated by lex_successors
};

/// Smallest vertex of 1..n not in s. Throws std::invalid_argument when s covers 1..n.
Vertex min_uncovered(VertexSet s, int n);

/// |s| is a multiple of 3 and s contains 1..|s|/3.
bool is_valid_state(VertexSet s);

struct Successor {
    Triangle triangle;
    DpState next;
};

/// Triangles (m, u, v) with m = min_uncovered, m < u < v all uncovered, in
/// ascending (u, v) order.
std::vector<Successor> lex_successors(const Graph& g, DpState s);

struct SolveResult {
    std::optional<TrianglePartition> partition;
    DpStats stats;
};

/// Decides triangle-partitionability by DFS over lexicographic states with a
/// memo of dead states. Returns the lexicographically smallest partition.
SolveResult solve_lex(const Graph& g);

struct CountResult {
    mpz_class count;
    DpStats stats;
};

/// Number of triangle partitions; each partition is one root-to-full path in
/// the state DAG.
CountResult count_lex(const Graph& g);

}  // namespace tripart

#endif
