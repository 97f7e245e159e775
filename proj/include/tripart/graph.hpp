#ifndef TRIPART_GRAPH_HPP
#define TRIPART_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tripart/vertex_set.hpp"

namespace tripart {

/// Malformed graph text.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input exceeds a size guard (n > 63, memory guards).
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 1..n with bitmask adjacency.
/// Immutable once constructed.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops and
    /// out-of-range labels throw std::invalid_argument; n > 63 throws capacity_error.
    Graph(int n, const std::vector<Edge>& edges);

    int n() const { return n_; }
    std::size_t m() const { return m_; }

    VertexSet neighbors(Vertex v) const { return adj_[v - 1]; }
    bool has_edge(Vertex u, Vertex v) const { return adj_[u - 1].contains(v); }
    VertexSet vertices() const { return VertexSet::full(n_); }

    /// Distinct edges (u, v), u < v, ascending.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<VertexSet> adj_;
};

struct Triangle {
    Vertex a = 0, b = 0, c = 0;

    auto operator<=>(const Triangle&) const = default;
};

/// Returns the triple with its vertices in ascending order.
Triangle make_triangle(Vertex x, Vertex y, Vertex z);

/// Triangles sorted lexicographically; q == triangles.size().
struct TrianglePartition {
    std::vector<Triangle> triangles;

    std::size_t q() const { return triangles.size(); }
    bool operator==(const TrianglePartition&) const = default;
};

// ---- DIMACS edge format -----------------------------------------------------

Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);
void serialize_graph(const Graph& g, std::ostream& out);
std::string serialize_graph(const Graph& g);

// ---- generators -------------------------------------------------------------

enum class Family { complete, cycle, prism, disjoint_triangles, gnp, planted };

std::optional<Family> family_from_string(std::string_view name);
std::string_view to_string(Family f);

/// Deterministic graph families. Random families draw from std::mt19937_64
/// seeded with `seed`, one 64-bit draw per candidate pair in row-major order
/// (u < v ascending); a pair becomes an edge when (draw >> 11) * 2^-53 < p.
/// planted skips the draw for pairs inside its planted triangles.
/// Throws std::invalid_argument on unsupported parameter combinations.
Graph generate(Family family, int n, std::optional<double> p = std::nullopt,
               std::uint64_t seed = 0);

// ---- triangle primitives ----------------------------------------------------

bool is_triangle(const Graph& g, Vertex a, Vertex b, Vertex c);

/// Number of triangles of g with all three vertices in s.
std::uint32_t triangle_count_within(const Graph& g, VertexSet s);

enum class ViolationKind { not_a_triangle, overlap, incomplete_cover, bad_label };

std::string_view to_string(ViolationKind k);

struct Violation {
    ViolationKind kind;
    Triangle triple;      // offending triple (zeroed for incomplete_cover)
    Vertex vertex = 0;    // overlapping / uncovered / bad vertex when applicable
    std::string message;
};

/// std::nullopt when p is a triangle partition of g, otherwise the first
/// violated clause scanning triples in order.
std::optional<Violation> validate_partition(const Graph& g, const TrianglePartition& p);

}  // namespace tripart

#endif
