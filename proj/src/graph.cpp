#include "tripart/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace tripart {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (n > kMaxVertices) {
        throw capacity_error("graph has " + std::to_string(n) + " vertices; at most " +
                             std::to_string(kMaxVertices) + " supported");
    }
    adj_.assign(static_cast<std::size_t>(n), VertexSet{});
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n) {
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") has a label outside 1.." + std::to_string(n));
        }
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        adj_[u - 1] = adj_[u - 1].with(v);
        adj_[v - 1] = adj_[v - 1].with(u);
    }
    std::size_t degree_sum = 0;
    for (auto a : adj_) degree_sum += static_cast<std::size_t>(a.size());
    m_ = degree_sum / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 1; u <= n_; ++u) {
        (neighbors(u) & above(u)).for_each([&](Vertex v) { out.emplace_back(u, v); });
    }
    return out;
}

Triangle make_triangle(Vertex x, Vertex y, Vertex z) {
    if (x > y) std::swap(x, y);
    if (y > z) std::swap(y, z);
    if (x > y) std::swap(x, y);
    return {x, y, z};
}

// ---- DIMACS -------------------------------------------------------------------

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
    throw parse_error("line " + std::to_string(line_no) + ": " + what);
}

// Reads exactly `count` integers from the rest of the line.
std::vector<long long> read_ints(std::istringstream& ls, std::size_t count, std::size_t line_no,
                                 const std::string& line) {
    std::vector<long long> vals;
    long long x = 0;
    while (ls >> x) vals.push_back(x);
    if (!ls.eof() || vals.size() != count) fail(line_no, "malformed line '" + line + "'");
    return vals;
}

}  // namespace

Graph parse_graph(std::istream& in) {
    std::optional<int> n;
    std::vector<Edge> edges;
    std::string line;
    std::size_t line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            if (n) fail(line_no, "duplicate problem line");
            if (!(ls >> kind) || kind != "edge") fail(line_no, "expected 'p edge <n> <m>'");
            std::vector<long long> vals;
            long long x = 0;
            while (ls >> x) vals.push_back(x);
            if (!ls.eof()) fail(line_no, "malformed line '" + line + "'");
            if (vals.size() < 2) fail(line_no, "problem line is missing n or m");
            if (vals.size() > 2) fail(line_no, "malformed line '" + line + "'");
            if (vals[0] < 0 || vals[1] < 0) fail(line_no, "negative n or m");
            if (vals[0] > kMaxVertices) {
                throw capacity_error("graph has " + std::to_string(vals[0]) +
                                     " vertices; at most " + std::to_string(kMaxVertices) +
                                     " supported");
            }
            n = static_cast<int>(vals[0]);
        } else if (tag == "e") {
            if (!n) fail(line_no, "edge before problem line");
            auto vals = read_ints(ls, 2, line_no, line);
            if (vals[0] < 1 || vals[0] > *n || vals[1] < 1 || vals[1] > *n) {
                fail(line_no, "vertex label out of range 1.." + std::to_string(*n));
            }
            if (vals[0] == vals[1]) fail(line_no, "self-loop at vertex " + std::to_string(vals[0]));
            edges.emplace_back(static_cast<Vertex>(vals[0]), static_cast<Vertex>(vals[1]));
        } else {
            fail(line_no, "malformed line '" + line + "'");
        }
    }
    if (in.bad()) throw parse_error("read error");
    if (!n) throw parse_error("missing problem line 'p edge <n> <m>'");
    return Graph(*n, edges);
}

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

void serialize_graph(const Graph& g, std::ostream& out) {
    out << "p edge " << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    serialize_graph(g, out);
    return out.str();
}

// ---- generators ---------------------------------------------------------------

std::optional<Family> family_from_string(std::string_view name) {
    for (auto f : {Family::complete, Family::cycle, Family::prism, Family::disjoint_triangles,
                   Family::gnp, Family::planted}) {
        if (to_string(f) == name) return f;
    }
    return std::nullopt;
}

std::string_view to_string(Family f) {
    switch (f) {
        case Family::complete: return "complete";
        case Family::cycle: return "cycle";
        case Family::prism: return "prism";
        case Family::disjoint_triangles: return "disjoint_triangles";
        case Family::gnp: return "gnp";
        case Family::planted: return "planted";
    }
    return "?";
}

namespace {

bool coin(std::mt19937_64& rng, double p) {
    constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
    return static_cast<double>(rng() >> 11) * kScale < p;
}

}  // namespace

Graph generate(Family family, int n, std::optional<double> p, std::uint64_t seed) {
    auto reject = [&](const std::string& why) -> Graph {
        throw std::invalid_argument(std::string(to_string(family)) + ": " + why);
    };
    const bool random = family == Family::gnp || family == Family::planted;
    if (n < 1) return reject("n must be at least 1");
    if (n > kMaxVertices) {
        throw capacity_error("n=" + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
    }
    if (random && !p) return reject("probability p required");
    if (!random && p) return reject("probability p not applicable");
    if (p && !(*p >= 0.0 && *p <= 1.0)) return reject("p must lie in [0,1]");

    std::vector<Edge> edges;
    switch (family) {
        case Family::complete:
            for (Vertex u = 1; u <= n; ++u)
                for (Vertex v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
            break;
        case Family::cycle:
            if (n < 3) return reject("cycle needs n >= 3");
            for (Vertex v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
            edges.emplace_back(1, n);
            break;
        case Family::prism:
            if (n != 6) return reject("prism needs n = 6");
            edges = {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {1, 4}, {2, 5}, {3, 6}};
            break;
        case Family::disjoint_triangles:
        case Family::planted: {
            if (n % 3 != 0) return reject("n must be divisible by 3");
            for (Vertex b = 1; b <= n; b += 3) {
                edges.insert(edges.end(), {{b, b + 1}, {b + 1, b + 2}, {b, b + 2}});
            }
            if (family == Family::planted) {
                std::mt19937_64 rng(seed);
                for (Vertex u = 1; u <= n; ++u) {
                    for (Vertex v = u + 1; v <= n; ++v) {
                        if ((u - 1) / 3 == (v - 1) / 3) continue;  // planted block
                        if (coin(rng, *p)) edges.emplace_back(u, v);
                    }
                }
            }
            break;
        }
        case Family::gnp: {
            std::mt19937_64 rng(seed);
            for (Vertex u = 1; u <= n; ++u)
                for (Vertex v = u + 1; v <= n; ++v)
                    if (coin(rng, *p)) edges.emplace_back(u, v);
            break;
        }
    }
    return Graph(n, edges);
}

// ---- triangle primitives -------------------------------------------------------

bool is_triangle(const Graph& g, Vertex a, Vertex b, Vertex c) {
    return g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c);
}

std::uint32_t triangle_count_within(const Graph& g, VertexSet s) {
    std::uint32_t count = 0;
    s.for_each([&](Vertex u) {
        (g.neighbors(u) & s & above(u)).for_each([&](Vertex v) {
            count += static_cast<std::uint32_t>((g.neighbors(u) & g.neighbors(v) & s & above(v)).size());
        });
    });
    return count;
}

std::string_view to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::not_a_triangle: return "not-a-triangle";
        case ViolationKind::overlap: return "overlap";
        case ViolationKind::incomplete_cover: return "incomplete-cover";
        case ViolationKind::bad_label: return "bad-label";
    }
    return "?";
}

namespace {

std::string describe(const Triangle& t) {
    return "{" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c) + "}";
}

}  // namespace

std::optional<Violation> validate_partition(const Graph& g, const TrianglePartition& p) {
    VertexSet covered;
    for (const auto& t : p.triangles) {
        for (Vertex v : {t.a, t.b, t.c}) {
            if (v < 1 || v > g.n()) {
                return Violation{ViolationKind::bad_label, t, v,
                                 "bad-label " + std::to_string(v) + " in " + describe(t)};
            }
        }
        if (t.a == t.b || t.b == t.c || t.a == t.c) {
            return Violation{ViolationKind::bad_label, t, t.a == t.b || t.a == t.c ? t.a : t.b,
                             "bad-label repeated vertex in " + describe(t)};
        }
        for (Vertex v : {t.a, t.b, t.c}) {
            if (covered.contains(v)) {
                return Violation{ViolationKind::overlap, t, v,
                                 "overlap at vertex " + std::to_string(v) + " in " + describe(t)};
            }
        }
        if (!is_triangle(g, t.a, t.b, t.c)) {
            return Violation{ViolationKind::not_a_triangle, t, 0, "not-a-triangle " + describe(t)};
        }
        covered = covered.with(t.a).with(t.b).with(t.c);
    }
    if (covered != g.vertices()) {
        Vertex missing = (~covered & g.vertices()).min();
        return Violation{ViolationKind::incomplete_cover, Triangle{}, missing,
                         "incomplete-cover: vertex " + std::to_string(missing) + " uncovered"};
    }
    return std::nullopt;
}

}  // namespace tripart
