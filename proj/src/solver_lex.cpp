#include "tripart/solver_lex.hpp"

#include <cassert>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace tripart {

Vertex min_uncovered(VertexSet s, int n) {
    VertexSet open = ~s & VertexSet::full(n);
    if (open.empty()) throw std::invalid_argument("min_uncovered: every vertex is covered");
    return open.min();
}

bool is_valid_state(VertexSet s) {
    int size = s.size();
    if (size % 3 != 0) return false;
    return VertexSet::full(size / 3).is_subset_of(s);
}

std::vector<Successor> lex_successors(const Graph& g, DpState s) {
    std::vector<Successor> out;
    const Vertex m = min_uncovered(s.covered, g.n());
    const VertexSet open = ~s.covered & g.vertices() & above(m);
    const VertexSet cand = g.neighbors(m) & open;
    cand.for_each([&](Vertex u) {
        (cand & g.neighbors(u) & above(u)).for_each([&](Vertex v) {
            DpState next{s.covered.with(m).with(u).with(v)};
            assert(is_valid_state(next.covered));
            out.push_back({Triangle{m, u, v}, next});
        });
    });
    return out;
}

namespace {

class LexSearch {
public:
    explicit LexSearch(const Graph& g) : g_(g), full_(g.vertices()) {}

    bool search(DpState s) {
        assert(is_valid_state(s.covered));
        ++stats_.states_visited;
        if (s.covered == full_) return true;
        auto succ = lex_successors(g_, s);
        stats_.transitions_explored += succ.size();
        for (const auto& [tri, next] : succ) {
            if (dead_.contains(next.covered.bits)) continue;
            path_.push_back(tri);
            if (search(next)) return true;
            path_.pop_back();
        }
        dead_.insert(s.covered.bits);
        return false;
    }

    mpz_class count(DpState s) {
        if (auto it = counts_.find(s.covered.bits); it != counts_.end()) return it->second;
        assert(is_valid_state(s.covered));
        mpz_class total = 0;
        if (s.covered == full_) {
            total = 1;
        } else {
            auto succ = lex_successors(g_, s);
            stats_.transitions_explored += succ.size();
            for (const auto& sc : succ) total += count(sc.next);
        }
        counts_.emplace(s.covered.bits, total);
        stats_.states_visited = counts_.size();
        return total;
    }

    const DpStats& stats() const { return stats_; }
    std::vector<Triangle> take_path() { return std::move(path_); }

private:
    const Graph& g_;
    VertexSet full_;
    DpStats stats_;
    std::unordered_set<std::uint64_t> dead_;
    std::unordered_map<std::uint64_t, mpz_class> counts_;
    std::vector<Triangle> path_;
};

}  // namespace

SolveResult solve_lex(const Graph& g) {
    SolveResult result;
    if (g.n() % 3 != 0) return result;
    LexSearch search(g);
    if (search.search(DpState{})) {
        result.partition = TrianglePartition{search.take_path()};
    }
    result.stats = search.stats();
    return result;
}

CountResult count_lex(const Graph& g) {
    CountResult result;
    if (g.n() % 3 != 0) return result;
    LexSearch search(g);
    result.count = search.count(DpState{});
    result.stats = search.stats();
    return result;
}

}  // namespace tripart
