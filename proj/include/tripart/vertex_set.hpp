#ifndef TRIPART_VERTEX_SET_HPP
#define TRIPART_VERTEX_SET_HPP

#include <bit>
#include <cstdint>

namespace tripart {

/// Vertex labels are 1-based; vertex v lives in bit (v - 1).
using Vertex = int;

/// Largest vertex count a single 64-bit mask can hold.
inline constexpr int kMaxVertices = 63;

/// Subset of {1..n} stored as a 64-bit mask.
struct VertexSet {
    std::uint64_t bits = 0;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t b) : bits(b) {}

    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << (v - 1)); }

    constexpr bool contains(Vertex v) const { return (bits >> (v - 1)) & 1U; }
    constexpr int size() const { return std::popcount(bits); }
    constexpr bool empty() const { return bits == 0; }
    /// Least member; undefined on the empty set.
    constexpr Vertex min() const { return std::countr_zero(bits) + 1; }

    constexpr VertexSet with(Vertex v) const { return VertexSet(bits | single(v).bits); }
    constexpr VertexSet without(Vertex v) const { return VertexSet(bits & ~single(v).bits); }
    constexpr bool is_subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits | o.bits); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits & o.bits); }
    constexpr VertexSet operator~() const { return VertexSet(~bits); }
    constexpr bool operator==(const VertexSet&) const = default;

    /// Calls fn(v) for every member in ascending order.
    template <typename Fn>
    constexpr void for_each(Fn&& fn) const {
        for (std::uint64_t b = bits; b != 0; b &= b - 1) {
            fn(std::countr_zero(b) + 1);
        }
    }
};

/// Members strictly greater than v.
constexpr VertexSet above(Vertex v) {
    return VertexSet(v >= 64 ? 0 : ~std::uint64_t{0} << v);
}

}  // namespace tripart

#endif
