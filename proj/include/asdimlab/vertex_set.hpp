#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace asdimlab {

// Hard ceiling on graph size: vertex sets are 64-bit masks over vertex indices.
inline constexpr std::size_t kMaxVertexCapacity = 64;

// A subset of a DefiningGraph's vertices, stored as a bitmask over the graph's
// index order (which is the lexicographic order of vertex names). Always read
// as the full subgraph it spans.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet first_n(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr VertexSet single(std::size_t v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t v) const { return (bits_ >> v) & 1U; }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  // Index of the least vertex; undefined on the empty set.
  constexpr std::size_t least() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  constexpr void insert(std::size_t v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(std::size_t v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr VertexSet with(std::size_t v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(std::size_t v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

  // Lexicographic comparison of the ascending index sequences.
  friend constexpr std::strong_ordering lex_compare(VertexSet a, VertexSet b) {
    while (!a.empty() && !b.empty()) {
      const auto x = a.least();
      const auto y = b.least();
      if (x != y) return x <=> y;
      a.erase(x);
      b.erase(y);
    }
    return a.size() <=> b.size();
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (auto b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  // Calls f(index) for every member in ascending order.
  template <typename F>
  constexpr void for_each(F&& f) const {
    for (auto b = bits_; b != 0; b &= b - 1) f(static_cast<std::size_t>(std::countr_zero(b)));
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace asdimlab
