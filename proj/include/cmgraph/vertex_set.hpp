#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmgraph {

/// Vertices are labeled 1..n throughout the library.
using Vertex = int;

/// Largest vertex label a VertexSet can hold.
inline constexpr int kMaxVertices = 64;

/**
 * A subset of {1, ..., 64} stored as a bitmask (bit v-1 <=> vertex v).
 *
 * Ordering is lexicographic on the sorted member tuples, so sorting a list
 * of sets gives the canonical order used by every enumeration in the library.
 */
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}

    Vertex operator*() const { return std::countr_zero(rest_) + 1; }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members) {
    for (Vertex v : members) insert(v);
  }
  explicit VertexSet(const std::vector<Vertex>& members) {
    for (Vertex v : members) insert(v);
  }

  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }
  /// {1, ..., n}
  static VertexSet range(int n) {
    check_label(n == 0 ? 1 : n);
    if (n == 0) return {};
    return from_bits(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet singleton(Vertex v) {
    VertexSet s;
    s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  bool contains(Vertex v) const {
    return v >= 1 && v <= kMaxVertices && ((bits_ >> (v - 1)) & 1U);
  }
  /// Smallest member; undefined on the empty set.
  Vertex min() const { return std::countr_zero(bits_) + 1; }
  /// Largest member; undefined on the empty set.
  Vertex max() const { return kMaxVertices - std::countl_zero(bits_); }

  void insert(Vertex v) {
    check_label(v);
    bits_ |= std::uint64_t{1} << (v - 1);
  }
  void erase(Vertex v) {
    check_label(v);
    bits_ &= ~(std::uint64_t{1} << (v - 1));
  }

  constexpr bool is_subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  std::vector<Vertex> members() const { return {begin(), end()}; }
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return from_bits(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return from_bits(a.bits_ & b.bits_);
  }
  /// Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return from_bits(a.bits_ & ~b.bits_);
  }
  VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }

  // Lexicographic on sorted tuples: a proper prefix sorts first.
  friend constexpr std::strong_ordering operator<=>(VertexSet a, VertexSet b) {
    const std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return std::strong_ordering::equal;
    const int low = std::countr_zero(diff);
    const std::uint64_t above = low == 63 ? 0 : (~std::uint64_t{0} << (low + 1));
    if ((b.bits_ >> low) & 1U) {
      // b has the smaller next element unless a has run out.
      return (a.bits_ & above) == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return (b.bits_ & above) == 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (Vertex v : *this) {
      if (!first) out += ",";
      out += std::to_string(v);
      first = false;
    }
    return out + "}";
  }

 private:
  static void check_label(Vertex v) {
    if (v < 1 || v > kMaxVertices) {
      throw std::out_of_range("vertex label " + std::to_string(v) + " outside 1.." +
                              std::to_string(kMaxVertices));
    }
  }

  std::uint64_t bits_ = 0;
};

/// Orders by size first, then lexicographically. Used for face iteration.
struct BySizeThenLex {
  bool operator()(VertexSet a, VertexSet b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

}  // namespace cmgraph
