#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace indcore {

using Vertex = std::uint32_t;

/// Fixed-universe bitset over vertex ids [0, universe).
///
/// Sets of up to 64 vertices live inline, which keeps the exhaustive
/// small-graph sweeps free of heap traffic. All binary operations require
/// both operands to share the same universe.
class VertexSet {
 public:
  static constexpr Vertex npos = std::numeric_limits<Vertex>::max();

  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : size_(universe), words_(word_count(universe), 0) {}

  VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) set(v);
  }

  template <class Range>
  static VertexSet from_range(std::size_t universe, const Range& members) {
    VertexSet s(universe);
    for (auto v : members) s.set(static_cast<Vertex>(v));
    return s;
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  std::size_t universe() const noexcept { return size_; }

  bool test(Vertex v) const noexcept {
    return v < size_ && ((words_[v >> 6] >> (v & 63)) & 1u);
  }
  void set(Vertex v) noexcept {
    assert(v < size_);
    words_[v >> 6] |= bit(v);
  }
  void reset(Vertex v) noexcept {
    assert(v < size_);
    words_[v >> 6] &= ~bit(v);
  }
  void clear() noexcept {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool any() const noexcept { return !empty(); }

  bool is_subset_of(const VertexSet& o) const noexcept {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const VertexSet& o) const noexcept {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  /// Lowest member, or npos.
  Vertex first() const noexcept { return scan(0); }
  /// Lowest member strictly greater than v, or npos.
  Vertex next(Vertex v) const noexcept { return v + 1 >= size_ ? npos : scan(v + 1); }

  /// k-th smallest member (0-based); npos if k >= count().
  Vertex nth(std::size_t k) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = words_[i];
      auto c = static_cast<std::size_t>(std::popcount(w));
      if (k < c) {
        for (; k > 0; --k) w &= w - 1;
        return static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      }
      k -= c;
    }
    return npos;
  }

  VertexSet& operator&=(const VertexSet& o) noexcept {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) noexcept {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) noexcept {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) noexcept { return a -= b; }

  /// Complement within the universe.
  VertexSet complemented() const {
    VertexSet s = *this;
    for (auto& w : s.words_) w = ~w;
    s.trim();
    return s;
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for (Vertex v : *this) out.push_back(v);
    return out;
  }

  std::size_t hash() const noexcept {
    std::size_t h = size_ * 0x9E3779B97F4A7C15ull;
    for (auto w : words_) h = (h ^ w) * 0x100000001B3ull + (h >> 29);
    return h;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) noexcept {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    iterator() = default;
    iterator(const VertexSet* s, Vertex v) : set_(s), v_(v) {}
    Vertex operator*() const noexcept { return v_; }
    iterator& operator++() noexcept {
      v_ = set_->next(v_);
      return *this;
    }
    iterator operator++(int) noexcept {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) noexcept { return a.v_ == b.v_; }

   private:
    const VertexSet* set_ = nullptr;
    Vertex v_ = npos;
  };

  iterator begin() const noexcept { return {this, first()}; }
  iterator end() const noexcept { return {this, npos}; }

 private:
  static constexpr std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }
  static constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v & 63); }

  Vertex scan(std::size_t from) const noexcept {
    std::size_t i = from >> 6;
    if (i >= words_.size()) return npos;
    std::uint64_t w = words_[i] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      if (++i == words_.size()) return npos;
      w = words_[i];
    }
  }

  void trim() noexcept {
    if (size_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  std::size_t size_ = 0;
  boost::container::small_vector<std::uint64_t, 1> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

}  // namespace indcore
