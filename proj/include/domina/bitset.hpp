#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace domina {

// Hard cap on internal graph order. Serialized (graph6) graphs stop at 62
// vertices; in-memory graphs may go up to this limit.
inline constexpr int kMaxVertices = 128;

// Subset of {0, ..., universe-1} stored in two 64-bit words, no heap.
// Bits at or above the universe are always zero.
class VertexSet {
  static constexpr int kWords = kMaxVertices / 64;

 public:
  VertexSet() = default;

  explicit VertexSet(int universe) : universe_(universe) {
    assert(universe >= 0 && universe <= kMaxVertices);
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (int w = 0; w < kWords; ++w) {
      const int lo = w * 64;
      if (universe <= lo) break;
      const int bits = universe - lo >= 64 ? 64 : universe - lo;
      s.words_[w] = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
    }
    return s;
  }

  int universe() const { return universe_; }

  bool test(int v) const {
    assert(v >= 0 && v < universe_);
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }

  void set(int v) {
    assert(v >= 0 && v < universe_);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void reset(int v) {
    assert(v >= 0 && v < universe_);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  void clear() { words_ = {}; }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const VertexSet& other) const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }

  bool intersects(const VertexSet& other) const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & other.words_[w]) return true;
    return false;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }

  // Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet& o) const {
    return universe_ == o.universe_ && words_ == o.words_;
  }

  // Smallest member, or -1 if empty.
  int first() const { return next(0); }

  // Smallest member >= from, or -1 if none.
  int next(int from) const {
    if (from >= universe_) return -1;
    int w = from >> 6;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (cur) return w * 64 + std::countr_zero(cur);
      if (++w >= kWords) return -1;
      cur = words_[w];
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v = first(); v >= 0; v = next(v + 1)) out.push_back(v);
    return out;
  }

  // Range-for over members in ascending order.
  class iterator {
   public:
    iterator(const VertexSet* s, int v) : s_(s), v_(v) {}
    int operator*() const { return v_; }
    iterator& operator++() {
      v_ = s_->next(v_ + 1);
      return *this;
    }
    bool operator!=(const iterator& o) const { return v_ != o.v_; }

   private:
    const VertexSet* s_;
    int v_;
  };

  iterator begin() const { return iterator(this, first()); }
  iterator end() const { return iterator(this, -1); }

 private:
  std::array<std::uint64_t, kWords> words_{};
  int universe_ = 0;
};

}  // namespace domina
