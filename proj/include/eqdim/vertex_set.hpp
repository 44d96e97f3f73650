#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace eqdim {

// Bitset over a fixed universe {0, ..., n-1}. Holds vertex sets everywhere,
// and sets of vertex-pair indices inside the search kernels.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(uint32_t n) : n_(n), w_(word_count(n), 0) {}

  static VertexSet full(uint32_t n) {
    VertexSet s(n);
    for (auto& w : s.w_) w = ~uint64_t{0};
    s.trim();
    return s;
  }

  static VertexSet of(uint32_t n, std::initializer_list<uint32_t> vs) {
    VertexSet s(n);
    for (uint32_t v : vs) s.set(v);
    return s;
  }

  static VertexSet of(uint32_t n, const std::vector<uint32_t>& vs) {
    VertexSet s(n);
    for (uint32_t v : vs) s.set(v);
    return s;
  }

  uint32_t universe() const { return n_; }

  bool test(uint32_t v) const {
    assert(v < n_);
    return (w_[v >> 6] >> (v & 63)) & 1u;
  }

  void set(uint32_t v) {
    assert(v < n_);
    w_[v >> 6] |= uint64_t{1} << (v & 63);
  }

  void reset(uint32_t v) {
    assert(v < n_);
    w_[v >> 6] &= ~(uint64_t{1} << (v & 63));
  }

  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  uint32_t count() const {
    uint32_t c = 0;
    for (uint64_t w : w_) c += static_cast<uint32_t>(std::popcount(w));
    return c;
  }

  bool none() const {
    for (uint64_t w : w_)
      if (w) return false;
    return true;
  }

  bool any() const { return !none(); }
  bool empty_set() const { return none(); }

  VertexSet& operator|=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }

  void and_not(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

  bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  bool intersects(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool subset_of(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  VertexSet complemented() const {
    VertexSet s(n_);
    for (size_t i = 0; i < w_.size(); ++i) s.w_[i] = ~w_[i];
    s.trim();
    return s;
  }

  // First member, or -1 when empty.
  int first() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
    return -1;
  }

  // Smallest member strictly greater than v, or -1.
  int next_after(uint32_t v) const {
    uint32_t i = (v + 1) >> 6;
    if (i >= w_.size()) return -1;
    uint64_t w = w_[i] & (~uint64_t{0} << ((v + 1) & 63));
    while (true) {
      if (w) return static_cast<int>(i * 64 + std::countr_zero(w));
      if (++i >= w_.size()) return -1;
      w = w_[i];
    }
  }

  std::vector<uint32_t> elements() const {
    std::vector<uint32_t> out;
    out.reserve(count());
    for (int v = first(); v >= 0; v = next_after(static_cast<uint32_t>(v)))
      out.push_back(static_cast<uint32_t>(v));
    return out;
  }

  // Order on the increasing element sequences; used as the canonical
  // tie-break so witnesses come out the same on every run.
  bool lex_less(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t diff = w_[i] ^ o.w_[i];
      if (diff) {
        uint64_t low = diff & ~(diff - 1);
        return (w_[i] & low) != 0;  // holder of the lowest differing element
      }
    }
    return false;
  }

 private:
  static size_t word_count(uint32_t n) { return (static_cast<size_t>(n) + 63) / 64; }

  void trim() {
    if (n_ & 63) w_.back() &= (uint64_t{1} << (n_ & 63)) - 1;
  }

  uint32_t n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace eqdim
