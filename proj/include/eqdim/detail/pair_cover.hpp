#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eqdim/vertex_set.hpp"

namespace eqdim::detail {

inline uint32_t pair_index(uint32_t x, uint32_t y) {  // requires x < y
  return y * (y - 1) / 2 + x;
}

// Covering search shared by the exact equidistant-dimension and metric-
// dimension solvers. Picking vertex v removes gain[v] from the demand set of
// vertex pairs; a set S is feasible when the demand left by its picks is
// empty. gain[v] always contains every pair with v as an endpoint (a pair
// inside S needs no witness), plus the pairs v equalizes or resolves.
struct CoverInstance {
  uint32_t n = 0;
  uint32_t npairs = 0;
  std::vector<VertexSet> gain;
  VertexSet all_pairs;
};

// Builds an instance from a predicate pred(w, x, y) telling whether picking w
// covers the pair {x, y}; endpoint membership is added automatically.
template <class Pred>
CoverInstance make_cover_instance(uint32_t n, Pred&& pred) {
  CoverInstance inst;
  inst.n = n;
  inst.npairs = n * (n - 1) / 2;
  inst.all_pairs = VertexSet::full(inst.npairs);
  inst.gain.assign(n, VertexSet(inst.npairs));
  for (uint32_t y = 0; y < n; ++y)
    for (uint32_t x = 0; x < y; ++x) {
      uint32_t p = pair_index(x, y);
      for (uint32_t w = 0; w < n; ++w)
        if (w == x || w == y || pred(w, x, y)) inst.gain[w].set(p);
    }
  return inst;
}

// Depth-first search for the lexicographically least S with forced ⊆ S and
// |S| = k that empties the demand set. Candidates are taken in increasing
// order, so the first hit is the least witness. A branch is abandoned as
// soon as the remaining candidates cannot supply the missing coverage.
class KSearch {
 public:
  KSearch(const CoverInstance& inst, const VertexSet& forced, uint64_t budget)
      : inst_(inst), forced_(forced), budget_(budget) {
    for (uint32_t v = 0; v < inst.n; ++v)
      if (!forced.test(v)) cands_.push_back(v);
    suffix_.assign(cands_.size() + 1, VertexSet(inst.npairs));
    for (size_t i = cands_.size(); i-- > 0;) {
      suffix_[i] = suffix_[i + 1];
      suffix_[i] |= inst.gain[cands_[i]];
    }
  }

  uint64_t nodes() const { return nodes_; }
  bool out_of_budget() const { return out_of_budget_; }

  std::optional<VertexSet> run(uint32_t k) {
    uint32_t base = forced_.count();
    if (k < base) return std::nullopt;
    uint32_t slots = k - base;
    if (slots > cands_.size()) return std::nullopt;
    need_.assign(slots + 1, VertexSet(inst_.npairs));
    need_[0] = inst_.all_pairs;
    for (int v = forced_.first(); v >= 0;
         v = forced_.next_after(static_cast<uint32_t>(v)))
      need_[0].and_not(inst_.gain[static_cast<uint32_t>(v)]);
    chosen_.clear();
    if (!dfs(0, slots, 0)) return std::nullopt;
    VertexSet s = forced_;
    for (uint32_t v : chosen_) s.set(v);
    return s;
  }

 private:
  bool dfs(uint32_t start, uint32_t slots, uint32_t depth) {
    if (++nodes_ > budget_) {
      out_of_budget_ = true;
      return false;
    }
    const VertexSet& need = need_[depth];
    if (slots == 0) return need.none();
    for (uint32_t i = start; i + slots <= cands_.size(); ++i) {
      if (!need.subset_of(suffix_[i])) break;  // suffixes only shrink
      need_[depth + 1] = need;
      need_[depth + 1].and_not(inst_.gain[cands_[i]]);
      chosen_.push_back(cands_[i]);
      if (dfs(i + 1, slots - 1, depth + 1)) return true;
      chosen_.pop_back();
      if (out_of_budget_) return false;
    }
    return false;
  }

  const CoverInstance& inst_;
  VertexSet forced_;
  std::vector<uint32_t> cands_;
  std::vector<VertexSet> suffix_;
  std::vector<VertexSet> need_;
  std::vector<uint32_t> chosen_;
  uint64_t budget_ = 0;
  uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
};

}  // namespace eqdim::detail
