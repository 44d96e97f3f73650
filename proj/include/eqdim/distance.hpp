#pragma once

#include <cstdint>
#include <vector>

#include "eqdim/graph.hpp"

namespace eqdim {

// Exact hop distances between all vertex pairs, from one BFS per source.
// Immutable after construction; safe to share across threads.
class DistanceMatrix {
 public:
  static DistanceMatrix build(const Graph& g);  // throws when disconnected

  uint32_t order() const { return n_; }
  uint32_t at(uint32_t u, uint32_t v) const {
    return d_[static_cast<size_t>(u) * n_ + v];
  }
  uint32_t diameter() const { return diameter_; }

 private:
  uint32_t n_ = 0;
  uint32_t diameter_ = 0;
  std::vector<uint16_t> d_;
};

inline DistanceMatrix all_pairs_distances(const Graph& g) {
  return DistanceMatrix::build(g);
}

inline bool is_equidistant(uint32_t w, uint32_t x, uint32_t y,
                           const DistanceMatrix& d) {
  return d.at(x, w) == d.at(y, w);
}

}  // namespace eqdim
