#pragma once

#include <cstdint>
#include <vector>

#include "eqdim/vertex_set.hpp"

namespace eqdim {

// Set of distinct integers in [1..bound], kept sorted.
struct IntSet {
  uint32_t bound = 0;
  std::vector<uint32_t> members;

  IntSet() = default;
  IntSet(uint32_t bound, std::vector<uint32_t> ms);  // validates and sorts
};

// True when no three distinct members a, b, c satisfy a + c = 2b.
bool is_3ap_free(const IntSet& t);

// True when all members share one parity (vacuously for |t| <= 1).
bool is_even_sum(const IntSet& t);

// Largest size of a progression-free subset of [1..n], with the
// lexicographically least witness of that size.
struct RnRecord {
  uint32_t n = 0;
  uint32_t r_value = 0;
  IntSet witness;
};

uint32_t r_search_limit();          // 123
RnRecord r_exact(uint32_t n);       // memoized; throws beyond the limit

enum class Parity { odd, even };

// Doubling map {k_i} -> {2k_i - 1} or {2k_i}; keeps progression-freeness in
// both directions. Members must lie in [1..ceil(n/2)] and land inside [1..n].
IntSet lift(const IntSet& k, Parity parity, uint32_t n);

// Minimum distance-equalizer set of the n-vertex path, 0-based: the
// complement of a lifted maximum progression-free set of [1..ceil(n/2)].
// Size is always n - r(ceil(n/2)). Self-checks against the verifier.
VertexSet path_equalizer(uint32_t n);

// Queens at (k, k) for k in K on an n x n board: true when every square
// shares a row, column or diagonal with one of them.
bool is_diagonal_dominating(const IntSet& k, uint32_t n);

}  // namespace eqdim
