#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "eqdim/equalizer.hpp"
#include "eqdim/graph.hpp"

namespace eqdim {

// Every labeled connected graph on n vertices, exactly once, in increasing
// edge-mask order. Internal enumeration is capped at n = 7.
void enumerate_connected(uint32_t n, const std::function<void(const Graph&)>& fn);

// Every unlabeled free tree on n vertices, exactly once, in a fixed order.
// Capped at n = 14.
void enumerate_trees(uint32_t n, const std::function<void(const Graph&)>& fn);
uint32_t tree_enumeration_limit();  // 14

// Canonical code of a free tree; equal codes mean isomorphic trees.
std::string free_tree_code(const Graph& t);

struct Counterexample {
  std::string graph6;
  std::string details;
};

// Outcome of brute-forcing one claim over a corpus. Claims that are proved
// theorems report "holds"; open conjectures never do better than "open"
// (no counterexample on this corpus), per the harness contract.
struct HarnessReport {
  std::string claim;
  std::string corpus;
  uint64_t checked = 0;
  std::vector<Counterexample> counterexamples;
  std::string status;  // "holds" | "open" | "counterexample"
  uint64_t equality_count = 0;              // psi harness: tight instances
  std::vector<std::string> equality_samples;
};

// Corpus selection: either every connected graph with 2 <= order <= n_max
// (internal enumeration), or an explicit list, e.g. from a graph6 stream.
struct Corpus {
  uint32_t n_max = 0;
  std::vector<Graph> external;
  std::string description;
};

// eqdim(T) <= eqdim(P_n) over all trees up to n_max vertices.
HarnessReport check_tree_conjecture(uint32_t n_max, uint32_t workers = 1,
                                    uint64_t budget = kDefaultBudget);

// psi(G) <= dim(G) + eqdim(G); equality cases are reported separately.
HarnessReport check_psi_conjecture(const Corpus& corpus, uint32_t workers = 1,
                                   uint64_t budget = kDefaultBudget);

// 4 <= eqdim(G) + eqdim(complement) <= n + 1 over graphs connected both ways,
// plus the degree-based complement bound.
HarnessReport check_nordhaus_gaddum(const Corpus& corpus, uint32_t workers = 1,
                                    uint64_t budget = kDefaultBudget);

// dim + eqdim lands above 3n/2 - 3 on balanced complete bipartite graphs and
// at most k + 2 on the tagged-word graphs of order 2^k + k + 1.
HarnessReport check_sigma_bounds(uint32_t n_lo, uint32_t n_hi,
                                 uint64_t budget = kDefaultBudget);

}  // namespace eqdim
