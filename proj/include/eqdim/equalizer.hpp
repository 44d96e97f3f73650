#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqdim/distance.hpp"
#include "eqdim/graph.hpp"

namespace eqdim {

inline constexpr uint64_t kDefaultBudget = 200'000'000;

// Verdict for a candidate distance-equalizer set: a witness per outside pair
// on success, or the lexicographically first pair with no equidistant member.
struct EqualizerCertificate {
  struct PairWitness {
    uint32_t x, y, w;
  };
  bool valid = false;
  std::vector<PairWitness> witness_map;                   // present iff valid
  std::optional<std::pair<uint32_t, uint32_t>> failing_pair;
};

EqualizerCertificate verify_distance_equalizer(const Graph& g, const VertexSet& s);
EqualizerCertificate verify_distance_equalizer(const Graph& g, const DistanceMatrix& d,
                                               const VertexSet& s,
                                               bool record_witnesses = true);

// Named lower and upper bounds with their values; best_lower/best_upper are
// the tightest of each side.
struct BoundsReport {
  std::vector<std::pair<std::string, int>> lower;
  std::vector<std::pair<std::string, int>> upper;
  int best_lower = 0;
  int best_upper = 0;
};

BoundsReport bounds(const Graph& g);
BoundsReport bounds(const Graph& g, const DistanceMatrix& d);

// Exact clique and independence numbers by branch and bound with a greedy
// coloring bound. Capped at 128 vertices.
int clique_number(const Graph& g);
int independence_number(const Graph& g);

// Result of an exact search: either the value with its least witness, or the
// best-known interval when the node budget ran out first.
struct EqdimResult {
  std::optional<int> value;
  std::optional<VertexSet> witness;
  int lower = 0;
  int upper = 0;
  uint64_t nodes = 0;
  bool exact() const { return value.has_value(); }
};

// Minimum distance-equalizer set by pruned search: target sizes grow from the
// best lower bound, candidate sets are tried in lexicographic order, and for
// bipartite graphs only supersets of a partite set are visited. The witness
// is the lexicographically least minimum set.
EqdimResult eqdim_exact(const Graph& g, uint64_t budget = kDefaultBudget);

}  // namespace eqdim
