#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "eqdim/equalizer.hpp"
#include "eqdim/graph.hpp"

namespace eqdim {

struct ResolvingCertificate {
  bool valid = false;
  std::optional<std::pair<uint32_t, uint32_t>> failing_pair;
};

ResolvingCertificate verify_resolving(const Graph& g, const VertexSet& s);

// Exact metric dimension; same search kernel and witness canon as
// eqdim_exact.
EqdimResult dim_exact(const Graph& g, uint64_t budget = kDefaultBudget);

// Verdict for a candidate doubly resolving set: for each pair a witness pair
// (u, v) with d(u,x) - d(u,y) != d(v,x) - d(v,y), or the first pair no two
// members tell apart.
struct DoublyResolvingCertificate {
  struct PairResolvers {
    uint32_t x, y, u, v;
  };
  bool valid = false;
  std::vector<PairResolvers> resolvers;                   // present iff valid
  std::optional<std::pair<uint32_t, uint32_t>> failing_pair;
};

DoublyResolvingCertificate verify_doubly_resolving(const Graph& g,
                                                   const VertexSet& s);

// Minimum doubly resolving set size with its least witness. The witness is
// checked to be resolving before returning, so the result never drops below
// the metric dimension. Orders below 2 are rejected.
EqdimResult psi_exact(const Graph& g, uint64_t budget = kDefaultBudget);

// Doubly resolving set assembled from a resolving set and a
// distance-equalizer set: pairs outside b are handled by a resolver plus an
// equidistant member, pairs inside b by themselves, and each member of b
// gets at most one patch vertex. Output size is at most |a| + 2|b|.
VertexSet doubly_from_eqdim(const Graph& g, const VertexSet& a,
                            const VertexSet& b);

// Minimum doubly resolving set of a tree: the set of leaves.
std::pair<int, VertexSet> tree_psi(const Graph& t);

}  // namespace eqdim
