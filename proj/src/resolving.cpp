#include "eqdim/resolving.hpp"

#include <cassert>
#include <stdexcept>

#include "eqdim/detail/pair_cover.hpp"
#include "eqdim/distance.hpp"

namespace eqdim {

namespace {

// x and y are told apart twice over by the members of s iff the offsets
// d(u,x) - d(u,y) do not all agree on s.
bool doubly_resolved(const DistanceMatrix& d, const std::vector<uint32_t>& s,
                     uint32_t x, uint32_t y) {
  int first = static_cast<int>(d.at(s[0], x)) - static_cast<int>(d.at(s[0], y));
  for (size_t i = 1; i < s.size(); ++i)
    if (static_cast<int>(d.at(s[i], x)) - static_cast<int>(d.at(s[i], y)) != first)
      return true;
  return false;
}

// Increasing-size search for the least doubly resolving set. Per pair, the
// DFS tracks the one offset seen so far until a second one discharges it.
struct PsiSearch {
  const DistanceMatrix& d;
  uint32_t n;
  uint32_t npairs;
  std::vector<std::vector<int16_t>> offset;  // offset[v][pair]
  uint64_t budget;
  uint64_t nodes = 0;
  bool out_of_budget = false;

  std::vector<uint32_t> chosen;
  std::vector<std::vector<int16_t>> seen;    // per depth; INT16_MIN = none yet
  std::vector<uint32_t> open_count;          // pairs not yet discharged

  explicit PsiSearch(const DistanceMatrix& dm, uint64_t budget)
      : d(dm), n(dm.order()), npairs(n * (n - 1) / 2), budget(budget) {
    offset.assign(n, std::vector<int16_t>(npairs));
    for (uint32_t y = 0; y < n; ++y)
      for (uint32_t x = 0; x < y; ++x) {
        uint32_t p = detail::pair_index(x, y);
        for (uint32_t v = 0; v < n; ++v)
          offset[v][p] = static_cast<int16_t>(static_cast<int>(d.at(v, x)) -
                                              static_cast<int>(d.at(v, y)));
      }
  }

  std::optional<VertexSet> run(uint32_t k) {
    chosen.clear();
    seen.assign(k + 1, std::vector<int16_t>(npairs, INT16_MIN));
    open_count.assign(k + 1, npairs);
    if (!dfs(0, k, 0)) return std::nullopt;
    VertexSet s(n);
    for (uint32_t v : chosen) s.set(v);
    return s;
  }

  bool dfs(uint32_t start, uint32_t slots, uint32_t depth) {
    if (++nodes > budget) {
      out_of_budget = true;
      return false;
    }
    if (slots == 0) return open_count[depth] == 0;
    for (uint32_t i = start; i + slots <= n; ++i) {
      auto& cur = seen[depth];
      auto& nxt = seen[depth + 1];
      nxt = cur;
      uint32_t open = 0;
      const auto& off = offset[i];
      for (uint32_t p = 0; p < npairs; ++p) {
        if (nxt[p] == INT16_MAX) continue;  // discharged
        if (nxt[p] == INT16_MIN)
          nxt[p] = off[p];
        else if (nxt[p] != off[p])
          nxt[p] = INT16_MAX;
      }
      for (uint32_t p = 0; p < npairs; ++p)
        if (nxt[p] != INT16_MAX) ++open;
      open_count[depth + 1] = open;
      chosen.push_back(i);
      if (dfs(i + 1, slots - 1, depth + 1)) return true;
      chosen.pop_back();
      if (out_of_budget) return false;
    }
    return false;
  }
};

}  // namespace

ResolvingCertificate verify_resolving(const Graph& g, const VertexSet& s) {
  require_connected(g);
  if (s.universe() != g.order())
    throw std::invalid_argument("vertex set indexes a different graph order");
  DistanceMatrix d = DistanceMatrix::build(g);
  ResolvingCertificate cert;
  cert.valid = true;
  // a pair with a member inside s is resolved by that member
  auto outside = s.complemented().elements();
  auto members = s.elements();
  for (size_t i = 0; i < outside.size(); ++i)
    for (size_t j = i + 1; j < outside.size(); ++j) {
      uint32_t x = outside[i], y = outside[j];
      bool ok = false;
      for (uint32_t v : members)
        if (d.at(v, x) != d.at(v, y)) {
          ok = true;
          break;
        }
      if (!ok) {
        cert.valid = false;
        cert.failing_pair = {x, y};
        return cert;
      }
    }
  return cert;
}

EqdimResult dim_exact(const Graph& g, uint64_t budget) {
  require_connected(g);
  const uint32_t n = g.order();
  DistanceMatrix d = DistanceMatrix::build(g);
  auto inst = detail::make_cover_instance(
      n, [&](uint32_t v, uint32_t x, uint32_t y) {
        return d.at(v, x) != d.at(v, y);
      });
  VertexSet no_force(n);
  EqdimResult res;
  res.upper = n >= 2 ? static_cast<int>(n - 1) : 0;
  for (uint32_t k = n == 1 ? 0 : 1;; ++k) {
    detail::KSearch search(inst, no_force, budget - res.nodes);
    auto got = search.run(k);
    res.nodes += search.nodes();
    if (got) {
      res.value = static_cast<int>(k);
      res.witness = std::move(got);
      res.lower = res.upper = static_cast<int>(k);
      return res;
    }
    if (search.out_of_budget()) {
      res.lower = static_cast<int>(k);
      return res;
    }
    if (k >= static_cast<uint32_t>(res.upper))
      throw std::logic_error("resolving search failed below its upper bound");
  }
}

DoublyResolvingCertificate verify_doubly_resolving(const Graph& g,
                                                   const VertexSet& s) {
  require_connected(g);
  if (s.universe() != g.order())
    throw std::invalid_argument("vertex set indexes a different graph order");
  if (s.count() < 2)
    throw std::invalid_argument("doubly resolving verification needs |S| >= 2");
  DistanceMatrix d = DistanceMatrix::build(g);
  auto members = s.elements();
  DoublyResolvingCertificate cert;
  cert.valid = true;
  const uint32_t n = g.order();
  for (uint32_t y = 0; y < n; ++y)
    for (uint32_t x = 0; x < y; ++x) {
      int first =
          static_cast<int>(d.at(members[0], x)) - static_cast<int>(d.at(members[0], y));
      int partner = -1;
      for (size_t i = 1; i < members.size(); ++i) {
        int off = static_cast<int>(d.at(members[i], x)) -
                  static_cast<int>(d.at(members[i], y));
        if (off != first) {
          partner = static_cast<int>(members[i]);
          break;
        }
      }
      if (partner < 0) {
        cert.valid = false;
        cert.resolvers.clear();
        cert.failing_pair = {x, y};
        return cert;
      }
      cert.resolvers.push_back({x, y, members[0], static_cast<uint32_t>(partner)});
    }
  return cert;
}

EqdimResult psi_exact(const Graph& g, uint64_t budget) {
  require_connected(g);
  const uint32_t n = g.order();
  if (n < 2)
    throw std::invalid_argument("doubly resolving sets need at least 2 vertices");
  DistanceMatrix d = DistanceMatrix::build(g);
  PsiSearch search(d, budget);
  EqdimResult res;
  res.upper = static_cast<int>(n);
  for (uint32_t k = 2;; ++k) {
    auto got = search.run(k);
    res.nodes = search.nodes;
    if (got) {
      // a doubly resolving set is in particular resolving
      if (!verify_resolving(g, *got).valid)
        throw std::logic_error("doubly resolving witness is not resolving");
      res.value = static_cast<int>(k);
      res.witness = std::move(got);
      res.lower = res.upper = static_cast<int>(k);
      return res;
    }
    if (search.out_of_budget) {
      res.lower = static_cast<int>(k);
      return res;
    }
    if (k >= n)
      throw std::logic_error("doubly resolving search failed at full order");
  }
}

VertexSet doubly_from_eqdim(const Graph& g, const VertexSet& a,
                            const VertexSet& b) {
  require_connected(g);
  if (!verify_resolving(g, a).valid)
    throw std::invalid_argument("first set is not resolving");
  DistanceMatrix d = DistanceMatrix::build(g);
  if (!verify_distance_equalizer(g, d, b, false).valid)
    throw std::invalid_argument("second set is not a distance-equalizer set");

  VertexSet ab = a;
  ab |= b;
  auto ab_members = ab.elements();
  VertexSet out = ab;

  // For x in b, at most one outside y can evade ab; patch it in.
  const uint32_t n = g.order();
  for (int xv = b.first(); xv >= 0; xv = b.next_after(static_cast<uint32_t>(xv))) {
    uint32_t x = static_cast<uint32_t>(xv);
    int patched = 0;
    for (uint32_t y = 0; y < n; ++y) {
      if (y == x || b.test(y)) continue;
      if (!doubly_resolved(d, ab_members, x, y)) {
        out.set(y);
        ++patched;
      }
    }
    assert(patched <= 1);
    (void)patched;
  }

  if (out.count() >= 2 && !verify_doubly_resolving(g, out).valid)
    throw std::logic_error("assembled set failed the doubly resolving check");
  return out;
}

std::pair<int, VertexSet> tree_psi(const Graph& t) {
  if (!t.is_tree()) throw std::invalid_argument("input graph is not a tree");
  if (t.order() < 2)
    throw std::invalid_argument("doubly resolving sets need at least 2 vertices");
  VertexSet lf = t.leaves();
  return {static_cast<int>(lf.count()), lf};
}

}  // namespace eqdim
