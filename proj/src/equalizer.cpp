#include "eqdim/equalizer.hpp"

#include <algorithm>
#include <stdexcept>

#include "eqdim/detail/pair_cover.hpp"

namespace eqdim {

namespace {

constexpr uint32_t kCliqueCap = 128;

detail::CoverInstance equalizer_instance(const Graph& g, const DistanceMatrix& d) {
  return detail::make_cover_instance(
      g.order(), [&](uint32_t w, uint32_t x, uint32_t y) {
        return d.at(x, w) == d.at(y, w);
      });
}

// Branch and bound over candidate bitsets; candidates get greedy colors and
// are expanded from the highest color down, pruning when the running clique
// plus the color cannot beat the incumbent.
struct CliqueSearch {
  const Graph& g;
  uint32_t best = 0;

  void expand(VertexSet pool, uint32_t rsize) {
    if (pool.none()) {
      best = std::max(best, rsize);
      return;
    }
    std::vector<std::pair<uint32_t, uint32_t>> order;  // (vertex, color)
    std::vector<VertexSet> classes;
    for (int v = pool.first(); v >= 0; v = pool.next_after(static_cast<uint32_t>(v))) {
      uint32_t u = static_cast<uint32_t>(v);
      size_t c = 0;
      while (c < classes.size() && classes[c].intersects(g.neighbors(u))) ++c;
      if (c == classes.size()) classes.emplace_back(g.order());
      classes[c].set(u);
    }
    for (size_t c = 0; c < classes.size(); ++c)
      for (int v = classes[c].first(); v >= 0;
           v = classes[c].next_after(static_cast<uint32_t>(v)))
        order.emplace_back(static_cast<uint32_t>(v), static_cast<uint32_t>(c + 1));

    for (size_t i = order.size(); i-- > 0;) {
      auto [v, color] = order[i];
      if (rsize + color <= best) return;
      VertexSet next = pool;
      next &= g.neighbors(v);
      expand(std::move(next), rsize + 1);
      pool.reset(v);
    }
  }
};

}  // namespace

EqualizerCertificate verify_distance_equalizer(const Graph& g, const VertexSet& s) {
  require_connected(g);
  return verify_distance_equalizer(g, DistanceMatrix::build(g), s);
}

EqualizerCertificate verify_distance_equalizer(const Graph& g, const DistanceMatrix& d,
                                               const VertexSet& s,
                                               bool record_witnesses) {
  if (s.universe() != g.order())
    throw std::invalid_argument("vertex set indexes a different graph order");
  EqualizerCertificate cert;
  cert.valid = true;
  auto outside = s.complemented().elements();
  auto members = s.elements();
  for (size_t i = 0; i < outside.size(); ++i)
    for (size_t j = i + 1; j < outside.size(); ++j) {
      uint32_t x = outside[i], y = outside[j];
      int found = -1;
      for (uint32_t w : members)
        if (d.at(x, w) == d.at(y, w)) {
          found = static_cast<int>(w);
          break;
        }
      if (found < 0) {
        cert.valid = false;
        cert.witness_map.clear();
        cert.failing_pair = {x, y};
        return cert;
      }
      if (record_witnesses)
        cert.witness_map.push_back({x, y, static_cast<uint32_t>(found)});
    }
  return cert;
}

BoundsReport bounds(const Graph& g) { return bounds(g, DistanceMatrix::build(g)); }

namespace {

// with_clique=false keeps the same best_lower but skips the clique-based
// upper bounds; the exact search only needs the lower end plus any sound cap.
BoundsReport bounds_impl(const Graph& g, const DistanceMatrix& d, bool with_clique) {
  const uint32_t n = g.order();
  const uint32_t delta = g.max_degree();
  BoundsReport r;

  int characterization;
  if (n == 1)
    characterization = 0;
  else if (delta == n - 1)
    characterization = 1;
  else if (delta == n - 2)
    characterization = 2;
  else
    characterization = 3;
  r.lower.emplace_back("max_degree_characterization", characterization);
  r.lower.emplace_back("support_vertices",
                       static_cast<int>(g.support_vertices().count()));
  if (auto parts = g.bipartition())
    r.lower.emplace_back("bipartite_partite",
                         static_cast<int>(std::min(parts->first.count(),
                                                   parts->second.count())));

  r.upper.emplace_back("trivial", n >= 2 ? static_cast<int>(n - 1) : 0);
  if (n >= 2) {
    r.upper.emplace_back("order_minus_max_degree", static_cast<int>(n - delta));
    uint32_t diam = d.diameter();
    r.upper.emplace_back("diameter_ratio",
                         static_cast<int>((n * (diam - 1) + 1) / diam));
    if (with_clique && n <= kCliqueCap) {
      r.upper.emplace_back("clique",
                           static_cast<int>(n) - clique_number(g) + 1);
      if (diam == 2)
        r.upper.emplace_back("independence",
                             static_cast<int>(n) - independence_number(g) + 1);
    }
  }

  r.best_lower = 0;
  for (auto& [name, v] : r.lower) r.best_lower = std::max(r.best_lower, v);
  r.best_upper = n >= 2 ? static_cast<int>(n - 1) : 0;
  for (auto& [name, v] : r.upper) r.best_upper = std::min(r.best_upper, v);
  return r;
}

}  // namespace

BoundsReport bounds(const Graph& g, const DistanceMatrix& d) {
  return bounds_impl(g, d, true);
}

int clique_number(const Graph& g) {
  if (g.order() > kCliqueCap)
    throw std::invalid_argument("clique search capped at 128 vertices");
  CliqueSearch cs{g};
  cs.expand(VertexSet::full(g.order()), 0);
  return static_cast<int>(cs.best);
}

int independence_number(const Graph& g) { return clique_number(complement(g)); }

EqdimResult eqdim_exact(const Graph& g, uint64_t budget) {
  require_connected(g);
  const uint32_t n = g.order();
  DistanceMatrix d = DistanceMatrix::build(g);
  BoundsReport b = bounds_impl(g, d, false);
  detail::CoverInstance inst = equalizer_instance(g, d);

  // Every distance-equalizer set of a bipartite graph contains one of the
  // partite sets, so the search only visits their supersets.
  std::vector<VertexSet> forced;
  if (auto parts = g.bipartition(); parts && n >= 2) {
    forced.push_back(parts->first);
    forced.push_back(parts->second);
  } else {
    forced.push_back(VertexSet(n));
  }

  EqdimResult res;
  res.upper = b.best_upper;
  for (uint32_t k = static_cast<uint32_t>(b.best_lower);; ++k) {
    std::optional<VertexSet> best;
    bool exhausted = false;
    for (const VertexSet& f : forced) {
      if (res.nodes >= budget) {
        exhausted = true;
        break;
      }
      detail::KSearch search(inst, f, budget - res.nodes);
      auto got = search.run(k);
      res.nodes += search.nodes();
      if (search.out_of_budget()) exhausted = true;
      if (got && (!best || got->lex_less(*best))) best = got;
    }
    if (best) {
      res.value = static_cast<int>(k);
      res.witness = std::move(best);
      res.lower = res.upper = static_cast<int>(k);
      return res;
    }
    if (exhausted) {
      res.lower = static_cast<int>(k);
      return res;
    }
    if (k >= static_cast<uint32_t>(b.best_upper))
      throw std::logic_error("equalizer search failed below its upper bound");
  }
}

}  // namespace eqdim
