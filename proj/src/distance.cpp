#include "eqdim/distance.hpp"

#include <stdexcept>

namespace eqdim {

DistanceMatrix DistanceMatrix::build(const Graph& g) {
  const uint32_t n = g.order();
  DistanceMatrix m;
  m.n_ = n;
  m.d_.assign(static_cast<size_t>(n) * n, 0);

  for (uint32_t src = 0; src < n; ++src) {
    VertexSet reached(n);
    reached.set(src);
    VertexSet frontier = reached;
    uint16_t dist = 0;
    uint32_t seen = 1;
    while (frontier.any()) {
      ++dist;
      VertexSet next(n);
      for (int v = frontier.first(); v >= 0;
           v = frontier.next_after(static_cast<uint32_t>(v)))
        next |= g.neighbors(static_cast<uint32_t>(v));
      next.and_not(reached);
      for (int v = next.first(); v >= 0;
           v = next.next_after(static_cast<uint32_t>(v))) {
        m.d_[static_cast<size_t>(src) * n + static_cast<uint32_t>(v)] = dist;
        ++seen;
      }
      reached |= next;
      frontier = next;
    }
    if (seen != n)
      throw std::invalid_argument("graph must be connected" +
                                  (g.name().empty() ? "" : " (" + g.name() + ")"));
    if (n > 1) m.diameter_ = std::max<uint32_t>(m.diameter_, dist - 1);
  }
  return m;
}

}  // namespace eqdim
