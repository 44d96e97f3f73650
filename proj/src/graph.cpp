#include "eqdim/graph.hpp"

#include <stdexcept>

namespace eqdim {

Graph::Graph(uint32_t n, const std::vector<std::pair<uint32_t, uint32_t>>& edges,
             std::string name)
    : n_(n), name_(std::move(name)) {
  if (n == 0) throw std::invalid_argument("graph order must be at least 1");
  adj_.assign(n, VertexSet(n));
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loop edges are not allowed");
    adj_[u].set(v);
    adj_[v].set(u);
  }
  for (uint32_t v = 0; v < n; ++v) m_ += adj_[v].count();
  m_ /= 2;
}

uint32_t Graph::max_degree() const {
  uint32_t d = 0;
  for (uint32_t v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

uint32_t Graph::min_degree() const {
  uint32_t d = n_;
  for (uint32_t v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

std::vector<std::pair<uint32_t, uint32_t>> Graph::edges() const {
  std::vector<std::pair<uint32_t, uint32_t>> out;
  out.reserve(m_);
  for (uint32_t u = 0; u < n_; ++u)
    for (int v = adj_[u].next_after(u); v >= 0;
         v = adj_[u].next_after(static_cast<uint32_t>(v)))
      out.emplace_back(u, static_cast<uint32_t>(v));
  return out;
}

bool Graph::is_connected() const {
  VertexSet reached(n_);
  reached.set(0);
  VertexSet frontier = reached;
  while (frontier.any()) {
    VertexSet next(n_);
    for (int v = frontier.first(); v >= 0;
         v = frontier.next_after(static_cast<uint32_t>(v)))
      next |= adj_[v];
    next.and_not(reached);
    reached |= next;
    frontier = next;
  }
  return reached.count() == n_;
}

bool Graph::is_tree() const { return m_ == n_ - 1 && is_connected(); }

std::optional<std::pair<VertexSet, VertexSet>> Graph::bipartition() const {
  VertexSet side_a(n_), side_b(n_), seen(n_);
  for (uint32_t root = 0; root < n_; ++root) {
    if (seen.test(root)) continue;
    seen.set(root);
    side_a.set(root);
    std::vector<uint32_t> queue{root};
    while (!queue.empty()) {
      uint32_t u = queue.back();
      queue.pop_back();
      bool u_in_a = side_a.test(u);
      const VertexSet& nb = neighbors(u);
      for (int v = nb.first(); v >= 0; v = nb.next_after(static_cast<uint32_t>(v))) {
        uint32_t w = static_cast<uint32_t>(v);
        if (!seen.test(w)) {
          seen.set(w);
          (u_in_a ? side_b : side_a).set(w);
          queue.push_back(w);
        } else if (side_a.test(w) == u_in_a) {
          return std::nullopt;
        }
      }
    }
  }
  return std::make_pair(side_a, side_b);
}

VertexSet Graph::leaves() const {
  VertexSet out(n_);
  for (uint32_t v = 0; v < n_; ++v)
    if (degree(v) == 1) out.set(v);
  return out;
}

VertexSet Graph::support_vertices() const {
  VertexSet out(n_);
  VertexSet lf = leaves();
  for (uint32_t v = 0; v < n_; ++v)
    if (adj_[v].intersects(lf)) out.set(v);
  return out;
}

Graph complement(const Graph& g) {
  uint32_t n = g.order();
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
  std::string name = g.name().empty() ? std::string{} : "complement(" + g.name() + ")";
  return Graph(n, edges, std::move(name));
}

void require_connected(const Graph& g) {
  if (!g.is_connected())
    throw std::invalid_argument("graph must be connected" +
                                (g.name().empty() ? "" : " (" + g.name() + ")"));
}

}  // namespace eqdim
