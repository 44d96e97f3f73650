#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqdim/vertex_set.hpp"

namespace eqdim {

// Simple undirected graph on vertices 0..n-1 with one adjacency bitset per
// vertex. Immutable after construction. Duplicate edges collapse silently;
// loops and out-of-range endpoints are rejected.
class Graph {
 public:
  Graph(uint32_t n, const std::vector<std::pair<uint32_t, uint32_t>>& edges,
        std::string name = {});

  uint32_t order() const { return n_; }
  uint64_t edge_count() const { return m_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  const VertexSet& neighbors(uint32_t v) const { return adj_[v]; }
  bool has_edge(uint32_t u, uint32_t v) const { return adj_[u].test(v); }
  uint32_t degree(uint32_t v) const { return adj_[v].count(); }
  uint32_t max_degree() const;
  uint32_t min_degree() const;

  // Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<uint32_t, uint32_t>> edges() const;

  bool is_connected() const;
  bool is_tree() const;

  // Two-coloring with vertex 0 (and the least vertex of every further
  // component) on the first side; nullopt when an odd cycle exists.
  std::optional<std::pair<VertexSet, VertexSet>> bipartition() const;

  VertexSet leaves() const;
  VertexSet support_vertices() const;

 private:
  uint32_t n_ = 0;
  uint64_t m_ = 0;
  std::vector<VertexSet> adj_;
  std::string name_;
};

Graph complement(const Graph& g);

// Throws std::invalid_argument when g is disconnected.
void require_connected(const Graph& g);

}  // namespace eqdim
