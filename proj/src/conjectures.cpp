#include "eqdim/conjectures.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "eqdim/apfree.hpp"
#include "eqdim/detail/pair_cover.hpp"
#include "eqdim/distance.hpp"
#include "eqdim/family_spec.hpp"
#include "eqdim/graph6.hpp"
#include "eqdim/resolving.hpp"

namespace eqdim {

namespace {

constexpr uint32_t kEnumerationCap = 7;
constexpr uint32_t kTreeCap = 14;
constexpr size_t kEqualitySampleCap = 50;

bool connected_mask(uint32_t n, uint64_t mask) {
  uint8_t adj[8] = {0};
  uint32_t bit = 0;
  for (uint32_t y = 1; y < n; ++y)
    for (uint32_t x = 0; x < y; ++x, ++bit)
      if ((mask >> bit) & 1) {
        adj[x] |= uint8_t(1u << y);
        adj[y] |= uint8_t(1u << x);
      }
  uint32_t reached = 1, frontier = 1;
  while (frontier) {
    uint32_t next = 0;
    while (frontier) {
      uint32_t v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= adj[v];
    }
    next &= ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == (1u << n) - 1;
}

Graph graph_from_mask(uint32_t n, uint64_t mask) {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  uint32_t bit = 0;
  for (uint32_t y = 1; y < n; ++y)
    for (uint32_t x = 0; x < y; ++x, ++bit)
      if ((mask >> bit) & 1) edges.emplace_back(x, y);
  return Graph(n, edges);
}

// Runs fn(chunk_index, begin, end) over [0, total) split into many chunks on
// the requested number of threads. Callers merge per-chunk results in chunk
// order, so the outcome does not depend on the worker count.
void run_chunked(uint64_t total, uint32_t workers,
                 const std::function<void(size_t, uint64_t, uint64_t)>& fn) {
  workers = std::max(1u, workers);
  size_t nchunks = total == 0 ? 0 : std::max<size_t>(workers * 8, 1);
  uint64_t chunk = total == 0 ? 0 : (total + nchunks - 1) / nchunks;
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t c = next.fetch_add(1);
      if (c >= nchunks) break;
      uint64_t lo = c * chunk;
      uint64_t hi = std::min(total, lo + chunk);
      if (lo < hi) fn(c, lo, hi);
    }
  };
  if (workers == 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (uint32_t i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

// --- free tree enumeration ------------------------------------------------
//
// Trees on i+1 vertices are grown by attaching a fresh leaf to every vertex
// of every tree on i vertices; duplicates are folded by canonical code.

using EdgeList = std::vector<std::pair<uint32_t, uint32_t>>;

std::string rooted_code(const std::vector<std::vector<uint32_t>>& adj,
                        uint32_t v, uint32_t parent) {
  std::vector<std::string> child_codes;
  for (uint32_t w : adj[v])
    if (w != parent) child_codes.push_back(rooted_code(adj, w, v));
  std::sort(child_codes.begin(), child_codes.end());
  std::string out = "(";
  for (auto& c : child_codes) out += c;
  out += ")";
  return out;
}

std::string tree_code(uint32_t n, const EdgeList& edges) {
  std::vector<std::vector<uint32_t>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  if (n == 1) return "()";
  // peel leaves to find the one or two centers
  std::vector<uint32_t> deg(n);
  for (uint32_t v = 0; v < n; ++v) deg[v] = static_cast<uint32_t>(adj[v].size());
  std::vector<uint32_t> layer;
  std::vector<bool> removed(n, false);
  for (uint32_t v = 0; v < n; ++v)
    if (deg[v] <= 1) layer.push_back(v);
  uint32_t left = n;
  while (left > 2) {
    std::vector<uint32_t> next;
    for (uint32_t v : layer) {
      removed[v] = true;
      --left;
      for (uint32_t w : adj[v])
        if (!removed[w] && --deg[w] == 1) next.push_back(w);
    }
    layer = std::move(next);
  }
  std::vector<uint32_t> centers;
  for (uint32_t v = 0; v < n; ++v)
    if (!removed[v]) centers.push_back(v);
  std::string best = rooted_code(adj, centers[0], centers[0]);
  if (centers.size() == 2)
    best = std::min(best, rooted_code(adj, centers[1], centers[1]));
  return best;
}

std::mutex tree_mutex;
std::vector<std::vector<EdgeList>> tree_cache;  // tree_cache[n-1]

const std::vector<EdgeList>& trees_of_order(uint32_t n) {
  std::lock_guard<std::mutex> lock(tree_mutex);
  if (tree_cache.empty()) tree_cache.push_back({EdgeList{}});  // K_1
  while (tree_cache.size() < n) {
    uint32_t grown = static_cast<uint32_t>(tree_cache.size()) + 1;
    std::map<std::string, EdgeList> next;
    for (const EdgeList& t : tree_cache.back())
      for (uint32_t attach = 0; attach + 1 < grown; ++attach) {
        EdgeList e = t;
        e.emplace_back(attach, grown - 1);
        next.emplace(tree_code(grown, e), std::move(e));
      }
    std::vector<EdgeList> level;
    level.reserve(next.size());
    for (auto& [code, e] : next) level.push_back(std::move(e));
    tree_cache.push_back(std::move(level));
  }
  return tree_cache[n - 1];
}

std::string g6(const Graph& g) { return write_graph6(g); }

HarnessReport merge_status(HarnessReport r, bool theorem) {
  if (!r.counterexamples.empty())
    r.status = "counterexample";
  else
    r.status = theorem ? "holds" : "open";
  return r;
}

std::vector<const Graph*> corpus_view(const Corpus& corpus,
                                      std::vector<Graph>& storage) {
  std::vector<const Graph*> view;
  if (!corpus.external.empty() || corpus.n_max == 0) {
    for (const Graph& g : corpus.external) {
      if (!g.is_connected())
        throw std::invalid_argument("corpus contains a disconnected graph");
      view.push_back(&g);
    }
    return view;
  }
  for (uint32_t n = 2; n <= corpus.n_max; ++n)
    enumerate_connected(n, [&](const Graph& g) { storage.push_back(g); });
  for (const Graph& g : storage) view.push_back(&g);
  return view;
}

std::string corpus_label(const Corpus& corpus) {
  if (!corpus.description.empty()) return corpus.description;
  if (!corpus.external.empty())
    return "external corpus of " + std::to_string(corpus.external.size()) +
           " graphs";
  return "all labeled connected graphs with 2 <= n <= " +
         std::to_string(corpus.n_max);
}

}  // namespace

void enumerate_connected(uint32_t n, const std::function<void(const Graph&)>& fn) {
  if (n < 1 || n > kEnumerationCap)
    throw std::invalid_argument("internal enumeration works for 1 <= n <= 7");
  uint32_t npairs = n * (n - 1) / 2;
  for (uint64_t mask = 0; mask < (uint64_t{1} << npairs); ++mask)
    if (connected_mask(n, mask)) fn(graph_from_mask(n, mask));
}

uint32_t tree_enumeration_limit() { return kTreeCap; }

void enumerate_trees(uint32_t n, const std::function<void(const Graph&)>& fn) {
  if (n < 1 || n > kTreeCap)
    throw std::invalid_argument("tree enumeration works for 1 <= n <= 14");
  for (const EdgeList& e : trees_of_order(n)) fn(Graph(n, e));
}

std::string free_tree_code(const Graph& t) {
  if (!t.is_tree()) throw std::invalid_argument("input graph is not a tree");
  return tree_code(t.order(), t.edges());
}

HarnessReport check_tree_conjecture(uint32_t n_max, uint32_t workers,
                                    uint64_t budget) {
  if (n_max > kTreeCap)
    throw std::invalid_argument("tree harness capped at n = 14");
  HarnessReport report;
  report.claim = "tree equalizers need no more vertices than the path's";
  report.corpus = "all free trees with 2 <= n <= " + std::to_string(n_max);

  for (uint32_t n = 2; n <= n_max; ++n) {
    int path_value = static_cast<int>(n - r_exact((n + 1) / 2).r_value);
    const auto& trees = trees_of_order(n);
    std::vector<std::vector<Counterexample>> found(trees.size());
    std::atomic<uint64_t> checked{0};
    run_chunked(trees.size(), workers, [&](size_t, uint64_t lo, uint64_t hi) {
      for (uint64_t i = lo; i < hi; ++i) {
        Graph t(n, trees[i]);
        EqdimResult res = eqdim_exact(t, budget);
        ++checked;
        if (!res.exact() || *res.value > path_value) {
          std::ostringstream msg;
          if (res.exact())
            msg << "eqdim = " << *res.value << " exceeds path value "
                << path_value;
          else
            msg << "search budget exhausted in [" << res.lower << ", "
                << res.upper << "]";
          found[i].push_back({g6(t), msg.str()});
        }
      }
    });
    report.checked += checked;
    for (auto& list : found)
      for (auto& c : list) report.counterexamples.push_back(std::move(c));
  }
  return merge_status(std::move(report), /*theorem=*/false);
}

HarnessReport check_psi_conjecture(const Corpus& corpus, uint32_t workers,
                                   uint64_t budget) {
  std::vector<Graph> storage;
  auto graphs = corpus_view(corpus, storage);

  HarnessReport report;
  report.claim = "psi is at most dim + eqdim";
  report.corpus = corpus_label(corpus);

  struct Chunk {
    std::vector<Counterexample> bad;
    std::vector<std::string> equal;
    uint64_t checked = 0;
  };
  size_t nchunks = std::max<size_t>(std::max(1u, workers) * 8, 1);
  std::vector<Chunk> chunks(nchunks);
  run_chunked(graphs.size(), workers, [&](size_t c, uint64_t lo, uint64_t hi) {
    for (uint64_t i = lo; i < hi; ++i) {
      const Graph& g = *graphs[i];
      if (g.order() < 2) continue;
      EqdimResult dim = dim_exact(g, budget);
      EqdimResult eqd = eqdim_exact(g, budget);
      EqdimResult psi = psi_exact(g, budget);
      ++chunks[c].checked;
      if (!dim.exact() || !eqd.exact() || !psi.exact()) {
        chunks[c].bad.push_back({g6(g), "search budget exhausted"});
        continue;
      }
      int sum = *dim.value + *eqd.value;
      if (*psi.value > sum) {
        std::ostringstream msg;
        msg << "psi = " << *psi.value << " > dim + eqdim = " << *dim.value
            << " + " << *eqd.value;
        chunks[c].bad.push_back({g6(g), msg.str()});
      } else if (*psi.value == sum) {
        chunks[c].equal.push_back(g6(g));
      }
    }
  });
  for (auto& c : chunks) {
    report.checked += c.checked;
    for (auto& b : c.bad) report.counterexamples.push_back(std::move(b));
    report.equality_count += c.equal.size();
    for (auto& e : c.equal)
      if (report.equality_samples.size() < kEqualitySampleCap)
        report.equality_samples.push_back(std::move(e));
  }
  return merge_status(std::move(report), /*theorem=*/false);
}

HarnessReport check_nordhaus_gaddum(const Corpus& corpus, uint32_t workers,
                                    uint64_t budget) {
  std::vector<Graph> storage;
  auto graphs = corpus_view(corpus, storage);

  HarnessReport report;
  report.claim = "4 <= eqdim(G) + eqdim(complement) <= n + 1 on doubly connected graphs";
  report.corpus = corpus_label(corpus);

  struct Chunk {
    std::vector<Counterexample> bad;
    uint64_t checked = 0;
  };
  size_t nchunks = std::max<size_t>(std::max(1u, workers) * 8, 1);
  std::vector<Chunk> chunks(nchunks);
  run_chunked(graphs.size(), workers, [&](size_t c, uint64_t lo, uint64_t hi) {
    for (uint64_t i = lo; i < hi; ++i) {
      const Graph& g = *graphs[i];
      Graph co = complement(g);
      if (!co.is_connected()) continue;  // corpus restricted to doubly connected
      EqdimResult a = eqdim_exact(g, budget);
      EqdimResult b = eqdim_exact(co, budget);
      ++chunks[c].checked;
      if (!a.exact() || !b.exact()) {
        chunks[c].bad.push_back({g6(g), "search budget exhausted"});
        continue;
      }
      int n = static_cast<int>(g.order());
      int sum = *a.value + *b.value;
      std::ostringstream msg;
      if (sum < 4 || sum > n + 1)
        msg << "sum = " << sum << " outside [4, " << n + 1 << "]";
      else if (*b.value > static_cast<int>(g.min_degree()) + 1)
        msg << "eqdim(complement) = " << *b.value << " > min degree + 1 = "
            << g.min_degree() + 1;
      else if (*a.value > static_cast<int>(co.min_degree()) + 1)
        msg << "eqdim = " << *a.value << " > complement min degree + 1 = "
            << co.min_degree() + 1;
      if (!msg.str().empty()) chunks[c].bad.push_back({g6(g), msg.str()});
    }
  });
  for (auto& c : chunks) {
    report.checked += c.checked;
    for (auto& b : c.bad) report.counterexamples.push_back(std::move(b));
  }
  return merge_status(std::move(report), /*theorem=*/true);
}

HarnessReport check_sigma_bounds(uint32_t n_lo, uint32_t n_hi, uint64_t budget) {
  HarnessReport report;
  report.claim = "dim + eqdim spread: balanced bipartite high, tagged words low";
  report.corpus = "orders " + std::to_string(std::max(4u, n_lo)) + ".." +
                  std::to_string(n_hi) + " and word graphs fitting them";

  for (uint32_t n = std::max(4u, n_lo); n <= n_hi; ++n) {
    FamilySpec spec = FamilySpec::parse(
        "complete_multipartite:" + std::to_string(n / 2) + "," +
        std::to_string(n - n / 2));
    Graph g = generate(spec);
    EqdimResult dim = dim_exact(g, budget);
    EqdimResult eqd = eqdim_exact(g, budget);
    ++report.checked;
    if (!dim.exact() || !eqd.exact()) {
      report.counterexamples.push_back({g6(g), "search budget exhausted"});
      continue;
    }
    // integer-safe form of dim + eqdim >= 3n/2 - 3
    if (2 * (*dim.value + *eqd.value) < 3 * static_cast<int>(n) - 6) {
      std::ostringstream msg;
      msg << spec.to_string() << ": dim + eqdim = " << *dim.value << " + "
          << *eqd.value << " below 3n/2 - 3";
      report.counterexamples.push_back({g6(g), msg.str()});
    }
  }

  for (uint32_t k = 1;; ++k) {
    uint64_t order = (uint64_t{1} << k) + k + 1;
    if (order > n_hi || order < std::max(4u, n_lo)) {
      if (order > n_hi) break;
      continue;
    }
    FamilySpec spec = FamilySpec::parse("gk_graph:" + std::to_string(k));
    Graph g = generate(spec);
    EqdimResult dim = dim_exact(g, budget);
    EqdimResult eqd = eqdim_exact(g, budget);
    ++report.checked;
    if (!dim.exact() || !eqd.exact()) {
      report.counterexamples.push_back({g6(g), "search budget exhausted"});
      continue;
    }
    if (*dim.value + *eqd.value > static_cast<int>(k) + 2) {
      std::ostringstream msg;
      msg << spec.to_string() << ": dim + eqdim = " << *dim.value << " + "
          << *eqd.value << " above k + 2 = " << k + 2;
      report.counterexamples.push_back({g6(g), msg.str()});
    }
  }
  return merge_status(std::move(report), /*theorem=*/true);
}

}  // namespace eqdim
