#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "eqdim/conjectures.hpp"
#include "eqdim/equalizer.hpp"
#include "eqdim/family_spec.hpp"
#include "test_util.hpp"

using namespace eqdim;

TEST_CASE("equidistant vertices on paths and odd cycles") {
  Graph p8 = generate_family("path:8");
  DistanceMatrix d = all_pairs_distances(p8);
  // 1-based labels: 4 sits midway between 3 and 5
  CHECK(is_equidistant(3, 2, 4, d));

  // no vertex is equidistant from a leaf and its support
  for (uint32_t w = 0; w < 8; ++w) CHECK_FALSE(is_equidistant(w, 0, 1, d));

  // on an odd cycle every pair has exactly one equidistant vertex
  Graph c13 = generate_family("cycle:13");
  DistanceMatrix dc = all_pairs_distances(c13);
  for (uint32_t x = 0; x < 13; ++x)
    for (uint32_t y = x + 1; y < 13; ++y) {
      uint32_t count = 0;
      for (uint32_t w = 0; w < 13; ++w)
        if (is_equidistant(w, x, y, dc)) ++count;
      CHECK(count == 1);
    }
}

TEST_CASE("verifying candidate sets") {
  Graph p8 = generate_family("path:8");
  // black vertices 2,4,5,6,8 in 1-based labels
  auto cert = verify_distance_equalizer(p8, VertexSet::of(8, {1, 3, 4, 5, 7}));
  CHECK(cert.valid);
  DistanceMatrix d = all_pairs_distances(p8);
  CHECK(cert.witness_map.size() == 3);  // pairs among {1,3,7} 1-based
  for (auto& pw : cert.witness_map) CHECK(d.at(pw.x, pw.w) == d.at(pw.y, pw.w));

  Graph c10 = generate_family("cycle:10");
  CHECK(verify_distance_equalizer(c10, VertexSet::of(10, {0, 2, 4, 6, 8})).valid);

  // most of one side of K_{3,3} is not enough: a cross pair fails
  Graph k33 = generate_family("complete_multipartite:3,3");
  auto bad = verify_distance_equalizer(k33, VertexSet::of(6, {0, 1}));
  CHECK_FALSE(bad.valid);
  CHECK(bad.witness_map.empty());
  REQUIRE(bad.failing_pair.has_value());
  CHECK(bad.failing_pair->first == 2);
  CHECK(bad.failing_pair->second == 3);

  // near-total sets are vacuously fine
  CHECK(verify_distance_equalizer(p8, VertexSet::full(8)).valid);
  VertexSet all_but_one = VertexSet::full(8);
  all_but_one.reset(3);
  CHECK(verify_distance_equalizer(p8, all_but_one).valid);

  CHECK_THROWS_AS(verify_distance_equalizer(p8, VertexSet(7)),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_distance_equalizer(Graph(4, {{0, 1}, {2, 3}}),
                                            VertexSet(4)),
                  std::invalid_argument);
}

TEST_CASE("exact values on small families") {
  CHECK(*eqdim_exact(generate_family("path:8")).value == 5);
  CHECK(*eqdim_exact(generate_family("cycle:6")).value == 3);
  CHECK(*eqdim_exact(generate_family("star:5")).value == 1);
  CHECK(*eqdim_exact(generate_family("path:2")).value == 1);
  CHECK(*eqdim_exact(Graph(1, {})).value == 0);

  // frozen from the unpruned oracle, and re-checked against it live
  Graph pet = testutil::petersen();
  EqdimResult r = eqdim_exact(pet);
  CHECK(*r.value == 3);
  CHECK(r.witness == VertexSet::of(10, {0, 1, 2}));
  auto [brute_value, brute_witness] = testutil::eqdim_brute(pet);
  CHECK(*r.value == brute_value);
  CHECK(*r.witness == brute_witness);
}

TEST_CASE("witness canon and determinism") {
  for (const char* spec : {"path:9", "cycle:8", "bistar:3,4", "gk_graph:2"}) {
    Graph g = generate_family(spec);
    EqdimResult a = eqdim_exact(g);
    EqdimResult b = eqdim_exact(g);
    CHECK(*a.witness == *b.witness);
    CHECK(verify_distance_equalizer(g, *a.witness).valid);
    CHECK(a.witness->count() == static_cast<uint32_t>(*a.value));
  }
}

TEST_CASE("pruned search equals the unpruned oracle on small graphs") {
  for (uint32_t n = 1; n <= 5; ++n)
    enumerate_connected(n, [&](const Graph& g) {
      auto [value, witness] = testutil::eqdim_brute(g);
      EqdimResult r = eqdim_exact(g);
      REQUIRE(r.exact());
      CHECK(*r.value == value);
      CHECK(*r.witness == witness);
    });
}

TEST_CASE("bounds reports") {
  Graph k33 = generate_family("complete_multipartite:3,3");
  BoundsReport b = bounds(k33);
  CHECK(b.best_lower == 3);  // bipartite side
  CHECK(b.best_upper == 3);  // order minus max degree
  bool saw_bipartite = false;
  for (auto& [name, v] : b.lower)
    if (name == "bipartite_partite") {
      saw_bipartite = true;
      CHECK(v == 3);
    }
  CHECK(saw_bipartite);

  BoundsReport c50 = bounds(generate_family("cycle:50"));
  for (auto& [name, v] : c50.lower)
    if (name == "bipartite_partite") CHECK(v == 25);
  CHECK(c50.best_lower == 25);

  BoundsReport h21 = bounds(generate_family("h_graph:2,1"));
  CHECK(h21.best_lower == 2);
  CHECK(h21.best_upper == 2);

  // one universal vertex pins the dimension at 1 with no search
  BoundsReport g3 = bounds(generate_family("gk_graph:3"));
  CHECK(g3.best_lower == 1);
  CHECK(g3.best_upper == 1);

  BoundsReport k5 = bounds(generate_family("complete:5"));
  CHECK(k5.best_upper == 1);  // diameter ratio and degree both give 1

  BoundsReport p8 = bounds(generate_family("path:8"));
  CHECK(p8.best_lower == 4);
  for (auto& [name, v] : p8.lower)
    if (name == "support_vertices") CHECK(v == 2);
}

TEST_CASE("bounds sandwich the exact value") {
  for (const char* spec :
       {"path:7", "path:11", "cycle:9", "cycle:12", "complete:6", "star:8",
        "bistar:3,5", "complete_multipartite:2,2,3", "h_graph:4,2",
        "johnson:5,2", "gk_graph:2"}) {
    Graph g = generate_family(spec);
    BoundsReport b = bounds(g);
    EqdimResult r = eqdim_exact(g);
    REQUIRE(r.exact());
    CHECK(b.best_lower <= *r.value);
    CHECK(*r.value <= b.best_upper);
  }
}

TEST_CASE("clique and independence numbers") {
  CHECK(clique_number(generate_family("complete:5")) == 5);
  CHECK(independence_number(generate_family("complete:5")) == 1);
  CHECK(clique_number(generate_family("cycle:5")) == 2);
  CHECK(independence_number(generate_family("cycle:5")) == 2);
  CHECK(clique_number(generate_family("complete_multipartite:3,4")) == 2);
  CHECK(independence_number(generate_family("complete_multipartite:3,4")) == 4);
  CHECK(clique_number(testutil::petersen()) == 2);
  CHECK(independence_number(testutil::petersen()) == 4);
}

TEST_CASE("valid sets stay valid under supersets") {
  std::mt19937 rng(20240811);
  Graph pool[] = {generate_family("path:9"), generate_family("cycle:11"),
                  testutil::petersen(), generate_family("bistar:3,4"),
                  generate_family("complete_multipartite:2,3,3")};
  for (int trial = 0; trial < 400; ++trial) {
    const Graph& g = pool[rng() % 5];
    uint32_t n = g.order();
    DistanceMatrix d = all_pairs_distances(g);
    // grow a random set until it verifies
    VertexSet s(n);
    for (uint32_t v = 0; v < n; ++v)
      if (rng() & 1) s.set(v);
    while (!verify_distance_equalizer(g, d, s, false).valid) s.set(rng() % n);
    VertexSet super = s;
    for (uint32_t v = 0; v < n; ++v)
      if (rng() % 4 == 0) super.set(v);
    CHECK(verify_distance_equalizer(g, d, super, false).valid);
  }
}

TEST_CASE("minimum witnesses respect supports") {
  // every minimum set keeps each support vertex or all of its leaves
  for (uint32_t n = 2; n <= 9; ++n)
    enumerate_trees(n, [&](const Graph& t) {
      EqdimResult r = eqdim_exact(t);
      REQUIRE(r.exact());
      const VertexSet& s = *r.witness;
      VertexSet lf = t.leaves();
      VertexSet supports = t.support_vertices();
      for (int v = supports.first(); v >= 0;
           v = supports.next_after(static_cast<uint32_t>(v))) {
        if (s.test(static_cast<uint32_t>(v))) continue;
        VertexSet hanging = t.neighbors(static_cast<uint32_t>(v));
        hanging &= lf;
        CHECK(hanging.subset_of(s));
      }
    });
}

TEST_CASE("budget exhaustion returns an interval") {
  Graph c13 = generate_family("cycle:13");
  EqdimResult r = eqdim_exact(c13, 5);
  CHECK_FALSE(r.exact());
  CHECK(r.lower >= 3);
  CHECK(r.upper <= 12);
  CHECK(r.lower <= 9);  // the true value sits inside
  CHECK(9 <= r.upper);
  CHECK(r.nodes >= 5);
}
