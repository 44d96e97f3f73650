#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eqdim/apfree.hpp"
#include "eqdim/equalizer.hpp"
#include "eqdim/family_spec.hpp"
#include "test_util.hpp"

using namespace eqdim;

namespace {

IntSet set_of(uint32_t bound, std::vector<uint32_t> ms) {
  return IntSet(bound, std::move(ms));
}

IntSet complement_in(uint32_t n, const VertexSet& s) {
  std::vector<uint32_t> members;
  for (uint32_t v = 0; v < n; ++v)
    if (!s.test(v)) members.push_back(v + 1);
  return IntSet(n, std::move(members));
}

}  // namespace

TEST_CASE("progression-free and parity predicates") {
  CHECK_FALSE(is_3ap_free(set_of(5, {1, 2, 3})));  // 1 + 3 = 2*2
  CHECK(is_3ap_free(set_of(5, {1, 2, 4, 5})));
  CHECK(is_3ap_free(set_of(9, {})));
  CHECK(is_3ap_free(set_of(9, {7})));
  CHECK(is_3ap_free(set_of(9, {2, 9})));
  CHECK_FALSE(is_3ap_free(set_of(9, {1, 5, 9})));

  CHECK(is_even_sum(set_of(8, {2, 4, 8})));
  CHECK_FALSE(is_even_sum(set_of(8, {1, 2})));
  CHECK(is_even_sum(set_of(8, {})));
  CHECK(is_even_sum(set_of(9, {1, 3, 7})));

  CHECK_THROWS_AS(set_of(4, {0}), std::invalid_argument);
  CHECK_THROWS_AS(set_of(4, {5}), std::invalid_argument);
}

TEST_CASE("maximum progression-free sizes") {
  // frozen sequence for n = 1..20, matched against exhaustive enumeration
  const uint32_t expected[20] = {1, 2, 2, 3, 4, 4, 4, 4, 5, 5,
                                 6, 6, 7, 8, 8, 8, 8, 8, 8, 9};
  for (uint32_t n = 1; n <= 20; ++n) {
    RnRecord rec = r_exact(n);
    CHECK(rec.r_value == expected[n - 1]);
    CHECK(rec.r_value == testutil::max_3apfree_brute(n));
    CHECK(rec.witness.members.size() == rec.r_value);
    CHECK(is_3ap_free(rec.witness));
  }
  CHECK(r_exact(25).r_value == 10);
  CHECK(r_exact(1).witness.members == std::vector<uint32_t>{1});
  CHECK(r_exact(4).r_value == 3);
  CHECK(r_exact(4).witness.members == std::vector<uint32_t>{1, 2, 4});
  CHECK(r_exact(10).r_value == 5);

  // never drops, never jumps by more than one
  for (uint32_t n = 1; n < 30; ++n) {
    CHECK(r_exact(n).r_value <= r_exact(n + 1).r_value);
    CHECK(r_exact(n + 1).r_value <= r_exact(n).r_value + 1);
  }

  CHECK_THROWS_AS(r_exact(0), std::invalid_argument);
  CHECK_THROWS_AS(r_exact(r_search_limit() + 1), std::invalid_argument);
}

TEST_CASE("doubling lifts") {
  IntSet k = set_of(4, {1, 2, 4});
  CHECK(lift(k, Parity::odd, 8).members == std::vector<uint32_t>{1, 3, 7});
  CHECK(lift(k, Parity::even, 8).members == std::vector<uint32_t>{2, 4, 8});
  CHECK_THROWS_AS(lift(set_of(4, {4}), Parity::even, 7), std::invalid_argument);
  CHECK_THROWS_AS(lift(set_of(9, {6}), Parity::even, 9), std::invalid_argument);

  // a progression survives the lift in either parity
  IntSet ap = set_of(4, {1, 2, 3});
  CHECK_FALSE(is_3ap_free(lift(ap, Parity::odd, 8)));
  CHECK_FALSE(is_3ap_free(lift(ap, Parity::even, 8)));

  // source progression-free <=> lift progression-free even-sum, both parities
  for (uint32_t n : {7u, 10u, 13u, 16u}) {
    uint32_t half = (n + 1) / 2;
    for (uint32_t mask = 0; mask < (1u << half); ++mask) {
      std::vector<uint32_t> ms;
      for (uint32_t v = 1; v <= half; ++v)
        if ((mask >> (v - 1)) & 1) ms.push_back(v);
      IntSet src = set_of(half, std::move(ms));
      for (Parity p : {Parity::odd, Parity::even}) {
        uint32_t top = src.members.empty() ? 0 : src.members.back();
        uint32_t lifted_top = p == Parity::odd ? 2 * top - 1 : 2 * top;
        if (top > 0 && lifted_top > n) continue;  // lift undefined here
        IntSet up = lift(src, p, n);
        CHECK(is_even_sum(up));
        CHECK(is_3ap_free(up) == is_3ap_free(src));
      }
    }
  }
}

TEST_CASE("path witnesses from lifted sets") {
  CHECK(path_equalizer(8).count() == 5);
  CHECK(path_equalizer(3).count() == 1);
  CHECK(path_equalizer(1).count() == 0);
  CHECK(path_equalizer(50).count() == 40);

  for (uint32_t n = 1; n <= 24; ++n) {
    VertexSet s = path_equalizer(n);
    CHECK(s.count() == n - r_exact((n + 1) / 2).r_value);
    Graph p = generate_family("path:" + std::to_string(n));
    CHECK(verify_distance_equalizer(p, s).valid);
    CHECK(s == path_equalizer(n));  // deterministic
  }
}

TEST_CASE("path sets and progression-free complements coincide") {
  for (uint32_t n = 1; n <= 12; ++n) {
    Graph p = generate_family("path:" + std::to_string(n));
    DistanceMatrix d = all_pairs_distances(p);
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      VertexSet s(n);
      for (uint32_t v = 0; v < n; ++v)
        if ((mask >> v) & 1) s.set(v);
      IntSet rest = complement_in(n, s);
      bool graph_side = verify_distance_equalizer(p, d, s, false).valid;
      bool number_side = is_3ap_free(rest) && is_even_sum(rest);
      CHECK(graph_side == number_side);
    }
  }
}

TEST_CASE("queen coverage on the main diagonal") {
  for (uint32_t n : {1u, 2u, 5u, 8u}) {
    std::vector<uint32_t> all;
    for (uint32_t v = 1; v <= n; ++v) all.push_back(v);
    CHECK(is_diagonal_dominating(IntSet(n, all), n));
  }
  CHECK(is_diagonal_dominating(set_of(8, {2, 4, 5, 6, 8}), 8));
  CHECK_FALSE(is_diagonal_dominating(set_of(4, {1}), 4));  // (3,4) uncovered
  CHECK_FALSE(is_diagonal_dominating(set_of(4, {}), 4));
  CHECK_THROWS_AS(is_diagonal_dominating(set_of(9, {9}), 4),
                  std::invalid_argument);
}

TEST_CASE("diagonal domination matches progression-free complements") {
  // boards need n >= 2: the lone 1x1 square wants its queen even though the
  // complement condition is vacuous there
  for (uint32_t n = 2; n <= 10; ++n) {
    uint32_t best = n + 1;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<uint32_t> rows;
      for (uint32_t v = 1; v <= n; ++v)
        if ((mask >> (v - 1)) & 1) rows.push_back(v);
      IntSet k(n, rows);
      IntSet rest = complement_in(n, VertexSet::of(n, [&] {
                                    std::vector<uint32_t> zero_based;
                                    for (uint32_t r : k.members)
                                      zero_based.push_back(r - 1);
                                    return zero_based;
                                  }()));
      bool covers = is_diagonal_dominating(k, n);
      CHECK(covers == (is_3ap_free(rest) && is_even_sum(rest)));
      if (covers) best = std::min<uint32_t>(best, k.members.size());
    }
    CHECK(best == n - r_exact((n + 1) / 2).r_value);
  }
}
