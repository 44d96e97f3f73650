#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eqdim/families.hpp"
#include "test_util.hpp"

using namespace eqdim;

TEST_CASE("closed forms for complete and multipartite graphs") {
  FamilyResult k5 = family_eqdim("complete:5");
  CHECK(k5.kind == FamilyResult::Kind::exact);
  CHECK(k5.value == 1);

  CHECK(family_eqdim("complete:1").value == 0);
  CHECK(family_eqdim("star:5").value == 1);

  FamilyResult k34 = family_eqdim("complete_multipartite:3,4");
  CHECK(k34.value == 3);
  CHECK(k34.witness == VertexSet::of(7, {0, 1, 2}));

  CHECK(family_eqdim("complete_multipartite:3,3,3").value == 3);
  CHECK(family_eqdim("complete_multipartite:1,4,4").value == 1);
  CHECK(family_eqdim("complete_multipartite:2,3,3").value == 2);

  FamilyResult bistar = family_eqdim("bistar:3,5");
  CHECK(bistar.kind == FamilyResult::Kind::exact);
  CHECK(bistar.value == 3);
  // one center plus the other's leaves form the small partite side
  CHECK(bistar.witness == VertexSet::of(8, {1, 2, 3}));

  CHECK_THROWS_AS(family_eqdim("bistar:2,4"), NoFormulaError);
  CHECK_THROWS_AS(family_eqdim("complete_multipartite:4"), NoFormulaError);
  CHECK_THROWS_AS(family_eqdim("h_graph:2,1"), NoFormulaError);
  CHECK_THROWS_AS(family_eqdim("gk_graph:3"), NoFormulaError);
}

TEST_CASE("closed forms for paths") {
  const int expected[] = {1, 2,  3,  4,  4,  5,  5,  6,  7,
                          8, 9, 10, 11, 12, 12, 13, 14, 15};
  for (uint32_t n = 3; n <= 20; ++n) {
    FamilyResult r = family_eqdim("path:" + std::to_string(n));
    CHECK(r.kind == FamilyResult::Kind::exact);
    CHECK(r.value == expected[n - 3]);
  }
  CHECK(family_eqdim("path:50").value == 40);
  CHECK(family_eqdim("path:1").value == 0);
  CHECK(family_eqdim("path:2").value == 1);
}

TEST_CASE("closed forms for cycles") {
  FamilyResult c12 = family_eqdim("cycle:12");
  CHECK(c12.kind == FamilyResult::Kind::exact);
  CHECK(c12.value == 8);

  FamilyResult c10 = family_eqdim("cycle:10");
  CHECK(c10.kind == FamilyResult::Kind::exact);
  CHECK(c10.value == 5);
  CHECK(c10.witness == VertexSet::of(10, {0, 2, 4, 6, 8}));

  CHECK(family_eqdim("cycle:4").value == 2);
  CHECK(family_eqdim("cycle:6").value == 3);
  CHECK(family_eqdim("cycle:50").value == 25);

  FamilyResult c13 = family_eqdim("cycle:13");
  CHECK(c13.kind == FamilyResult::Kind::interval);
  CHECK(c13.lo == 6);
  CHECK(c13.hi == 10);
  CHECK(c13.witness.count() == 10);
  CHECK(*eqdim_exact(generate(c13.spec)).value == 9);

  FamilyResult c3 = family_eqdim("cycle:3");
  CHECK(c3.kind == FamilyResult::Kind::interval);
  CHECK(c3.lo == 1);
  CHECK(*eqdim_exact(generate_family("cycle:3")).value == 1);
}

TEST_CASE("window families on triangular-style subset graphs") {
  FamilyResult j52 = family_eqdim("johnson:5,2");
  CHECK(j52.kind == FamilyResult::Kind::upper_bound);
  CHECK(j52.value == 5);
  CHECK(j52.witness.count() == 5);
  // the instance itself sits well below the window bound (oracle-checked)
  CHECK(*eqdim_exact(generate_family("johnson:5,2")).value == 3);
  CHECK(testutil::eqdim_brute(generate_family("johnson:5,2")).first == 3);

  CHECK(family_eqdim("johnson:3,2").value == 3);   // n = 2k - 1
  CHECK(family_eqdim("johnson:7,3").value == 7);   // n = 2k + 1
  CHECK(family_eqdim("johnson:9,2").value == 9);   // n > 2k^2

  // the gap 2k + 1 < n <= 2k^2 has no known answer
  CHECK_THROWS_AS(family_eqdim("johnson:6,2"), NoFormulaError);
  CHECK_THROWS_AS(family_eqdim("johnson:8,2"), NoFormulaError);
  CHECK_THROWS_AS(family_eqdim("johnson:18,3"), NoFormulaError);
}

TEST_CASE("family values agree with the exact search on small instances") {
  for (const char* spec :
       {"path:5", "path:9", "path:12", "cycle:8", "cycle:10", "cycle:12",
        "complete:4", "complete:9", "star:7", "bistar:3,4", "bistar:4,4",
        "complete_multipartite:2,4", "complete_multipartite:4,4",
        "complete_multipartite:3,4,4", "complete_multipartite:1,2,3",
        "complete_multipartite:2,2,2,2"}) {
    FamilyResult fam = family_eqdim(spec);
    REQUIRE(fam.kind == FamilyResult::Kind::exact);
    EqdimResult search = eqdim_exact(generate(fam.spec));
    REQUIRE(search.exact());
    CHECK(fam.value == *search.value);
  }
}

TEST_CASE("path and cycle table against the search") {
  TableReport report = verify_family_table(16);
  CHECK(report.all_ok);
  REQUIRE(report.rows.size() == 14);
  const int paths[] = {1, 2, 3, 4, 4, 5, 5, 6, 7, 8, 9, 10, 11, 12};
  const int cycles[] = {1, 2, 3, 3, 4, 5, 5, 5, 7, 8, 9, 7, 11, 11};
  for (size_t i = 0; i < report.rows.size(); ++i) {
    const TableRow& row = report.rows[i];
    CHECK(row.n == i + 3);
    CHECK(row.path_formula == paths[i]);
    CHECK(row.path_search == paths[i]);
    CHECK(row.cycle_search == cycles[i]);
    CHECK(row.cycle_lo <= row.cycle_search);
    CHECK(row.cycle_search <= row.cycle_hi);
    if (row.n % 2 == 0) CHECK(row.cycle_lo == row.cycle_hi);
  }

  CHECK_THROWS_AS(verify_family_table(21), std::invalid_argument);
}

TEST_CASE("even cycle bipartite bound matches the alternating formula") {
  for (uint32_t n = 6; n <= 30; n += 4) {  // n = 2 (mod 4)
    BoundsReport b = bounds(generate_family("cycle:" + std::to_string(n)));
    CHECK(b.best_lower == static_cast<int>(n / 2));
    CHECK(family_eqdim("cycle:" + std::to_string(n)).value ==
          static_cast<int>(n / 2));
  }
}
