#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "eqdim/equalizer.hpp"
#include "eqdim/family_spec.hpp"

namespace eqdim {

// Raised when a family instance falls outside the parameter ranges with a
// known closed-form answer.
struct NoFormulaError : std::domain_error {
  using std::domain_error::domain_error;
};

// Closed-form equidistant dimension (or interval / upper bound) together
// with an explicit witness; the witness is re-verified before returning.
struct FamilyResult {
  enum class Kind { exact, upper_bound, interval };
  FamilySpec spec;
  Kind kind = Kind::exact;
  int value = 0;        // exact value or upper bound
  int lo = 0, hi = 0;   // interval; lo == hi == value otherwise
  VertexSet witness;    // |witness| = value (or the interval's hi)
  std::string method;   // which formula or construction produced it
};

FamilyResult family_eqdim(const FamilySpec& spec);

inline FamilyResult family_eqdim(const std::string& text) {
  return family_eqdim(FamilySpec::parse(text));
}

// Cross-check of the closed forms for paths and cycles against the exact
// search, for n = 3..n_max (n_max <= 20).
struct TableRow {
  uint32_t n = 0;
  uint32_t r_half = 0;     // r(ceil(n/2))
  int path_formula = 0;
  int path_search = 0;
  int cycle_lo = 0;        // lo == hi when the closed form is exact
  int cycle_hi = 0;
  int cycle_search = 0;
  bool ok = false;
};

struct TableReport {
  std::vector<TableRow> rows;
  bool all_ok = true;
};

TableReport verify_family_table(uint32_t n_max, uint64_t budget = kDefaultBudget);

}  // namespace eqdim
