#include "eqdim/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "eqdim/apfree.hpp"
#include "eqdim/distance.hpp"

namespace eqdim {

namespace {

FamilyResult checked(FamilyResult r) {
  Graph g = generate(r.spec);
  if (!verify_distance_equalizer(g, DistanceMatrix::build(g), r.witness, false).valid)
    throw std::logic_error("family witness failed verification: " +
                           r.spec.to_string());
  uint32_t expect = r.kind == FamilyResult::Kind::interval
                        ? static_cast<uint32_t>(r.hi)
                        : static_cast<uint32_t>(r.value);
  if (r.witness.count() != expect)
    throw std::logic_error("family witness has unexpected size: " +
                           r.spec.to_string());
  return r;
}

FamilyResult multipartite_result(const FamilySpec& spec,
                                 const std::vector<uint32_t>& parts) {
  uint32_t n = std::accumulate(parts.begin(), parts.end(), 0u);
  std::vector<uint32_t> first_of(parts.size());
  for (size_t i = 0, at = 0; i < parts.size(); at += parts[i], ++i)
    first_of[i] = static_cast<uint32_t>(at);

  FamilyResult r;
  r.spec = spec;
  r.kind = FamilyResult::Kind::exact;
  r.witness = VertexSet(n);

  if (parts.size() == 2) {
    // either partite set works; take the smaller one
    size_t side = parts[0] <= parts[1] ? 0 : 1;
    r.value = static_cast<int>(parts[side]);
    for (uint32_t i = 0; i < parts[side]; ++i) r.witness.set(first_of[side] + i);
    r.method = "smaller partite set";
    return checked(std::move(r));
  }

  uint32_t smallest = *std::min_element(parts.begin(), parts.end());
  size_t which =
      std::min_element(parts.begin(), parts.end()) - parts.begin();
  if (smallest == 1) {
    r.value = 1;
    r.witness.set(first_of[which]);  // universal vertex
    r.method = "universal vertex";
  } else if (smallest == 2) {
    r.value = 2;
    r.witness.set(first_of[which]);
    r.witness.set(first_of[which] + 1);
    r.method = "smallest part of size 2";
  } else {
    r.value = 3;
    for (size_t i = 0; i < 3; ++i) r.witness.set(first_of[i]);
    r.method = "one vertex from three parts";
  }
  return checked(std::move(r));
}

FamilyResult cycle_result(const FamilySpec& spec, uint32_t n) {
  FamilyResult r;
  r.spec = spec;
  r.witness = VertexSet(n);
  if (n % 2 == 0 && n % 4 != 0) {
    r.kind = FamilyResult::Kind::exact;
    r.value = static_cast<int>(n / 2);
    for (uint32_t v = 0; v < n; v += 2) r.witness.set(v);  // odd labels, 1-based
    r.method = "alternate vertices";
  } else if (n % 4 == 0) {
    r.kind = FamilyResult::Kind::exact;
    r.value = static_cast<int>(3 * n / 4 - 1);
    r.witness = VertexSet::full(n);
    for (uint32_t label = 2; label <= n / 2 + 2; label += 2)
      r.witness.reset(label - 1);
    r.method = "all but the low even labels";
  } else {
    // odd order: only an interval is known; witness realizes the upper end
    r.kind = FamilyResult::Kind::interval;
    r.lo = static_cast<int>((n - 1) / 2);
    uint32_t half = (n + 1) / 2;
    r.hi = static_cast<int>(n - r_exact((half + 1) / 2).r_value);
    r.value = r.hi;
    r.witness = path_equalizer(half);  // labels 1..(n+1)/2 of the cycle
    // widen the universe and add labels (n+1)/2+1 .. n
    VertexSet w(n);
    for (uint32_t v = 0; v < half; ++v)
      if (r.witness.test(v)) w.set(v);
    for (uint32_t v = half; v < n; ++v) w.set(v);
    r.witness = std::move(w);
    r.method = "half arc plus path witness";
  }
  return checked(std::move(r));
}

FamilyResult johnson_result(const FamilySpec& spec, uint32_t n, uint32_t k) {
  bool covered = n == 2 * k - 1 || n == 2 * k + 1 ||
                 static_cast<uint64_t>(n) > 2ull * k * k;
  if (!covered)
    throw NoFormulaError("no known result for J(" + std::to_string(n) + "," +
                         std::to_string(k) + ")");
  Graph g = generate(spec);

  // windows {i, i+1, ..., i+k-1} mod n in the colex vertex numbering
  std::map<uint64_t, uint32_t> index_of;
  {
    uint64_t v = (uint64_t{1} << k) - 1;
    uint64_t limit = uint64_t{1} << n;
    uint32_t idx = 0;
    while (v < limit) {
      index_of[v] = idx++;
      uint64_t t = v | (v - 1);
      v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    }
  }
  FamilyResult r;
  r.spec = spec;
  r.kind = FamilyResult::Kind::upper_bound;
  r.value = static_cast<int>(n);
  r.witness = VertexSet(g.order());
  for (uint32_t i = 0; i < n; ++i) {
    uint64_t mask = 0;
    for (uint32_t j = 0; j < k; ++j) mask |= uint64_t{1} << ((i + j) % n);
    r.witness.set(index_of.at(mask));
  }
  r.method = "window family";
  return checked(std::move(r));
}

}  // namespace

FamilyResult family_eqdim(const FamilySpec& spec) {
  using Kind = FamilySpec::Kind;
  switch (spec.kind) {
    case Kind::path: {
      uint32_t n = spec.params[0];
      FamilyResult r;
      r.spec = spec;
      r.kind = FamilyResult::Kind::exact;
      r.value = static_cast<int>(n - r_exact((n + 1) / 2).r_value);
      r.witness = path_equalizer(n);
      r.method = "progression-free complement";
      return checked(std::move(r));
    }
    case Kind::cycle:
      return cycle_result(spec, spec.params[0]);
    case Kind::complete: {
      uint32_t n = spec.params[0];
      FamilyResult r;
      r.spec = spec;
      r.kind = FamilyResult::Kind::exact;
      r.witness = VertexSet(n);
      if (n == 1) {
        r.value = 0;
        r.method = "trivial";
      } else {
        r.value = 1;
        r.witness.set(0);
        r.method = "universal vertex";
      }
      return checked(std::move(r));
    }
    case Kind::star: {
      FamilyResult r;
      r.spec = spec;
      r.kind = FamilyResult::Kind::exact;
      r.value = 1;
      r.witness = VertexSet(spec.params[0]);
      r.witness.set(0);
      r.method = "universal vertex";
      return checked(std::move(r));
    }
    case Kind::complete_multipartite: {
      if (spec.params.size() < 2)
        throw NoFormulaError("one-part multipartite graphs are disconnected");
      return multipartite_result(spec, spec.params);
    }
    case Kind::bistar: {
      uint32_t r0 = spec.params[0], s0 = spec.params[1];
      if (std::min(r0, s0) < 3)
        throw NoFormulaError("bistar formula needs r, s >= 3");
      FamilyResult r;
      r.spec = spec;
      r.kind = FamilyResult::Kind::exact;
      r.value = static_cast<int>(std::min(r0, s0));
      r.witness = VertexSet(r0 + s0);
      // the partite set of the smaller cardinality: one center plus the
      // leaves of the other
      if (r0 <= s0) {
        r.witness.set(1);
        for (uint32_t v = 2; v <= r0; ++v) r.witness.set(v);
      } else {
        r.witness.set(0);
        for (uint32_t v = r0 + 1; v < r0 + s0; ++v) r.witness.set(v);
      }
      r.method = "smaller partite set";
      return checked(std::move(r));
    }
    case Kind::johnson:
      return johnson_result(spec, spec.params[0], spec.params[1]);
    default:
      throw NoFormulaError("no known closed-form result for " +
                           spec.to_string());
  }
}

TableReport verify_family_table(uint32_t n_max, uint64_t budget) {
  if (n_max > 20)
    throw std::invalid_argument("full table cross-check capped at n = 20");
  TableReport report;
  for (uint32_t n = 3; n <= n_max; ++n) {
    TableRow row;
    row.n = n;
    row.r_half = r_exact((n + 1) / 2).r_value;

    FamilyResult path = family_eqdim(FamilySpec::parse("path:" + std::to_string(n)));
    row.path_formula = path.value;
    EqdimResult ps = eqdim_exact(generate(path.spec), budget);
    row.path_search = ps.value.value_or(-1);

    FamilyResult cyc = family_eqdim(FamilySpec::parse("cycle:" + std::to_string(n)));
    if (cyc.kind == FamilyResult::Kind::interval) {
      row.cycle_lo = cyc.lo;
      row.cycle_hi = cyc.hi;
    } else {
      row.cycle_lo = row.cycle_hi = cyc.value;
    }
    EqdimResult cs = eqdim_exact(generate(cyc.spec), budget);
    row.cycle_search = cs.value.value_or(-1);

    row.ok = row.path_formula == row.path_search &&
             row.cycle_lo <= row.cycle_search && row.cycle_search <= row.cycle_hi;
    report.all_ok = report.all_ok && row.ok;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace eqdim
