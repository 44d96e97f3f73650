#include "eqdim/apfree.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "eqdim/equalizer.hpp"
#include "eqdim/family_spec.hpp"

namespace eqdim {

namespace {

constexpr uint32_t kRnLimit = 123;

// Search state for maximum progression-free subsets. Elements are added in
// increasing order; adding b rules out 2b - a for every a already chosen, so
// a "forbidden" mask is enough to keep candidates clean.
struct ApSearch {
  uint32_t n;
  std::vector<uint32_t> chosen;

  explicit ApSearch(uint32_t n) : n(n) {}

  VertexSet forbid_after(const VertexSet& forbidden, uint32_t b) const {
    VertexSet out = forbidden;
    for (uint32_t a : chosen) {
      uint64_t f = 2ull * b - a;
      if (f <= n) out.set(static_cast<uint32_t>(f));
    }
    return out;
  }

  uint32_t allowed_from(const VertexSet& forbidden, uint32_t v) const {
    uint32_t c = 0;
    for (uint32_t i = v; i <= n; ++i)
      if (!forbidden.test(i)) ++c;
    return c;
  }

  // Phase 1: maximum size.
  uint32_t best = 0;
  void maximize(uint32_t from, const VertexSet& forbidden) {
    best = std::max(best, static_cast<uint32_t>(chosen.size()));
    for (uint32_t v = from; v <= n; ++v) {
      if (forbidden.test(v)) continue;
      if (chosen.size() + allowed_from(forbidden, v) <= best) return;
      VertexSet next = forbid_after(forbidden, v);
      chosen.push_back(v);
      maximize(v + 1, next);
      chosen.pop_back();
    }
  }

  // Phase 2: lexicographically least set of the known maximum size.
  uint32_t target = 0;
  std::vector<uint32_t> witness;
  bool found = false;
  void first_of_size(uint32_t from, const VertexSet& forbidden) {
    if (chosen.size() == target) {
      witness = chosen;
      found = true;
      return;
    }
    for (uint32_t v = from; v <= n && !found; ++v) {
      if (forbidden.test(v)) continue;
      if (chosen.size() + allowed_from(forbidden, v) < target) return;
      VertexSet next = forbid_after(forbidden, v);
      chosen.push_back(v);
      first_of_size(v + 1, next);
      chosen.pop_back();
    }
  }
};

std::mutex rn_mutex;
std::map<uint32_t, RnRecord> rn_memo;

}  // namespace

IntSet::IntSet(uint32_t bound, std::vector<uint32_t> ms)
    : bound(bound), members(std::move(ms)) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (uint32_t m : members)
    if (m < 1 || m > bound)
      throw std::invalid_argument("integer set member outside [1..n]");
}

bool is_3ap_free(const IntSet& t) {
  VertexSet present(t.bound + 1);
  for (uint32_t m : t.members) present.set(m);
  for (size_t i = 0; i < t.members.size(); ++i)
    for (size_t j = i + 1; j < t.members.size(); ++j) {
      uint32_t a = t.members[i], c = t.members[j];
      if ((a + c) % 2 == 0 && present.test((a + c) / 2) && (a + c) / 2 != a)
        return false;
    }
  return true;
}

bool is_even_sum(const IntSet& t) {
  for (size_t i = 1; i < t.members.size(); ++i)
    if ((t.members[i] & 1) != (t.members[0] & 1)) return false;
  return true;
}

uint32_t r_search_limit() { return kRnLimit; }

RnRecord r_exact(uint32_t n) {
  if (n < 1 || n > kRnLimit)
    throw std::invalid_argument("r search limited to 1..123");
  {
    std::lock_guard<std::mutex> lock(rn_mutex);
    auto it = rn_memo.find(n);
    if (it != rn_memo.end()) return it->second;
  }

  ApSearch search(n);
  // greedy incumbent
  {
    VertexSet forbidden(n + 1);
    for (uint32_t v = 1; v <= n; ++v) {
      if (forbidden.test(v)) continue;
      forbidden = search.forbid_after(forbidden, v);
      search.chosen.push_back(v);
    }
    search.best = static_cast<uint32_t>(search.chosen.size());
    search.chosen.clear();
  }
  search.maximize(1, VertexSet(n + 1));

  search.target = search.best;
  search.first_of_size(1, VertexSet(n + 1));

  RnRecord rec;
  rec.n = n;
  rec.r_value = search.best;
  rec.witness = IntSet(n, search.witness);

  std::lock_guard<std::mutex> lock(rn_mutex);
  return rn_memo.emplace(n, std::move(rec)).first->second;
}

IntSet lift(const IntSet& k, Parity parity, uint32_t n) {
  uint32_t half = (n + 1) / 2;
  std::vector<uint32_t> out;
  out.reserve(k.members.size());
  for (uint32_t m : k.members) {
    if (m > half)
      throw std::invalid_argument("lift input outside [1..ceil(n/2)]");
    uint32_t v = parity == Parity::odd ? 2 * m - 1 : 2 * m;
    if (v > n) throw std::invalid_argument("lifted member exceeds n");
    out.push_back(v);
  }
  return IntSet(n, std::move(out));
}

VertexSet path_equalizer(uint32_t n) {
  if (n < 1) throw std::invalid_argument("path order must be at least 1");
  RnRecord rec = r_exact((n + 1) / 2);
  uint32_t max_member =
      rec.witness.members.empty() ? 0 : rec.witness.members.back();
  Parity parity = 2ull * max_member > n ? Parity::odd : Parity::even;
  IntSet lifted = lift(rec.witness, parity, n);

  VertexSet s = VertexSet::full(n);
  for (uint32_t t : lifted.members) s.reset(t - 1);

  if (s.count() != n - rec.r_value)
    throw std::logic_error("path equalizer has unexpected size");
  Graph path = generate(FamilySpec::parse("path:" + std::to_string(n)));
  if (!verify_distance_equalizer(path, DistanceMatrix::build(path), s, false).valid)
    throw std::logic_error("path equalizer failed verification");
  return s;
}

bool is_diagonal_dominating(const IntSet& k, uint32_t n) {
  if (n < 1) throw std::invalid_argument("board size must be at least 1");
  VertexSet on(n + 1);
  for (uint32_t m : k.members) {
    if (m > n) throw std::invalid_argument("queen outside the board");
    on.set(m);
  }
  bool have_queen = !k.members.empty();
  for (uint32_t i = 1; i <= n; ++i)
    for (uint32_t j = 1; j <= n; ++j) {
      if (on.test(i) || on.test(j)) continue;              // row or column
      if (i == j && have_queen) continue;                  // main diagonal
      if ((i + j) % 2 == 0 && on.test((i + j) / 2)) continue;  // antidiagonal
      return false;
    }
  return true;
}

}  // namespace eqdim
