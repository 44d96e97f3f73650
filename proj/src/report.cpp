#include "eqdim/report.hpp"

#include <sstream>

namespace eqdim {

namespace {

Json graph_fields(const Graph& g) {
  Json j;
  j["graph"] = g.name().empty() ? Json(nullptr) : Json(g.name());
  j["n"] = g.order();
  return j;
}

Json pair_json(std::pair<uint32_t, uint32_t> p) {
  return Json::array({p.first, p.second});
}

Json pair_json_1based(std::pair<uint32_t, uint32_t> p) {
  return Json::array({p.first + 1, p.second + 1});
}

}  // namespace

Json vertex_array(const VertexSet& s) {
  Json a = Json::array();
  for (uint32_t v : s.elements()) a.push_back(v);
  return a;
}

Json vertex_array_1based(const VertexSet& s) {
  Json a = Json::array();
  for (uint32_t v : s.elements()) a.push_back(v + 1);
  return a;
}

Json bounds_json(const BoundsReport& b) {
  Json j;
  Json lower, upper;
  for (auto& [name, v] : b.lower) lower[name] = v;
  lower["best"] = b.best_lower;
  for (auto& [name, v] : b.upper) upper[name] = v;
  upper["best"] = b.best_upper;
  j["lower"] = lower;
  j["upper"] = upper;
  return j;
}

Json compute_json(const Graph& g, const EqdimResult& r, const BoundsReport& b) {
  Json j = graph_fields(g);
  j["exact"] = r.exact();
  if (r.exact())
    j["eqdim"] = *r.value;
  else
    j["interval"] = Json::array({r.lower, r.upper});
  Json bj = bounds_json(b);
  j["lower"] = bj["lower"];
  j["upper"] = bj["upper"];
  if (r.witness) {
    j["witness"] = vertex_array(*r.witness);
    j["witness_1based"] = vertex_array_1based(*r.witness);
  }
  j["nodes"] = r.nodes;
  return j;
}

Json certificate_json(const Graph& g, const VertexSet& s,
                      const EqualizerCertificate& cert) {
  Json j = graph_fields(g);
  j["set"] = vertex_array(s);
  j["set_1based"] = vertex_array_1based(s);
  j["valid"] = cert.valid;
  if (cert.failing_pair) {
    j["failing_pair"] = pair_json(*cert.failing_pair);
    j["failing_pair_1based"] = pair_json_1based(*cert.failing_pair);
  }
  return j;
}

Json doubly_certificate_json(const Graph& g, const VertexSet& s,
                             const DoublyResolvingCertificate& cert) {
  Json j = graph_fields(g);
  j["set"] = vertex_array(s);
  j["set_1based"] = vertex_array_1based(s);
  j["valid"] = cert.valid;
  if (cert.failing_pair) {
    j["failing_pair"] = pair_json(*cert.failing_pair);
    j["failing_pair_1based"] = pair_json_1based(*cert.failing_pair);
  }
  return j;
}

Json psi_json(const Graph& g, const EqdimResult& r) {
  Json j = graph_fields(g);
  j["exact"] = r.exact();
  if (r.exact())
    j["psi"] = *r.value;
  else
    j["interval"] = Json::array({r.lower, r.upper});
  if (r.witness) {
    j["witness"] = vertex_array(*r.witness);
    j["witness_1based"] = vertex_array_1based(*r.witness);
  }
  j["nodes"] = r.nodes;
  return j;
}

Json family_json(const Graph& g, const FamilyResult& r) {
  Json j = graph_fields(g);
  switch (r.kind) {
    case FamilyResult::Kind::exact:
      j["kind"] = "exact";
      j["eqdim"] = r.value;
      break;
    case FamilyResult::Kind::upper_bound:
      j["kind"] = "upper_bound";
      j["upper_bound"] = r.value;
      break;
    case FamilyResult::Kind::interval:
      j["kind"] = "interval";
      j["interval"] = Json::array({r.lo, r.hi});
      j["note"] = "exact value unknown";
      break;
  }
  j["witness"] = vertex_array(r.witness);
  j["witness_1based"] = vertex_array_1based(r.witness);
  j["witness_verified"] = true;  // family_eqdim re-verifies before returning
  j["method"] = r.method;
  return j;
}

Json harness_json(const HarnessReport& r) {
  Json j;
  j["claim"] = r.claim;
  j["corpus"] = r.corpus;
  j["checked"] = r.checked;
  j["status"] = r.status;
  Json cs = Json::array();
  for (auto& c : r.counterexamples) {
    Json cj;
    cj["graph6"] = c.graph6;
    cj["details"] = c.details;
    cs.push_back(cj);
  }
  j["counterexamples"] = cs;
  if (r.equality_count || !r.equality_samples.empty()) {
    j["equality_count"] = r.equality_count;
    j["equality_samples"] = r.equality_samples;
  }
  return j;
}

std::string table_tsv(const TableReport& report) {
  std::ostringstream out;
  out << "n\tr_half\tpath\tcycle_lo\tcycle_hi\tcycle_search\tok\n";
  for (const TableRow& row : report.rows) {
    out << row.n << '\t' << row.r_half << '\t' << row.path_formula << '\t'
        << row.cycle_lo << '\t' << row.cycle_hi << '\t' << row.cycle_search
        << '\t' << (row.ok ? "yes" : "NO") << '\n';
  }
  return out.str();
}

std::string harness_tsv(const HarnessReport& r) {
  std::ostringstream out;
  out << "claim\t" << r.claim << '\n';
  out << "corpus\t" << r.corpus << '\n';
  out << "checked\t" << r.checked << '\n';
  out << "status\t" << r.status << '\n';
  if (r.equality_count) out << "equality_cases\t" << r.equality_count << '\n';
  for (auto& c : r.counterexamples)
    out << "counterexample\t" << c.graph6 << '\t' << c.details << '\n';
  return out.str();
}

}  // namespace eqdim
