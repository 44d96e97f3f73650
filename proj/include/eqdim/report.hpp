#pragma once

#include <string>

#include "json.hpp"

#include "eqdim/conjectures.hpp"
#include "eqdim/equalizer.hpp"
#include "eqdim/families.hpp"
#include "eqdim/graph.hpp"
#include "eqdim/resolving.hpp"

namespace eqdim {

// Structured output. Vertex sets are emitted 0-based under their own key and
// 1-based under "<key>_1based"; key order is fixed so identical runs produce
// identical bytes.
using Json = nlohmann::ordered_json;

Json vertex_array(const VertexSet& s);             // 0-based
Json vertex_array_1based(const VertexSet& s);

Json bounds_json(const BoundsReport& b);
Json compute_json(const Graph& g, const EqdimResult& r, const BoundsReport& b);
Json certificate_json(const Graph& g, const VertexSet& s,
                      const EqualizerCertificate& cert);
Json doubly_certificate_json(const Graph& g, const VertexSet& s,
                             const DoublyResolvingCertificate& cert);
Json psi_json(const Graph& g, const EqdimResult& r);
Json family_json(const Graph& g, const FamilyResult& r);
Json harness_json(const HarnessReport& r);

std::string table_tsv(const TableReport& report);
std::string harness_tsv(const HarnessReport& r);

}  // namespace eqdim
