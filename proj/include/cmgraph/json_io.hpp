#pragma once

#include <vector>

#include "json.hpp"

#include "cmgraph/cm_criteria.hpp"
#include "cmgraph/cover_matching.hpp"
#include "cmgraph/homology.hpp"
#include "cmgraph/shelling.hpp"

namespace cmgraph {

inline nlohmann::json to_json(VertexSet s) { return s.members(); }

inline nlohmann::json to_json(const std::vector<VertexSet>& sets) {
  nlohmann::json out = nlohmann::json::array();
  for (VertexSet s : sets) out.push_back(to_json(s));
  return out;
}

/// {"characteristic": int, "is_cm": bool, "witness": {"face": [ints], "index": int} | null}
inline nlohmann::json to_json(const CMReport& r) {
  nlohmann::json witness = nullptr;
  if (r.witness) witness = {{"face", to_json(r.witness->face)}, {"index", r.witness->index}};
  return {{"characteristic", r.field.value()}, {"is_cm", r.is_cm}, {"witness", witness}};
}

inline CMReport cm_report_from_json(const nlohmann::json& j) {
  CMReport r;
  r.field = FieldSpec::characteristic(j.at("characteristic").get<long long>());
  r.is_cm = j.at("is_cm").get<bool>();
  if (!j.at("witness").is_null()) {
    const auto& w = j.at("witness");
    r.witness = CMWitness{VertexSet(w.at("face").get<std::vector<Vertex>>()), w.at("index").get<int>()};
  }
  return r;
}

/// Betti numbers as an array whose first element is degree -1.
inline nlohmann::json to_json(const BettiVector& b) { return nlohmann::json(std::vector<long long>(b)); }

inline nlohmann::json to_json(const RMatching& m) { return to_json(m.cliques); }

inline nlohmann::json to_json(const ShellingResult& s) {
  nlohmann::json order = nullptr;
  if (s.status == ShellStatus::shellable) order = to_json(s.order);
  return {{"status", to_string(s.status)}, {"order", order}, {"steps", s.steps}};
}

}  // namespace cmgraph
