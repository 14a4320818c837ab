#include "oreforce/json_io.hpp"

#include "oreforce/errors.hpp"

namespace oreforce {

using nlohmann::json;

json edges_to_json(std::span<const Edge> edges) {
  json arr = json::array();
  for (const Edge& e : edges) arr.push_back({e.u, e.v});
  return arr;
}

json to_json(const OtgReport& report) {
  json doc;
  doc["is_otg"] = report.is_otg;
  doc["witness"] = report.witness ? json{report.witness->u, report.witness->v} : json(nullptr);
  return doc;
}

json to_json(const ClosureTrace& trace) {
  json doc;
  doc["threshold"] = trace.threshold;
  doc["added"] = edges_to_json(trace.added);
  doc["result_edges"] = edges_to_json(trace.result.edges());
  return doc;
}

json to_json(const Graph& g, const HForceResult& result) {
  json doc;
  doc["n"] = g.order();
  doc["is_otg"] = true;
  doc["h"] = result.h;
  doc["class"] = std::string(to_string(result.phi_class));
  doc["hforce_set"] = result.hforce_set;
  doc["closure_added"] = edges_to_json(result.closure.added);
  return doc;
}

json to_json(const Graph& g, const OracleReport& report) {
  json doc;
  doc["n"] = g.order();
  doc["is_hamiltonian_graph"] = report.is_hamiltonian_graph;
  doc["min_h"] = report.min_h;
  doc["min_set"] = report.min_set;
  doc["nonhamiltonian_cycle_count"] = report.nonhamiltonian_cycles.size();
  json cycles = json::array();
  for (const Cycle& c : report.nonhamiltonian_cycles) cycles.push_back(c.vertices());
  doc["nonhamiltonian_cycles"] = std::move(cycles);
  return doc;
}

HForceResult hforce_from_json(const json& doc) {
  try {
    HForceResult r;
    r.h = doc.at("h").get<std::size_t>();
    auto cls = phi_class_from_string(doc.at("class").get<std::string>());
    if (!cls) throw ParseError("unknown class '" + doc.at("class").get<std::string>() + "'");
    r.phi_class = *cls;
    r.hforce_set = doc.at("hforce_set").get<VertexSet>();
    for (const auto& e : doc.at("closure_added"))
      r.closure.added.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed hforce document: ") + e.what());
  }
}

}  // namespace oreforce
