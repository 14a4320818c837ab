#ifndef OREFORCE_JSON_IO_HPP
#define OREFORCE_JSON_IO_HPP

#include <json.hpp>

#include "oreforce/closure.hpp"
#include "oreforce/graph.hpp"
#include "oreforce/hforce.hpp"
#include "oreforce/oracle.hpp"
#include "oreforce/ore.hpp"

namespace oreforce {

nlohmann::json edges_to_json(std::span<const Edge> edges);

// {"is_otg": bool, "witness": [u, v] | null}
nlohmann::json to_json(const OtgReport& report);

// {"threshold": t, "added": [[u,v],...], "result_edges": [[u,v],...]}
nlohmann::json to_json(const ClosureTrace& trace);

// {"n", "is_otg", "h", "class", "hforce_set", "closure_added"}
nlohmann::json to_json(const Graph& g, const HForceResult& result);

// {"n", "is_hamiltonian_graph", "min_h", "min_set", "nonhamiltonian_cycle_count",
//  "nonhamiltonian_cycles"}
nlohmann::json to_json(const Graph& g, const OracleReport& report);

// Reads back the fields of an hforce document. Throws ParseError on a
// missing or mistyped field.
HForceResult hforce_from_json(const nlohmann::json& doc);

}  // namespace oreforce

#endif  // OREFORCE_JSON_IO_HPP
