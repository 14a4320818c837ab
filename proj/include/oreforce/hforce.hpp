#ifndef OREFORCE_HFORCE_HPP
#define OREFORCE_HFORCE_HPP

#include <cstddef>
#include <optional>
#include <string_view>

#include "oreforce/closure.hpp"
#include "oreforce/graph.hpp"

namespace oreforce {

// Class of the weak closure. Phi1: h = n-2, Phi2: h = n/2, Phi3: h = n.
// SmallNFallback marks n in {3, 4}, answered by the exhaustive oracle.
enum class PhiClass { Phi1, Phi2, Phi3, SmallNFallback };

std::string_view to_string(PhiClass c);
std::optional<PhiClass> phi_class_from_string(std::string_view s);

struct HForceResult {
  std::size_t h = 0;
  VertexSet hforce_set;
  PhiClass phi_class = PhiClass::Phi3;
  ClosureTrace closure;  // weak closure of the input
};

// H-force number and one minimum H-force set of an OTG, in O(n^3).
//
// Works on the weak closure Gw and the count `a` of vertices of degree n-1
// in Gw:
//   Gw complete                          -> Phi3, X = V
//   a == 2, Gw - {u,v} two cliques       -> Phi1, X = V - {u,v}
//   a == 2 otherwise                     -> Phi3, X = V
//   a == n/2                             -> Phi2, X = {x : d(x) < n-1}
//   a == 1 or 2 < a < n/2                -> Phi3, X = V
//   a == 0, Gw = K_{n/2,n/2}             -> Phi2, X = part holding vertex 0
//   a == 0 otherwise                     -> Phi3, X = V
//
// n in {3, 4} is routed to small_n_fallback. Throws DomainError for n < 3 or
// a non-OTG, InternalInvariantError if Gw has a shape no OTG closure can have.
HForceResult classify(const Graph& g);

// Oracle-backed answer for n in {3, 4}.
HForceResult small_n_fallback(const Graph& g);

// True iff g - exclude is the disjoint union of exactly two nonempty cliques.
bool recognize_two_cliques(const Graph& g, const VertexSet& exclude);

// If g is K_{k,k} with k = n/2, returns the part containing vertex 0.
std::optional<VertexSet> balanced_complete_bipartite_part(const Graph& g);

}  // namespace oreforce

#endif  // OREFORCE_HFORCE_HPP
