#include "oreforce/hforce.hpp"

#include <algorithm>

#include "oreforce/errors.hpp"
#include "oreforce/oracle.hpp"
#include "oreforce/ore.hpp"

namespace oreforce {

std::string_view to_string(PhiClass c) {
  switch (c) {
    case PhiClass::Phi1: return "PHI1";
    case PhiClass::Phi2: return "PHI2";
    case PhiClass::Phi3: return "PHI3";
    case PhiClass::SmallNFallback: return "SMALL_N_FALLBACK";
  }
  return "?";
}

std::optional<PhiClass> phi_class_from_string(std::string_view s) {
  for (PhiClass c : {PhiClass::Phi1, PhiClass::Phi2, PhiClass::Phi3, PhiClass::SmallNFallback})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

bool recognize_two_cliques(const Graph& g, const VertexSet& exclude) {
  if (exclude.size() != 2 || exclude[0] == exclude[1]) return false;
  auto comps = components_without(g, exclude);
  if (comps.size() != 2) return false;
  return is_clique(g, comps[0]) && is_clique(g, comps[1]);
}

std::optional<VertexSet> balanced_complete_bipartite_part(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2 || n % 2 != 0) return std::nullopt;
  auto comps = complement_components(g);
  if (comps.size() != 2 || comps[0].size() != n / 2) return std::nullopt;
  if (!is_independent(g, comps[0]) || !is_independent(g, comps[1])) return std::nullopt;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) != n / 2) return std::nullopt;
  return comps[0];  // components are ordered by smallest vertex
}

HForceResult small_n_fallback(const Graph& g) {
  if (g.order() < 3) throw DomainError("too few vertices");
  if (g.order() > 4) throw DomainError("small-n fallback only covers n in {3, 4}");
  if (!check_otg(g).is_otg) throw DomainError("not an OTG");
  OracleReport report = min_hforce(g);
  HForceResult r;
  r.h = report.min_h;
  r.hforce_set = std::move(report.min_set);
  r.phi_class = PhiClass::SmallNFallback;
  r.closure = weak_closure(g);
  return r;
}

HForceResult classify(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3) throw DomainError("too few vertices");
  if (!check_otg(g).is_otg) throw DomainError("not an OTG");
  if (n <= 4) return small_n_fallback(g);

  HForceResult r;
  r.closure = weak_closure(g);
  const Graph& gw = r.closure.result;

  VertexSet universal;
  VertexSet rest;
  for (Vertex v = 0; v < n; ++v) (gw.degree(v) == n - 1 ? universal : rest).push_back(v);
  const std::size_t a = universal.size();

  auto everything = [&] {
    r.h = n;
    r.hforce_set = all_vertices(gw);
    r.phi_class = PhiClass::Phi3;
    return r;
  };

  if (a == n) return everything();

  if (a == 2) {
    if (recognize_two_cliques(gw, universal)) {
      r.h = n - 2;
      r.hforce_set = rest;
      r.phi_class = PhiClass::Phi1;
      return r;
    }
    return everything();
  }

  if (n % 2 == 0 && a == n / 2) {
    // Each remaining vertex sees exactly the universal ones.
    if (!is_independent(gw, rest))
      throw InternalInvariantError("non-universal vertices of the closure are not independent");
    for (Vertex x : rest)
      if (gw.degree(x) != a)
        throw InternalInvariantError("non-universal vertex misses a universal vertex");
    r.h = n / 2;
    r.hforce_set = rest;
    r.phi_class = PhiClass::Phi2;
    return r;
  }

  if (a == 1 || (a > 2 && 2 * a < n)) return everything();

  if (a == 0) {
    if (n % 2 != 0 || std::any_of(gw.degrees().begin(), gw.degrees().end(),
                                  [n](std::size_t d) { return 2 * d != n; })) {
      throw InternalInvariantError("closure with no universal vertex is not n/2-regular");
    }
    if (auto part = balanced_complete_bipartite_part(gw)) {
      r.h = n / 2;
      r.hforce_set = std::move(*part);
      r.phi_class = PhiClass::Phi2;
      return r;
    }
    return everything();
  }

  throw InternalInvariantError("closure has " + std::to_string(a) +
                               " universal vertices, which no OTG closure allows");
}

}  // namespace oreforce
