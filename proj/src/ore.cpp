#include "oreforce/ore.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "oreforce/closure.hpp"
#include "oreforce/errors.hpp"

namespace oreforce {
namespace {

void require_three(const Graph& g) {
  if (g.order() < 3) throw DomainError("too few vertices");
}

}  // namespace

OtgReport check_otg(const Graph& g) {
  require_three(g);
  const std::size_t n = g.order();
  const auto& deg = g.degrees();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v) && deg[u] + deg[v] < n) return {false, Edge(u, v)};
  return {true, std::nullopt};
}

bool check_dirac(const Graph& g) {
  require_three(g);
  const auto& deg = g.degrees();
  std::size_t delta = *std::min_element(deg.begin(), deg.end());
  return 2 * delta >= g.order();
}

Cycle hamiltonian_cycle(const Graph& g, UnwindStats* stats) {
  if (!check_otg(g).is_otg) throw DomainError("not an OTG");
  const std::size_t n = g.order();

  ClosureTrace trace = bc_closure(g);
  if (!trace.result.is_complete())
    throw InternalInvariantError("closure of an OTG is not complete");

  UnwindStats local;
  local.min_common = std::numeric_limits<std::size_t>::max();

  Graph h = std::move(trace.result);
  std::vector<Vertex> cyc(n);
  std::iota(cyc.begin(), cyc.end(), Vertex{0});
  std::vector<std::size_t> pos(n);
  std::iota(pos.begin(), pos.end(), std::size_t{0});
  std::vector<Vertex> path(n);

  for (auto it = trace.added.rbegin(); it != trace.added.rend(); ++it) {
    const Vertex a = it->u;
    const Vertex b = it->v;
    h.remove_edge(a, b);
    ++local.steps;

    // Is ab an edge of the current cycle? If so, orient so that the path
    // runs from one endpoint to the other along the remaining cycle edges.
    Vertex u, v;
    if (cyc[(pos[a] + 1) % n] == b) {
      u = b;
      v = a;  // path b -> ... -> a going forward from b
    } else if (cyc[(pos[b] + 1) % n] == a) {
      u = a;
      v = b;
    } else {
      continue;
    }
    ++local.rotations;

    std::size_t start = pos[u];
    for (std::size_t k = 0; k < n; ++k) path[k] = cyc[(start + k) % n];
    // path[0] = u, path[n-1] = v.

    std::size_t common = 0;
    std::size_t pick = n;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (h.adjacent(u, path[i + 1]) && h.adjacent(path[i], v)) {
        ++common;
        if (pick == n) pick = i;
      }
    }
    if (pick == n) {
      throw InternalInvariantError("empty rotation set while removing edge " +
                                   std::to_string(a) + "-" + std::to_string(b));
    }
    local.min_common = std::min(local.min_common, common);

    std::reverse(path.begin() + static_cast<std::ptrdiff_t>(pick) + 1, path.end());
    cyc = path;
    for (std::size_t k = 0; k < n; ++k) pos[cyc[k]] = k;
  }

  if (local.rotations == 0) local.min_common = 0;
  if (stats) *stats = local;
  return Cycle(std::move(cyc)).canonical();
}

}  // namespace oreforce
