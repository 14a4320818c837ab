#include "oreforce/oracle.hpp"

#include <algorithm>
#include <string>

#include "oreforce/errors.hpp"

namespace oreforce {
namespace {

void check_cap(const Graph& g, OracleLimits limits) {
  if (g.order() > limits.max_vertices || g.order() > kOracleMaskBits)
    throw DomainError("oracle size limit");
}

struct CycleWalker {
  const Graph& g;
  const std::function<void(std::span<const Vertex>)>& visit;
  std::vector<Vertex> path;
  std::vector<bool> on_path;

  // Extends the path from its last vertex using only vertices above the
  // start; closes back to the start when the orientation is canonical.
  void extend() {
    const Vertex start = path.front();
    const Vertex last = path.back();
    const std::size_t n = g.order();
    if (path.size() >= 3 && g.adjacent(last, start) && path[1] < last) visit(path);
    for (Vertex w = start + 1; w < n; ++w) {
      if (on_path[w] || !g.adjacent(last, w)) continue;
      on_path[w] = true;
      path.push_back(w);
      extend();
      path.pop_back();
      on_path[w] = false;
    }
  }
};

bool ham_search(const Graph& g, std::vector<bool>& used, Vertex last, std::size_t depth) {
  const std::size_t n = g.order();
  if (depth == n) return g.adjacent(last, 0);
  for (Vertex w = 1; w < n; ++w) {
    if (used[w] || !g.adjacent(last, w)) continue;
    used[w] = true;
    if (ham_search(g, used, w, depth + 1)) return true;
    used[w] = false;
  }
  return false;
}

}  // namespace

std::uint64_t to_mask(const VertexSet& x) {
  std::uint64_t m = 0;
  for (Vertex v : x) m |= std::uint64_t{1} << v;
  return m;
}

VertexSet from_mask(std::uint64_t mask) {
  VertexSet out;
  for (Vertex v = 0; mask != 0; ++v, mask >>= 1)
    if (mask & 1) out.push_back(v);
  return out;
}

void for_each_cycle(const Graph& g, const std::function<void(std::span<const Vertex>)>& visit,
                    OracleLimits limits) {
  check_cap(g, limits);
  CycleWalker walker{g, visit, {}, std::vector<bool>(g.order(), false)};
  for (Vertex s = 0; s < g.order(); ++s) {
    walker.path.assign(1, s);
    walker.on_path[s] = true;
    walker.extend();
    walker.on_path[s] = false;
  }
}

std::vector<Cycle> enumerate_cycles(const Graph& g, OracleLimits limits) {
  std::vector<Cycle> out;
  for_each_cycle(
      g, [&](std::span<const Vertex> c) { out.emplace_back(std::vector<Vertex>(c.begin(), c.end())); },
      limits);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_hamiltonian_bf(const Graph& g, OracleLimits limits) {
  check_cap(g, limits);
  if (g.order() < 3) return false;
  std::vector<bool> used(g.order(), false);
  used[0] = true;
  return ham_search(g, used, 0, 1);
}

HForceOracle::HForceOracle(const Graph& g, OracleLimits limits) : n_(g.order()) {
  std::vector<std::uint64_t> masks;
  for_each_cycle(
      g,
      [&](std::span<const Vertex> c) {
        if (c.size() == n_) {
          hamiltonian_ = true;
          return;
        }
        cycles_.emplace_back(std::vector<Vertex>(c.begin(), c.end()));
        std::uint64_t m = 0;
        for (Vertex v : c) m |= std::uint64_t{1} << v;
        masks.push_back(m);
      },
      limits);
  std::sort(cycles_.begin(), cycles_.end());

  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  // Largest first so that a mask is only kept if no kept mask contains it.
  std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
    return pa != pb ? pa > pb : a < b;
  });
  for (std::uint64_t m : masks) {
    bool dominated = std::any_of(obstructions_.begin(), obstructions_.end(),
                                 [m](std::uint64_t o) { return (m & ~o) == 0; });
    if (!dominated) obstructions_.push_back(m);
  }
}

bool HForceOracle::forces(std::uint64_t mask) const {
  return std::none_of(obstructions_.begin(), obstructions_.end(),
                      [mask](std::uint64_t o) { return (mask & ~o) == 0; });
}

bool HForceOracle::is_hforce(const VertexSet& x) const {
  if (x.empty()) throw DomainError("H-force set must be nonempty");
  for (Vertex v : x)
    if (v >= n_) throw DomainError("vertex " + std::to_string(v) + " out of range");
  if (!hamiltonian_) throw DomainError("graph is not Hamiltonian");
  return forces(to_mask(x));
}

OracleReport HForceOracle::minimum() const {
  if (!hamiltonian_) throw DomainError("graph is not Hamiltonian");
  OracleReport report;
  report.nonhamiltonian_cycles = cycles_;
  report.is_hamiltonian_graph = true;
  if (obstructions_.empty()) {
    report.min_h = 1;
    report.min_set = {0};
    return report;
  }
  // Lexicographic k-subsets for k = 1, 2, ...; V itself always forces.
  for (std::size_t k = 1; k <= n_; ++k) {
    std::vector<bool> pick(n_, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::uint64_t m = 0;
      for (Vertex v = 0; v < n_; ++v)
        if (pick[v]) m |= std::uint64_t{1} << v;
      if (forces(m)) {
        report.min_h = k;
        report.min_set = from_mask(m);
        return report;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  throw InternalInvariantError("vertex set of a Hamiltonian graph failed to force");
}

bool is_hforce(const Graph& g, const VertexSet& x, OracleLimits limits) {
  return HForceOracle(g, limits).is_hforce(x);
}

OracleReport min_hforce(const Graph& g, OracleLimits limits) {
  return HForceOracle(g, limits).minimum();
}

}  // namespace oreforce
