#include "oreforce/closure.hpp"

#include <functional>
#include <queue>
#include <stdexcept>
#include <tuple>

#include "oreforce/errors.hpp"

namespace oreforce {
namespace {

template <typename Priority>
ClosureTrace close_impl(const Graph& g, std::size_t threshold, Priority priority) {
  if (threshold == 0) throw DomainError("closure threshold must be at least 1");
  const std::size_t n = g.order();

  ClosureTrace trace;
  trace.threshold = threshold;
  trace.result = g;
  Graph& h = trace.result;

  using Item = std::tuple<std::uint64_t, Vertex, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  // Symmetric "already queued" flags, so that rows can be scanned linearly.
  std::vector<std::uint8_t> queued(n * n, 0);
  const auto& deg = h.degrees();

  auto enqueue = [&](Vertex a, Vertex b) {
    queued[a * n + b] = queued[b * n + a] = 1;
    Vertex u = a < b ? a : b;
    Vertex v = a < b ? b : a;
    queue.emplace(priority(u, v), u, v);
  };

  // Queues every nonadjacent partner w of x with deg[x] + deg[w] >= threshold.
  auto scan = [&](Vertex x) {
    const std::uint8_t* adj = h.row(x).data();
    const std::uint8_t* seen = queued.data() + x * n;
    const std::size_t need = deg[x] >= threshold ? 0 : threshold - deg[x];
    for (Vertex w = 0; w < n; ++w)
      if (!adj[w] && !seen[w] && w != x && deg[w] >= need) enqueue(x, w);
  };

  for (Vertex u = 0; u < n; ++u) scan(u);

  // Degrees never decrease, so a queued pair stays qualifying until joined,
  // and a pair starts qualifying only when one of its endpoints gains an edge.
  while (!queue.empty()) {
    auto [rank, u, v] = queue.top();
    queue.pop();
    h.add_edge(u, v);
    trace.added.emplace_back(u, v);
    scan(u);
    scan(v);
  }
  return trace;
}

}  // namespace

ClosureTrace close(const Graph& g, std::size_t threshold) {
  const std::size_t n = g.order();
  return close_impl(g, threshold, [n](Vertex u, Vertex v) {
    return static_cast<std::uint64_t>(u * n + v);
  });
}

ClosureTrace close(const Graph& g, std::size_t threshold,
                   std::span<const std::uint64_t> priority) {
  const std::size_t n = g.order();
  if (priority.size() != n * n)
    throw std::invalid_argument("priority table must have n*n entries");
  return close_impl(g, threshold, [priority, n](Vertex u, Vertex v) {
    return priority[u * n + v];
  });
}

ClosureTrace weak_closure(const Graph& g) { return close(g, g.order() + 1); }

ClosureTrace bc_closure(const Graph& g) { return close(g, g.order()); }

bool verify_trace(const Graph& input, const ClosureTrace& trace) {
  if (trace.threshold == 0 || trace.result.order() != input.order()) return false;
  Graph h = input;
  for (const Edge& e : trace.added) {
    if (e.u == e.v || e.v >= h.order() || h.adjacent(e.u, e.v)) return false;
    if (h.degree(e.u) + h.degree(e.v) < trace.threshold) return false;
    h.add_edge(e.u, e.v);
  }
  if (!(h == trace.result)) return false;
  const std::size_t n = h.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!h.adjacent(u, v) && h.degree(u) + h.degree(v) >= trace.threshold) return false;
  return true;
}

}  // namespace oreforce
