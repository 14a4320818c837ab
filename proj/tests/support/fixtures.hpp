#ifndef OREFORCE_TESTS_FIXTURES_HPP
#define OREFORCE_TESTS_FIXTURES_HPP

#include <initializer_list>
#include <vector>

#include "oreforce/generators.hpp"
#include "oreforce/graph.hpp"

namespace fixtures {

using oreforce::Edge;
using oreforce::Graph;

inline Graph graph(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> es) {
  Graph g(n);
  for (auto [u, v] : es) g.add_edge(u, v);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph complete(std::size_t n) { return oreforce::gen_complete(n); }

inline Graph k33() { return oreforce::gen_complete_bipartite(3); }

// Complete tripartite K_{2,2,2}: parts {0,1}, {2,3}, {4,5}.
inline Graph k222() {
  Graph g(6);
  for (std::size_t u = 0; u < 6; ++u)
    for (std::size_t v = u + 1; v < 6; ++v)
      if (u / 2 != v / 2) g.add_edge(u, v);
  return g;
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
  Graph g(10);
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, i + 5);
  }
  return g;
}

// Triangles 0-1-2 and 3-4-5 joined by the matching 0-3, 1-4, 2-5.
inline std::vector<Edge> prism_edges() {
  return {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}};
}

}  // namespace fixtures

#endif  // OREFORCE_TESTS_FIXTURES_HPP
