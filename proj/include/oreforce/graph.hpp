#ifndef OREFORCE_GRAPH_HPP
#define OREFORCE_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace oreforce {

using Vertex = std::size_t;

// Sorted ascending, no duplicates.
using VertexSet = std::vector<Vertex>;

// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1 backed by a dense symmetric
// adjacency matrix. Degrees are cached and kept in sync with the matrix.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  // Duplicate edges are ignored; self-loops and out-of-range endpoints throw
  // std::invalid_argument.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return adj_[u * n_ + v] != 0; }

  // Adjacency row of v: row(v)[w] != 0 iff v ~ w.
  std::span<const std::uint8_t> row(Vertex v) const { return {adj_.data() + v * n_, n_}; }

  // Throws std::out_of_range for v >= order().
  std::size_t degree(Vertex v) const;

  // Returns false if the edge was already present. Throws on loops.
  bool add_edge(Vertex u, Vertex v);
  bool remove_edge(Vertex u, Vertex v);

  std::vector<Edge> edges() const;
  std::vector<Vertex> neighbors(Vertex v) const;
  const std::vector<std::size_t>& degrees() const { return degree_; }

  bool is_complete() const { return edge_count_ == n_ * (n_ - 1) / 2; }

  // Subgraph induced by `keep`, relabelled 0..|keep|-1 in the order given.
  Graph induced(std::span<const Vertex> keep) const;
  Graph complement() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::size_t n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::size_t> degree_;
};

// Cyclic vertex sequence. Construction does not validate against a graph;
// use is_valid_cycle for that.
class Cycle {
 public:
  Cycle() = default;
  explicit Cycle(std::vector<Vertex> order) : order_(std::move(order)) {}

  const std::vector<Vertex>& vertices() const { return order_; }
  std::size_t size() const { return order_.size(); }

  // Rotation to the smallest vertex, then reflection so that the second
  // element is smaller than the last. Sequences with repeats are left as
  // rotated only.
  Cycle canonical() const;
  bool is_canonical() const { return canonical().order_ == order_; }

  friend auto operator<=>(const Cycle&, const Cycle&) = default;

 private:
  std::vector<Vertex> order_;
};

std::size_t degree(const Graph& g, Vertex v);

// Length >= 3, all vertices distinct and in range, consecutive vertices
// (including last to first) adjacent. Rotation and direction are free.
bool is_valid_cycle(const Graph& g, const Cycle& c);
bool is_hamiltonian_cycle(const Graph& g, const Cycle& c);

// Connected components of the complement graph, each sorted, listed in order
// of their smallest vertex.
std::vector<VertexSet> complement_components(const Graph& g);

// Connected components of g - removed.
std::vector<VertexSet> components_without(const Graph& g,
                                          std::span<const Vertex> removed);

bool is_clique(const Graph& g, std::span<const Vertex> vs);
bool is_independent(const Graph& g, std::span<const Vertex> vs);

VertexSet all_vertices(const Graph& g);

}  // namespace oreforce

#endif  // OREFORCE_GRAPH_HPP
