#include "oreforce/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace oreforce {

Graph::Graph(std::size_t n) : n_(n), adj_(n * n, 0), degree_(n, 0) {
  if (n == 0) throw std::invalid_argument("graph must have at least one vertex");
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range (n=" +
                            std::to_string(n_) + ")");
  }
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v);
  return degree_[v];
}

bool Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (adj_[u * n_ + v]) return false;
  adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
  ++degree_[u];
  ++degree_[v];
  ++edge_count_;
  return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v || !adj_[u * n_ + v]) return false;
  adj_[u * n_ + v] = adj_[v * n_ + u] = 0;
  --degree_[u];
  --degree_[v];
  --edge_count_;
  return true;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  out.reserve(degree_[v]);
  for (Vertex w = 0; w < n_; ++w)
    if (adjacent(v, w)) out.push_back(w);
  return out;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  Graph h(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    check_vertex(keep[i]);
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (adjacent(keep[i], keep[j])) h.add_edge(i, j);
  }
  return h;
}

Graph Graph::complement() const {
  Graph h(n_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) h.add_edge(u, v);
  return h;
}

Cycle Cycle::canonical() const {
  if (order_.empty()) return *this;
  auto smallest = std::min_element(order_.begin(), order_.end());
  std::vector<Vertex> rotated(order_.size());
  std::rotate_copy(order_.begin(), smallest, order_.end(), rotated.begin());
  if (rotated.size() > 2 && rotated[1] > rotated.back())
    std::reverse(rotated.begin() + 1, rotated.end());
  return Cycle(std::move(rotated));
}

std::size_t degree(const Graph& g, Vertex v) { return g.degree(v); }

bool is_valid_cycle(const Graph& g, const Cycle& c) {
  const auto& vs = c.vertices();
  const std::size_t n = g.order();
  if (vs.size() < 3 || vs.size() > n) return false;
  std::vector<bool> seen(n, false);
  for (Vertex v : vs) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (!g.adjacent(vs[i], vs[(i + 1) % vs.size()])) return false;
  return true;
}

bool is_hamiltonian_cycle(const Graph& g, const Cycle& c) {
  return c.size() == g.order() && is_valid_cycle(g, c);
}

namespace {

// Components of the graph whose adjacency is `linked`, restricted to the
// vertices with alive[v] set.
template <typename Linked>
std::vector<VertexSet> components_impl(std::size_t n, const std::vector<bool>& alive,
                                       Linked linked) {
  std::vector<VertexSet> out;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (!alive[s] || seen[s]) continue;
    VertexSet comp;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (Vertex y = 0; y < n; ++y) {
        if (alive[y] && !seen[y] && y != x && linked(x, y)) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

std::vector<VertexSet> complement_components(const Graph& g) {
  std::vector<bool> alive(g.order(), true);
  return components_impl(g.order(), alive,
                         [&](Vertex x, Vertex y) { return !g.adjacent(x, y); });
}

std::vector<VertexSet> components_without(const Graph& g,
                                          std::span<const Vertex> removed) {
  std::vector<bool> alive(g.order(), true);
  for (Vertex v : removed) {
    if (v >= g.order()) throw std::out_of_range("vertex out of range");
    alive[v] = false;
  }
  return components_impl(g.order(), alive,
                         [&](Vertex x, Vertex y) { return g.adjacent(x, y); });
}

bool is_clique(const Graph& g, std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

bool is_independent(const Graph& g, std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) return false;
  return true;
}

VertexSet all_vertices(const Graph& g) {
  VertexSet out(g.order());
  std::iota(out.begin(), out.end(), Vertex{0});
  return out;
}

}  // namespace oreforce
