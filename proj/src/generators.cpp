#include "oreforce/generators.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "oreforce/errors.hpp"
#include "oreforce/hforce.hpp"

namespace oreforce {
namespace {

void join_clique(Graph& g, Vertex first, Vertex last) {
  for (Vertex u = first; u < last; ++u)
    for (Vertex v = u + 1; v < last; ++v) g.add_edge(u, v);
}

void join_all(Graph& g, Vertex a0, Vertex a1, Vertex b0, Vertex b1) {
  for (Vertex u = a0; u < a1; ++u)
    for (Vertex v = b0; v < b1; ++v) g.add_edge(u, v);
}

void add_inner_edges(Graph& g, std::span<const Edge> edges, std::size_t limit) {
  for (const Edge& e : edges) {
    if (e.u == e.v) throw DomainError("inner edge is a self-loop");
    if (e.u >= limit || e.v >= limit)
      throw DomainError("inner edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                        " leaves the Z part (0.." + std::to_string(limit - 1) + ")");
    g.add_edge(e.u, e.v);
  }
}

// Uniform double in [0, 1) from the top 53 bits; independent of the
// standard library's distribution implementations.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t parse_size(std::string_view tok) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("bad vertex label '" + std::string(tok) + "'");
  return v;
}

// Joins the nonadjacent pair with the smallest degree sum (lexicographically
// smallest among ties) until every nonadjacent pair reaches n.
//
// Vertices are kept sorted by (degree, label). For a vertex u the cheapest
// partner is the first non-neighbour in that order, so only the prefix of
// vertices that can still reach the current minimum is examined.
void repair_in_place(Graph& g) {
  const std::size_t n = g.order();
  const auto& deg = g.degrees();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  auto before = [&](Vertex a, Vertex b) { return deg[a] != deg[b] ? deg[a] < deg[b] : a < b; };

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::sort(order.begin(), order.end(), before);

  std::vector<std::size_t> cand(n, kNone);
  std::vector<Vertex> touched;
  for (;;) {
    std::size_t best = kNone;
    touched.clear();
    for (std::size_t i = 0; i < n; ++i) {
      const Vertex u = order[i];
      const std::size_t lowest_other = deg[order[i == 0 ? 1 : 0]];
      if (best != kNone && deg[u] + lowest_other > best) break;
      std::size_t c = kNone;
      for (Vertex v : order) {
        if (v != u && !g.adjacent(u, v)) {
          c = deg[u] + deg[v];
          break;
        }
      }
      cand[u] = c;
      touched.push_back(u);
      best = std::min(best, c);
    }
    if (best == kNone || best >= n) return;

    Vertex a = kNone;
    for (Vertex u : touched)
      if (cand[u] == best) a = std::min(a, u);
    Vertex b = kNone;
    for (Vertex v = 0; v < n; ++v) {
      if (v != a && !g.adjacent(a, v) && deg[a] + deg[v] == best) {
        b = v;
        break;
      }
    }
    g.add_edge(a, b);
    // Only a and b moved; insertion sort restores the order in near-linear time.
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = i; j > 0 && before(order[j], order[j - 1]); --j)
        std::swap(order[j], order[j - 1]);
  }
}

}  // namespace

Graph gen_complete(std::size_t n) {
  if (n == 0) throw DomainError("complete graph needs n >= 1");
  Graph g(n);
  join_clique(g, 0, n);
  return g;
}

Graph gen_phi1(std::size_t n, std::size_t m) {
  if (n < 5) throw DomainError("phi1 needs n >= 5");
  if (m < 1 || 2 * m >= n) throw DomainError("phi1 needs 1 <= m < n/2");
  Graph g(n);
  join_clique(g, 0, m);
  join_clique(g, m, n - 2);
  for (Vertex apex : {n - 2, n - 1})
    for (Vertex v = 0; v < n; ++v)
      if (v != apex) g.add_edge(apex, v);
  return g;
}

Graph gen_g21(std::size_t m) {
  if (m < 2) throw DomainError("G21 needs m >= 2");
  const std::size_t n = 2 * m + 2;
  Graph g(n);
  join_clique(g, m + 1, n);
  join_all(g, 0, m + 1, m + 1, n);
  return g;
}

Graph gen_complete_bipartite(std::size_t k) {
  if (k < 2) throw DomainError("K_{k,k} needs k >= 2");
  Graph g(2 * k);
  join_all(g, 0, k, k, 2 * k);
  return g;
}

Graph gen_psi(std::size_t m, std::span<const Edge> z_edges) {
  if (m < 2) throw DomainError("psi needs m >= 2");
  const std::size_t n = 2 * m + 1;
  Graph g(n);
  add_inner_edges(g, z_edges, m);
  join_all(g, 0, m, m, n);
  return g;
}

bool is_g12_shape(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 6 || n % 2 != 0) return false;
  VertexSet universal;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) universal.push_back(v);
  if (universal.size() != 2 || !recognize_two_cliques(g, universal)) return false;
  auto comps = components_without(g, universal);
  return comps[0].size() == n / 2 - 1 && comps[1].size() == n / 2 - 1;
}

Graph gen_phi3_regular(std::size_t n, std::size_t m, std::span<const Edge> z_edges) {
  if (n < 4 || n % 2 != 0) throw DomainError("phi3 join needs an even n >= 4");
  if (2 * m >= n) throw DomainError("phi3 join needs 0 <= m < n/2");
  const std::size_t z = n - m;
  Graph g(n);
  add_inner_edges(g, z_edges, z);
  for (Vertex v = 0; v < z; ++v) {
    if (g.degree(v) != n / 2 - m)
      throw DomainError("degree condition violated: Z vertex " + std::to_string(v) +
                        " has inner degree " + std::to_string(g.degree(v)) + ", needs " +
                        std::to_string(n / 2 - m));
  }
  join_clique(g, z, n);
  join_all(g, 0, z, z, n);
  if (is_g12_shape(g) || balanced_complete_bipartite_part(g))
    throw DomainError("excluded graph");
  return g;
}

Graph gen_random_otg(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw DomainError("random OTG needs n >= 3");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n)};
  std::mt19937_64 rng(seq);
  const double p = 0.15 + 0.7 * unit(rng);

  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (unit(rng) < p) g.add_edge(u, v);

  repair_in_place(g);
  return g;
}

Graph repair_to_otg(Graph g) {
  if (g.order() < 3) throw DomainError("repair needs n >= 3");
  repair_in_place(g);
  return g;
}

Graph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::G11: return gen_phi1(spec.n, spec.m);
    case Family::G12:
      if (spec.n % 2 != 0) throw DomainError("G12 needs an even n");
      return gen_phi1(spec.n, spec.n / 2 - 1);
    case Family::G21: return gen_g21(spec.m);
    case Family::KHalfHalf: return gen_complete_bipartite(spec.k);
    case Family::Psi: return gen_psi(spec.m, spec.inner_edges);
    case Family::Phi3Regular: return gen_phi3_regular(spec.n, spec.m, spec.inner_edges);
    case Family::Complete: return gen_complete(spec.n);
    case Family::RandomOtg: return gen_random_otg(spec.n, spec.seed);
  }
  throw DomainError("unknown family");
}

std::vector<Edge> parse_edge_spec(std::string_view text) {
  std::vector<Edge> out;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == ';'; };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    if (j == i) break;
    std::string_view tok = text.substr(i, j - i);
    auto dash = tok.find('-');
    if (dash == std::string_view::npos) throw ParseError("edge '" + std::string(tok) + "' is not of the form u-v");
    Vertex u = parse_size(tok.substr(0, dash));
    Vertex v = parse_size(tok.substr(dash + 1));
    if (u == v) throw ParseError("edge '" + std::string(tok) + "' is a self-loop");
    out.emplace_back(u, v);
    i = j;
  }
  return out;
}

}  // namespace oreforce
