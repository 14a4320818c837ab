#ifndef OREFORCE_GENERATORS_HPP
#define OREFORCE_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "oreforce/graph.hpp"

namespace oreforce {

// Named graph families. Parameter violations throw DomainError.
//
// Vertex layouts:
//   phi1(n, m)          clique of size m at 0..m-1, clique of size n-m-2 at
//                       m..n-3, apexes n-2 and n-1
//   g21(m)              independent set 0..m, clique m+1..2m+1
//   complete_bipartite  parts 0..k-1 and k..2k-1
//   psi(m, z)           Z at 0..m-1, independent set m..2m-1, u = 2m
//   phi3_regular(n,m,z) Z at 0..n-m-1, clique n-m..n-1

enum class Family { G11, G12, G21, KHalfHalf, Psi, Phi3Regular, Complete, RandomOtg };

struct FamilySpec {
  Family family = Family::Complete;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::vector<Edge> inner_edges;  // Z part for Psi and Phi3Regular
};

Graph gen_complete(std::size_t n);

// K2 v (K_m + K_{n-m-2}); 1 <= m < n/2, n >= 5. m = n/2 - 1 gives G12.
Graph gen_phi1(std::size_t n, std::size_t m);

// K^c_{m+1} v K_{m+1}, m >= 2.
Graph gen_g21(std::size_t m);

// K_{k,k}, k >= 2.
Graph gen_complete_bipartite(std::size_t k);

// Z_m v (K^c_m + {u}), m >= 2; z_edges use labels 0..m-1.
Graph gen_psi(std::size_t m, std::span<const Edge> z_edges);

// Z_{n-m} v K_m with every Z vertex of total degree n/2; n even,
// 0 <= m < n/2. Rejects graphs isomorphic to G12 or K_{n/2,n/2}.
Graph gen_phi3_regular(std::size_t n, std::size_t m, std::span<const Edge> z_edges);

// Seeded random graph repaired into an OTG: while some nonadjacent pair has
// degree sum below n, join the one with the smallest sum (ties broken
// lexicographically). Deterministic in (n, seed).
Graph gen_random_otg(std::size_t n, std::uint64_t seed);

// The repair step of gen_random_otg applied to an arbitrary graph.
Graph repair_to_otg(Graph g);

Graph generate(const FamilySpec& spec);

// True iff g is G12 up to isomorphism (two universal vertices whose removal
// leaves two cliques of size n/2 - 1).
bool is_g12_shape(const Graph& g);

// Parses "0-1,2-3" (also accepts whitespace separators). Throws ParseError.
std::vector<Edge> parse_edge_spec(std::string_view text);

}  // namespace oreforce

#endif  // OREFORCE_GENERATORS_HPP
