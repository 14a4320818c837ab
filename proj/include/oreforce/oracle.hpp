#ifndef OREFORCE_ORACLE_HPP
#define OREFORCE_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "oreforce/graph.hpp"

namespace oreforce {

// Exhaustive ground truth for H-force questions. Everything here is
// exponential; graphs above `max_vertices` are refused with
// DomainError("oracle size limit").
struct OracleLimits {
  std::size_t max_vertices = 12;
};

// Hard ceiling imposed by the 64-bit vertex masks.
inline constexpr std::size_t kOracleMaskBits = 64;

struct OracleReport {
  std::vector<Cycle> nonhamiltonian_cycles;
  std::size_t min_h = 0;
  VertexSet min_set;
  bool is_hamiltonian_graph = false;
};

// Visits every cycle exactly once, as a canonical vertex sequence.
void for_each_cycle(const Graph& g, const std::function<void(std::span<const Vertex>)>& visit,
                    OracleLimits limits = {});

std::vector<Cycle> enumerate_cycles(const Graph& g, OracleLimits limits = {});

// Backtracking search for a Hamiltonian cycle through vertex 0.
bool is_hamiltonian_bf(const Graph& g, OracleLimits limits = {});

// True iff no non-Hamiltonian cycle contains every vertex of x. Throws
// DomainError for an empty x, out-of-range members, or a non-Hamiltonian g.
bool is_hforce(const Graph& g, const VertexSet& x, OracleLimits limits = {});

// Exact minimum H-force set by cardinality-ascending search. When g has no
// non-Hamiltonian cycle every nonempty set forces, and the result is {0}.
OracleReport min_hforce(const Graph& g, OracleLimits limits = {});

// Cycle enumeration done once, answering many H-force queries. Each
// non-Hamiltonian cycle C contributes the obstruction mask of V(C); a set X
// forces iff it is not contained in any obstruction, i.e. it meets
// V(G) \ V(C) for every C.
class HForceOracle {
 public:
  explicit HForceOracle(const Graph& g, OracleLimits limits = {});

  std::size_t order() const { return n_; }
  bool is_hamiltonian_graph() const { return hamiltonian_; }
  const std::vector<Cycle>& nonhamiltonian_cycles() const { return cycles_; }

  // Distinct vertex masks of non-Hamiltonian cycles with no mask contained in
  // another (only maximal obstructions matter).
  const std::vector<std::uint64_t>& obstructions() const { return obstructions_; }

  bool forces(std::uint64_t mask) const;
  bool is_hforce(const VertexSet& x) const;
  OracleReport minimum() const;

 private:
  std::size_t n_ = 0;
  bool hamiltonian_ = false;
  std::vector<Cycle> cycles_;
  std::vector<std::uint64_t> obstructions_;
};

std::uint64_t to_mask(const VertexSet& x);
VertexSet from_mask(std::uint64_t mask);

}  // namespace oreforce

#endif  // OREFORCE_ORACLE_HPP
