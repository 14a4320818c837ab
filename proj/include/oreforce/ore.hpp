#ifndef OREFORCE_ORE_HPP
#define OREFORCE_ORE_HPP

#include <cstddef>
#include <optional>

#include "oreforce/graph.hpp"

namespace oreforce {

struct OtgReport {
  bool is_otg = false;
  // Lexicographically first nonadjacent pair with degree sum below n.
  std::optional<Edge> witness;
};

// Throws DomainError("too few vertices") when n < 3.
OtgReport check_otg(const Graph& g);

// Minimum degree at least n/2. Throws DomainError when n < 3.
bool check_dirac(const Graph& g);

// Counters collected while unwinding the closure.
struct UnwindStats {
  std::size_t steps = 0;         // edges removed
  std::size_t rotations = 0;     // removals that hit the current cycle
  std::size_t min_common = 0;    // smallest |S ∩ T| seen over all rotations
};

// Hamiltonian cycle of an OTG, returned in canonical form.
//
// Starts from 0,1,...,n-1 in the (complete) Bondy-Chvatal closure and removes
// the added edges in reverse order. When the cycle uses the removed edge uv,
// it is read as a path u = p[0], ..., p[n-1] = v and rotated through the
// smallest i with u ~ p[i+1] and p[i] ~ v into
// p[0..i], p[n-1], p[n-2], ..., p[i+1].
//
// Throws DomainError("not an OTG") if the precondition fails, and
// InternalInvariantError if no rotation index exists.
Cycle hamiltonian_cycle(const Graph& g, UnwindStats* stats = nullptr);

}  // namespace oreforce

#endif  // OREFORCE_ORE_HPP
