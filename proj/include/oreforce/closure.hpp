#ifndef OREFORCE_CLOSURE_HPP
#define OREFORCE_CLOSURE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "oreforce/graph.hpp"

namespace oreforce {

// Result of repeatedly joining nonadjacent pairs whose degree sum reaches
// `threshold`. `added` is in insertion order, so replaying it on the input
// reproduces every intermediate graph.
struct ClosureTrace {
  std::size_t threshold = 0;
  std::vector<Edge> added;
  Graph result;
};

// Deterministic closure: at every step the lexicographically smallest
// qualifying pair is joined. Throws DomainError if threshold == 0.
ClosureTrace close(const Graph& g, std::size_t threshold);

// Same closure, but among qualifying pairs the one with the smallest
// priority[u * n + v] (u < v) is joined first. The final graph does not
// depend on the priorities, only the trace does.
ClosureTrace close(const Graph& g, std::size_t threshold,
                   std::span<const std::uint64_t> priority);

// Threshold n + 1.
ClosureTrace weak_closure(const Graph& g);

// Threshold n (Bondy-Chvatal).
ClosureTrace bc_closure(const Graph& g);

// Replays `trace` against `input`: every added pair must be nonadjacent and
// meet the threshold at its insertion time, the result must equal input plus
// the added edges, and the result must admit no further qualifying pair.
bool verify_trace(const Graph& input, const ClosureTrace& trace);

}  // namespace oreforce

#endif  // OREFORCE_CLOSURE_HPP
