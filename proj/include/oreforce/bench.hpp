#ifndef OREFORCE_BENCH_HPP
#define OREFORCE_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace oreforce {

struct BenchRow {
  std::size_t n = 0;
  std::uint64_t median_ns = 0;
  std::size_t edges = 0;  // median edge count of the sampled graphs
};

// 5, then each size ~sqrt(2) times the previous, ending exactly at max_n.
std::vector<std::size_t> bench_sizes(std::size_t max_n);

// Median wall time of classify() over `samples` random OTGs per size. Graph
// generation is not timed. Throws std::invalid_argument if max_n < 5 or
// samples == 0.
std::vector<BenchRow> bench(std::size_t max_n, std::size_t samples, std::uint64_t seed);

// Least-squares slope of log(median_ns) against log(n) over rows with
// lo <= n <= hi. Returns NaN with fewer than two such rows.
double loglog_slope(std::span<const BenchRow> rows, std::size_t lo, std::size_t hi);

// Header "n,median_ns,edges" and one line per row.
void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows);

}  // namespace oreforce

#endif  // OREFORCE_BENCH_HPP
