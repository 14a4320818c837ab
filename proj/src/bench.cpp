#include "oreforce/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "oreforce/generators.hpp"
#include "oreforce/hforce.hpp"

namespace oreforce {

std::vector<std::size_t> bench_sizes(std::size_t max_n) {
  std::vector<std::size_t> sizes;
  for (std::size_t n = 5; n < max_n;
       n = static_cast<std::size_t>(std::ceil(static_cast<double>(n) * std::sqrt(2.0))))
    sizes.push_back(n);
  sizes.push_back(max_n);
  return sizes;
}

std::vector<BenchRow> bench(std::size_t max_n, std::size_t samples, std::uint64_t seed) {
  if (max_n < 5) throw std::invalid_argument("bench needs max_n >= 5");
  if (samples == 0) throw std::invalid_argument("bench needs at least one sample");

  std::vector<BenchRow> rows;
  for (std::size_t n : bench_sizes(max_n)) {
    std::vector<std::uint64_t> times;
    std::vector<std::size_t> edges;
    for (std::size_t i = 0; i < samples; ++i) {
      Graph g = gen_random_otg(n, seed * 1000003u + i);
      auto t0 = std::chrono::steady_clock::now();
      HForceResult r = classify(g);
      auto t1 = std::chrono::steady_clock::now();
      if (r.h == 0) throw std::logic_error("classify returned h = 0");
      times.push_back(static_cast<std::uint64_t>(
          std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
      edges.push_back(g.edge_count());
    }
    auto mid = static_cast<std::ptrdiff_t>(samples / 2);
    std::nth_element(times.begin(), times.begin() + mid, times.end());
    std::nth_element(edges.begin(), edges.begin() + mid, edges.end());
    rows.push_back({n, times[static_cast<std::size_t>(mid)], edges[static_cast<std::size_t>(mid)]});
  }
  return rows;
}

double loglog_slope(std::span<const BenchRow> rows, std::size_t lo, std::size_t hi) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t k = 0;
  for (const BenchRow& r : rows) {
    if (r.n < lo || r.n > hi) continue;
    double x = std::log(static_cast<double>(r.n));
    double y = std::log(static_cast<double>(std::max<std::uint64_t>(r.median_ns, 1)));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++k;
  }
  if (k < 2) return std::numeric_limits<double>::quiet_NaN();
  double kd = static_cast<double>(k);
  return (kd * sxy - sx * sy) / (kd * sxx - sx * sx);
}

void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows) {
  out << "n,median_ns,edges\n";
  for (const BenchRow& r : rows) out << r.n << ',' << r.median_ns << ',' << r.edges << '\n';
}

}  // namespace oreforce
