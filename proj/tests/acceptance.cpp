// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "brute.hpp"
#include "oreforce/bench.hpp"
#include "oreforce/closure.hpp"
#include "oreforce/generators.hpp"
#include "oreforce/hforce.hpp"
#include "oreforce/oracle.hpp"
#include "oreforce/ore.hpp"

using namespace oreforce;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void fail(const std::string& what) {
    if (ok) detail << what;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_s > 0 && secs >= limit_s) o.fail("took " + std::to_string(secs) + " s");
  if (!o.ok) ++failures;
  std::printf("[%s] %2d. %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs,
              o.detail.str().empty() ? "" : ": ", o.detail.str().c_str());
  std::fflush(stdout);
}

std::string label(const char* what, std::size_t a, std::size_t b = SIZE_MAX) {
  std::string s = std::string(what) + "(" + std::to_string(a);
  if (b != SIZE_MAX) s += "," + std::to_string(b);
  return s + ")";
}

// classify's answer against the cycle-enumeration oracle: same h, the set
// forces, and no set of size h - 1 forces.
bool oracle_confirms(const Graph& g, const HForceResult& r, const HForceOracle& oracle) {
  if (oracle.minimum().min_h != r.h) return false;
  if (!oracle.forces(to_mask(r.hforce_set))) return false;
  const std::size_t n = g.order();
  if (r.h >= 2) {
    for (std::uint64_t x = 1; x < (std::uint64_t{1} << n); ++x)
      if (static_cast<std::size_t>(std::popcount(x)) == r.h - 1 && oracle.forces(x)) return false;
  }
  return true;
}

std::size_t min_nonadjacent_sum(const Graph& g) {
  std::size_t best = 2 * g.order();
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) best = std::min(best, g.degree(u) + g.degree(v));
  return best;
}

std::vector<Edge> random_edges(std::size_t m, double p, std::mt19937_64& rng) {
  return brute::random_graph(m, p, rng).edges();
}

}  // namespace

int main() {
  criterion(1, "complete graphs K_5..K_10 have h = n", 5.0, [](Outcome& o) {
    for (std::size_t n = 5; n <= 10; ++n) {
      Graph g = gen_complete(n);
      HForceResult r = classify(g);
      if (r.h != n || r.phi_class != PhiClass::Phi3) o.fail(label("K", n) + " classify");
      if (!oracle_confirms(g, r, HForceOracle(g))) o.fail(label("K", n) + " oracle");
    }
  });

  criterion(2, "K_{k,k} for k = 3,4,5 has h = k, set is one part", 30.0, [](Outcome& o) {
    for (std::size_t k = 3; k <= 5; ++k) {
      Graph g = gen_complete_bipartite(k);
      HForceResult r = classify(g);
      VertexSet left(k), right(k);
      std::iota(left.begin(), left.end(), 0);
      std::iota(right.begin(), right.end(), k);
      if (r.h != k || (r.hforce_set != left && r.hforce_set != right)) o.fail(label("K_kk", k));
      if (k <= 4 && !oracle_confirms(g, r, HForceOracle(g))) o.fail(label("K_kk", k) + " oracle");
    }
  });

  criterion(3, "phi1 family, n = 5..10, every legal m, has h = n - 2", 120.0, [](Outcome& o) {
    for (std::size_t n = 5; n <= 10; ++n)
      for (std::size_t m = 1; m < n / 2; ++m) {
        Graph g = gen_phi1(n, m);
        HForceResult r = classify(g);
        if (r.h != n - 2 || r.phi_class != PhiClass::Phi1) o.fail(label("phi1", n, m));
        if (n <= 9 && !oracle_confirms(g, r, HForceOracle(g))) o.fail(label("phi1", n, m) + " oracle");
      }
  });

  criterion(4, "G21 family, m = 2,3,4, has h = m + 1 = n/2", 0, [](Outcome& o) {
    for (std::size_t m = 2; m <= 4; ++m) {
      Graph g = gen_g21(m);
      HForceResult r = classify(g);
      if (r.h != m + 1 || 2 * r.h != g.order() || r.phi_class != PhiClass::Phi2) o.fail(label("g21", m));
      if (m <= 3 && !oracle_confirms(g, r, HForceOracle(g))) o.fail(label("g21", m) + " oracle");
    }
  });

  // Criteria 5 and 11 share their instances.
  struct Instance {
    Graph g;
    HForceResult r;
  };
  std::vector<Instance> instances;
  std::size_t prop11_checked = 0;

  criterion(5, "200 random OTGs (n = 5..10): trichotomy and oracle agreement", 600.0, [&](Outcome& o) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const std::size_t n = 5 + seed % 6;
      Graph g = gen_random_otg(n, seed);
      HForceResult r = classify(g);
      const std::string tag = label("seed", seed) + " n=" + std::to_string(n);
      if (!(r.h == n - 2 || r.h == n || (n % 2 == 0 && 2 * r.h == n))) o.fail(tag + " trichotomy");
      if (r.hforce_set.size() != r.h) o.fail(tag + " set size");
      if (!oracle_confirms(g, r, HForceOracle(g))) o.fail(tag + " oracle");
      if (brute::min_h(g) != r.h || !brute::forces(g, to_mask(r.hforce_set))) o.fail(tag + " subset DP");
      instances.push_back({std::move(g), std::move(r)});
    }
  });

  criterion(6, "closure is independent of processing order (50 graphs x 50 orders)", 0, [](Outcome& o) {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 50; ++i) {
      const std::size_t n = 5 + i % 36;
      const double p = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
      Graph g = brute::random_graph(n, p, rng);
      const std::size_t t = (i % 2 == 0) ? n : n + 1;
      const Graph reference = close(g, t).result;
      if (!(reference == brute::naive_closure(g, t))) o.fail(label("graph", i) + " naive");
      std::vector<std::uint64_t> priority(n * n);
      for (int k = 0; k < 50; ++k) {
        std::iota(priority.begin(), priority.end(), 0);
        std::shuffle(priority.begin(), priority.end(), rng);
        ClosureTrace trace = close(g, t, priority);
        if (!(trace.result == reference) || !verify_trace(g, trace)) o.fail(label("graph", i, k));
      }
    }
  });

  criterion(7, "joining a pair with degree sum >= n + 1 preserves min h (50 OTGs)", 0, [](Outcome& o) {
    std::size_t used = 0;
    for (std::uint64_t seed = 0; used < 50 && seed < 10000; ++seed) {
      const std::size_t n = 5 + seed % 5;
      Graph g = gen_random_otg(n, 7000 + seed);
      std::vector<Edge> pairs;
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          if (!g.adjacent(u, v) && g.degree(u) + g.degree(v) >= n + 1) pairs.push_back({u, v});
      if (pairs.empty()) continue;
      ++used;
      const std::size_t h = min_hforce(g).min_h;
      for (const Edge& e : pairs) {
        Graph plus = g;
        plus.add_edge(e.u, e.v);
        if (min_hforce(plus).min_h != h) o.fail(label("seed", seed) + " pair " + label("", e.u, e.v));
      }
    }
    if (used < 50) o.fail("only " + std::to_string(used) + " qualifying graphs");
  });

  criterion(8, "psi graphs (m = 2,3,4) are non-Hamiltonian with nonadjacent sums >= n - 1", 0,
            [](Outcome& o) {
              std::mt19937_64 rng(8);
              for (std::size_t m = 2; m <= 4; ++m) {
                std::vector<std::vector<Edge>> zs = {{}, {{0, 1}}, gen_complete(m).edges()};
                for (int i = 0; i < 5; ++i) zs.push_back(random_edges(m, 0.5, rng));
                for (const auto& z : zs) {
                  Graph g = gen_psi(m, z);
                  if (is_hamiltonian_bf(g)) o.fail(label("psi", m) + " Hamiltonian");
                  if (min_nonadjacent_sum(g) < g.order() - 1) o.fail(label("psi", m) + " degree sum");
                }
              }
            });

  criterion(9, "hamiltonian_cycle on 100 random OTGs up to n = 300", 60.0, [](Outcome& o) {
    for (std::size_t i = 0; i < 100; ++i) {
      const std::size_t n = 3 + i * 297 / 99;
      Graph g = gen_random_otg(n, 9000 + i);
      UnwindStats stats;
      Cycle c = hamiltonian_cycle(g, &stats);
      if (!is_hamiltonian_cycle(g, c)) o.fail(label("n", n) + " invalid cycle");
      if (stats.rotations > 0 && stats.min_common == 0) o.fail(label("n", n) + " empty S∩T");
    }
  });

  criterion(10, "classify runtime: log-log slope <= 3.3 over n in [50, 400]", 0, [](Outcome& o) {
    auto rows = bench(400, 5, 1);
    double slope = loglog_slope(rows, 50, 400);
    o.detail << "slope " << slope;
    if (!(slope <= 3.3)) o.fail("");
    auto start = Clock::now();
    Graph g = gen_random_otg(400, 10);
    classify(g);
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    o.detail << ", n=400 in " << secs << " s";
    if (secs >= 10.0) o.fail("");
  });

  criterion(11, "every non-Hamiltonian cycle misses part of the returned set", 0, [&](Outcome& o) {
    if (instances.size() != 200) o.fail("criterion 5 instances missing");
    for (const auto& [g, r] : instances) {
      HForceOracle oracle(g);
      const std::uint64_t x = to_mask(r.hforce_set);
      for (const Cycle& c : oracle.nonhamiltonian_cycles()) {
        ++prop11_checked;
        if ((x & ~to_mask(VertexSet(c.vertices().begin(), c.vertices().end()))) == 0) o.fail("cycle covers X");
      }
    }
    o.detail << prop11_checked << " cycles";
  });

  std::printf("%s: %d criterion(s) failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
