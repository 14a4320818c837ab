#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "fixtures.hpp"
#include "oreforce/errors.hpp"
#include "oreforce/generators.hpp"
#include "oreforce/ore.hpp"

using namespace oreforce;
using fixtures::complete;
using fixtures::cycle_graph;

TEST_CASE("check_otg") {
  CHECK(check_otg(fixtures::k33()).is_otg);
  CHECK_FALSE(check_otg(fixtures::k33()).witness);

  Graph c5 = cycle_graph(5);
  auto r = check_otg(c5);
  CHECK_FALSE(r.is_otg);
  REQUIRE(r.witness);
  CHECK_FALSE(c5.adjacent(r.witness->u, r.witness->v));
  CHECK(c5.degree(r.witness->u) + c5.degree(r.witness->v) < 5);
  CHECK(*r.witness == Edge(0, 2));

  CHECK_FALSE(check_otg(fixtures::petersen()).is_otg);
  CHECK_THROWS_WITH_AS(check_otg(complete(2)), "too few vertices", DomainError);
}

TEST_CASE("check_dirac") {
  CHECK(check_dirac(fixtures::k33()));
  CHECK_FALSE(check_dirac(cycle_graph(5)));
  CHECK(check_dirac(gen_g21(2)));
  CHECK_THROWS_AS(check_dirac(complete(1)), DomainError);

  // K2 v (K1 + K3): the K1 vertex only sees the two apexes, so its degree is
  // 2 < n/2 = 3. The graph is an OTG (2 + 4 = 6 across the blocks) but does
  // not meet Dirac's bound.
  Graph g = gen_phi1(6, 1);
  CHECK(g.degree(0) == 2);
  CHECK(check_otg(g).is_otg);
  CHECK_FALSE(check_dirac(g));
}

TEST_CASE("Dirac graphs are OTGs") {
  std::mt19937_64 rng(9);
  int dirac = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Graph g = brute::random_graph(3 + rng() % 12, 0.5 + 0.4 * (trial % 5) / 4.0, rng);
    CHECK(check_otg(g).is_otg == brute::is_ore(g));
    if (check_dirac(g)) {
      ++dirac;
      CHECK(check_otg(g).is_otg);
    }
  }
  CHECK(dirac > 50);
}

TEST_CASE("hamiltonian_cycle on fixed graphs") {
  Cycle k4 = hamiltonian_cycle(complete(4));
  CHECK(is_hamiltonian_cycle(complete(4), k4));
  CHECK(k4.vertices() == std::vector<Vertex>{0, 1, 2, 3});

  Graph k33 = fixtures::k33();
  UnwindStats stats;
  Cycle c = hamiltonian_cycle(k33, &stats);
  REQUIRE(is_hamiltonian_cycle(k33, c));
  for (std::size_t i = 0; i < 6; ++i) CHECK((c.vertices()[i] < 3) != (c.vertices()[(i + 1) % 6] < 3));
  CHECK(stats.steps == 6);
  CHECK(stats.rotations > 0);
  CHECK(stats.min_common >= 1);
  CHECK(c.is_canonical());

  CHECK(hamiltonian_cycle(complete(3)).vertices() == std::vector<Vertex>{0, 1, 2});
  CHECK_THROWS_WITH_AS(hamiltonian_cycle(cycle_graph(5)), "not an OTG", DomainError);
  CHECK_THROWS_AS(hamiltonian_cycle(fixtures::petersen()), DomainError);
}

TEST_CASE("hamiltonian_cycle on families") {
  for (std::size_t n = 5; n <= 12; ++n)
    for (std::size_t m = 1; 2 * m < n; ++m) {
      Graph g = gen_phi1(n, m);
      CHECK(is_hamiltonian_cycle(g, hamiltonian_cycle(g)));
    }
  for (std::size_t m = 2; m <= 6; ++m) {
    Graph g = gen_g21(m);
    CHECK(is_hamiltonian_cycle(g, hamiltonian_cycle(g)));
    Graph kb = gen_complete_bipartite(m);
    CHECK(is_hamiltonian_cycle(kb, hamiltonian_cycle(kb)));
  }
}

TEST_CASE("hamiltonian_cycle on random OTGs") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::size_t n = 3 + (seed * 297) / 99;
    Graph g = gen_random_otg(n, seed);
    UnwindStats stats;
    Cycle c = hamiltonian_cycle(g, &stats);
    CHECK(is_hamiltonian_cycle(g, c));
    if (stats.rotations > 0) CHECK(stats.min_common >= 1);
  }
}
