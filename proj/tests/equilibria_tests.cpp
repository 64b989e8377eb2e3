#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "ksync/dynamics.hpp"
#include "ksync/equilibria.hpp"
#include "ksync/rng.hpp"

using namespace ksync;
using namespace ksync::testing;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("canonical form") {
  PhaseConfig constant = PhaseConfig::Constant(3, 2.71);
  CHECK(canonicalize(constant).cwiseAbs().maxCoeff() == 0.0);

  PhaseConfig two(2);
  two << kPi / 2.0, kPi;
  PhaseConfig canonical = canonicalize(two);
  CHECK(canonical[0] == 0.0);
  CHECK(canonical[1] == doctest::Approx(kPi / 2.0).epsilon(1e-14));

  PhaseConfig random = random_config(6, 3);
  CHECK((canonicalize(canonicalize(random)) - canonicalize(random)).norm() == 0.0);
  CHECK(energy(cycle_graph(6), canonicalize(random)) ==
        doctest::Approx(energy(cycle_graph(6), random)).epsilon(1e-12));
}

TEST_CASE("splay seeds") {
  PhaseConfig two = splay_config(2);
  CHECK(two[0] == 0.0);
  CHECK(two[1] == doctest::Approx(kPi).epsilon(1e-14));

  PhaseConfig four = splay_config(4);
  CHECK(four[1] == doctest::Approx(kPi / 2.0).epsilon(1e-14));
  CHECK(four[3] == doctest::Approx(3.0 * kPi / 2.0).epsilon(1e-14));

  PhaseConfig five = splay_config(5);
  double re = 0.0, im = 0.0;
  for (int i = 0; i < 5; ++i) {
    re += std::cos(five[i]);
    im += std::sin(five[i]);
  }
  CHECK(std::hypot(re, im) <= 1e-14);

  CHECK_THROWS_AS(splay_config(1), DomainError);
}

TEST_CASE("newton refinement") {
  Graph triangle = complete_graph(3);

  Equilibrium sync = refine_newton(triangle, PhaseConfig::Constant(3, 0.5), 1e-10, 50);
  CHECK(sync.classification == ConfigClass::SynchronousMinimum);
  CHECK(sync.residual < 1e-10);
  CHECK(sync.config.cwiseAbs().maxCoeff() == 0.0);

  PhaseConfig near_splay(3);
  near_splay << 0.0, 2.0 * kPi / 3.0 + 1e-3, 4.0 * kPi / 3.0 - 1e-3;
  Equilibrium saddle = refine_newton(triangle, near_splay, 1e-10, 50);
  CHECK(saddle.classification == ConfigClass::Saddle);
  CHECK(saddle.residual < 1e-10);
  Eigen::VectorXd mu = mu_all(triangle, saddle.config);
  for (int v = 0; v < 3; ++v) CHECK(mu[v] == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(circular_sup_distance(saddle.config, canonicalize(splay_config(3))) < 1e-6);

  PhaseConfig noisy = splay_config(5);
  for (int i = 0; i < 5; ++i) noisy[i] += 1e-4 * (uniform01(50, i) - 0.5);
  Equilibrium twisted = refine_newton(cycle_graph(5), noisy, 1e-10, 50);
  CHECK(twisted.classification == ConfigClass::NonSyncSOSP);
  CHECK(circular_sup_distance(twisted.config, canonicalize(splay_config(5))) < 1e-6);

  CHECK_THROWS_AS(refine_newton(triangle, near_splay, -1.0, 50), DomainError);
}

TEST_CASE("multistart catalogs the two-oscillator landscape exactly") {
  Graph pair = complete_graph(2);
  EquilibriumCatalog catalog = multistart_search(pair, 50, 21, 1e-11);
  REQUIRE(catalog.equilibria.size() == 2);

  int sync_entries = 0, saddle_entries = 0;
  for (const Equilibrium& eq : catalog.equilibria) {
    CHECK(eq.config[0] == 0.0);
    CHECK(eq.residual < 1e-11);
    if (eq.classification == ConfigClass::SynchronousMinimum) {
      ++sync_entries;
      CHECK(std::abs(eq.config[1]) < 1e-8);
    }
    if (eq.classification == ConfigClass::Saddle) {
      ++saddle_entries;
      CHECK(circular_distance(eq.config[1], kPi) < 1e-8);
    }
  }
  CHECK(sync_entries == 1);
  CHECK(saddle_entries == 1);
  CHECK(catalog.equilibria[0].basin_hits + catalog.equilibria[1].basin_hits +
            catalog.failures ==
        52);  // 50 random starts + the synchronous and splay seeds
}

TEST_CASE("catalog invariants hold on a nontrivial graph") {
  Graph g = build_threshold(ThresholdCode::parse("00101"));
  EquilibriumCatalog catalog = multistart_search(g, 120, 31, 1e-11);
  REQUIRE(!catalog.equilibria.empty());
  for (std::size_t i = 0; i < catalog.equilibria.size(); ++i) {
    const Equilibrium& eq = catalog.equilibria[i];
    CHECK(eq.config[0] == 0.0);
    CHECK(gradient(g, eq.config).norm() < 1e-11);
    Equilibrium again = refine_newton(g, eq.config, 1e-11, 50);
    CHECK(circular_sup_distance(again.config, eq.config) < kDedupRadius);
    CHECK(again.classification == eq.classification);
    for (std::size_t j = i + 1; j < catalog.equilibria.size(); ++j) {
      CHECK(circular_sup_distance(eq.config, catalog.equilibria[j].config) >=
            kDedupRadius);
    }
  }
}

TEST_CASE("non-threshold controls admit non-synchronous second-order points") {
  EquilibriumCatalog catalog = multistart_search(cycle_graph(5), 500, 77, 1e-10);
  int non_sync = 0;
  for (const Equilibrium& eq : catalog.equilibria) {
    if (eq.classification == ConfigClass::NonSyncSOSP) ++non_sync;
  }
  CHECK(non_sync >= 1);
}

TEST_CASE("windmills and small threshold graphs stay clean") {
  auto count_non_sync = [](const EquilibriumCatalog& catalog) {
    int c = 0;
    for (const Equilibrium& eq : catalog.equilibria) {
      if (eq.classification == ConfigClass::NonSyncSOSP) ++c;
    }
    return c;
  };

  CHECK(count_non_sync(multistart_search(windmill(3, 2), 300, 5, 1e-10)) == 0);

  // Exhaustive connected codes up to five vertices; the full sweep to seven
  // lives in the acceptance suite.
  for (int length = 1; length <= 4; ++length) {
    for (unsigned mask = 0; mask < (1u << (length - 1)); ++mask) {
      std::vector<bool> bits(static_cast<std::size_t>(length));
      for (int i = 0; i + 1 < length; ++i) bits[static_cast<std::size_t>(i)] = mask >> i & 1u;
      bits.back() = true;
      Graph g = build_threshold(ThresholdCode(bits));
      CHECK(count_non_sync(multistart_search(g, 200, 13, 1e-10)) == 0);
    }
  }
}
