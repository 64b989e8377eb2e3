#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ksync/landscape.hpp"

namespace ksync {

/// Canonical circular sup-distance below which two equilibria are the same.
inline constexpr double kDedupRadius = 1e-4;

struct Equilibrium {
  PhaseConfig config;  // canonical: first angle 0, all wrapped
  ConfigClass classification = ConfigClass::NotEquilibrium;
  double residual = 0.0;  // final gradient norm
  int basin_hits = 0;     // starts that converged here
};

struct EquilibriumCatalog {
  std::string graph_id;
  std::vector<Equilibrium> equilibria;
  int starts = 0;
  uint64_t seed = 0;
  int failures = 0;  // starts whose local solve did not converge
};

/// Quotients out the global rotation: subtracts the first angle and wraps
/// every entry to (-pi, pi]. Idempotent and energy-preserving.
PhaseConfig canonicalize(const PhaseRef& theta);

/// Max over vertices of the geodesic distance between entries.
double circular_sup_distance(const PhaseRef& a, const PhaseRef& b);

/// Equally spaced phases 2*pi*(i)/n (the twisted-state control seed).
PhaseConfig splay_config(int n);

/// Damped Newton on the gradient with the gauge theta_1 = 0 (first Hessian
/// row/column dropped). Returns once the full gradient norm is below tol,
/// classifying the result. Throws NoConvergence after max_iter, or
/// SingularSystem when repeated gradient-descent fallbacks cannot leave a
/// numerically singular region.
Equilibrium refine_newton(const Graph& g, const PhaseRef& theta0, double tol,
                          int max_iter);

/// Local solves from `starts` random configs plus the synchronous and splay
/// seeds; converged roots are canonicalized and merged within kDedupRadius.
/// Per-start failures are counted, never raised.
EquilibriumCatalog multistart_search(const Graph& g, int starts, uint64_t seed,
                                     double tol, int max_iter = 100,
                                     const std::string& graph_id = "");

}  // namespace ksync
