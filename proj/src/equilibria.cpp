#include "ksync/equilibria.hpp"

#include <Eigen/LU>
#include <cmath>
#include <numbers>

#include "ksync/dynamics.hpp"
#include "ksync/rng.hpp"

namespace ksync {

PhaseConfig canonicalize(const PhaseRef& theta) {
  if (theta.size() < 1) {
    throw DomainError(ErrorCode::InvalidParameters, "empty configuration");
  }
  PhaseConfig out(theta.size());
  double base = theta[0];
  for (Eigen::Index i = 0; i < theta.size(); ++i) {
    out[i] = wrap_angle(theta[i] - base);
  }
  out[0] = 0.0;
  return out;
}

double circular_sup_distance(const PhaseRef& a, const PhaseRef& b) {
  if (a.size() != b.size()) {
    throw DomainError(ErrorCode::DimensionMismatch,
                      "configurations differ in size");
  }
  double best = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    best = std::max(best, circular_distance(a[i], b[i]));
  }
  return best;
}

PhaseConfig splay_config(int n) {
  if (n < 2) {
    throw DomainError(ErrorCode::InvalidParameters,
                      "splay state needs at least two vertices");
  }
  PhaseConfig theta(n);
  for (int i = 0; i < n; ++i) {
    theta[i] = 2.0 * std::numbers::pi * i / n;
  }
  return theta;
}

namespace {

// Energy-damped line move: on a descent direction, halve while the energy
// fails to drop by the first-order allowance, at most 30 times, falling back
// to the full step if the cap is hit. On an ascent direction the iteration is
// walking into a saddle, where the energy must be allowed to rise, so the
// full step is taken outright.
void apply_damped_step(const Graph& g, PhaseConfig& theta,
                       const Eigen::VectorXd& grad,
                       const Eigen::VectorXd& delta) {
  double slope = grad.dot(delta);
  double e0 = energy(g, theta);
  // Once the predicted change drops below the floating-point resolution of
  // the energy, the search would read rounding noise; the quadratic endgame
  // takes plain Newton steps instead.
  if (slope < 0.0 && -slope > 1e-12 * (1.0 + std::abs(e0))) {
    double alpha = 1.0;
    for (int halving = 0; halving <= 30; ++halving) {
      if (energy(g, theta + alpha * delta) <= e0 + 1e-4 * alpha * slope) {
        theta += alpha * delta;
        return;
      }
      alpha *= 0.5;
    }
  }
  theta += delta;
}

}  // namespace

Equilibrium refine_newton(const Graph& g, const PhaseRef& theta0, double tol,
                          int max_iter) {
  if (!(tol > 0.0)) {
    throw DomainError(ErrorCode::InvalidParameters, "tolerance must be positive");
  }
  const int n = g.vertex_count();
  PhaseConfig theta = canonicalize(theta0);

  const int max_fallbacks = 20;
  int fallbacks = 0;

  for (int iter = 0; iter < max_iter; ++iter) {
    Eigen::VectorXd grad = gradient(g, theta);
    double gn = grad.norm();
    if (gn < tol) {
      Equilibrium eq;
      eq.config = canonicalize(theta);
      eq.residual = gn;
      eq.classification = classify(g, eq.config).classification;
      eq.basin_hits = 1;
      return eq;
    }

    bool fall_back = n < 2;
    Eigen::VectorXd delta = Eigen::VectorXd::Zero(n);
    if (!fall_back) {
      // Gauge theta_1 = 0: the rotation kernel is removed by dropping the
      // first row and column of the Hessian.
      Eigen::MatrixXd reduced =
          hessian(g, theta).bottomRightCorner(n - 1, n - 1);
      Eigen::FullPivLU<Eigen::MatrixXd> lu(reduced);
      if (lu.isInvertible()) {
        Eigen::VectorXd step = lu.solve(-grad.tail(n - 1));
        if (step.allFinite() && step.lpNorm<Eigen::Infinity>() <= 1e3) {
          delta.tail(n - 1) = step;
        } else {
          fall_back = true;
        }
      } else {
        fall_back = true;
      }
    }

    if (fall_back) {
      if (++fallbacks > max_fallbacks) {
        throw DomainError(ErrorCode::SingularSystem,
                          "reduced Hessian numerically singular");
      }
      delta = -grad / std::max(1.0, static_cast<double>(g.max_degree()));
      apply_damped_step(g, theta, grad, delta);
      theta = canonicalize(theta);
      continue;
    }

    apply_damped_step(g, theta, grad, delta);
  }
  throw DomainError(ErrorCode::NoConvergence,
                    "no equilibrium within " + std::to_string(max_iter) +
                        " iterations");
}

EquilibriumCatalog multistart_search(const Graph& g, int starts, uint64_t seed,
                                     double tol, int max_iter,
                                     const std::string& graph_id) {
  if (starts < 1) {
    throw DomainError(ErrorCode::InvalidParameters, "need at least one start");
  }
  const int n = g.vertex_count();

  EquilibriumCatalog catalog;
  catalog.graph_id = graph_id;
  catalog.starts = starts;
  catalog.seed = seed;

  auto absorb = [&catalog](const Equilibrium& eq) {
    for (Equilibrium& known : catalog.equilibria) {
      if (circular_sup_distance(known.config, eq.config) < kDedupRadius) {
        ++known.basin_hits;
        return;
      }
    }
    catalog.equilibria.push_back(eq);
  };

  std::vector<PhaseConfig> seeds;
  seeds.push_back(PhaseConfig::Zero(n));
  if (n >= 2) seeds.push_back(splay_config(n));
  for (int s = 0; s < starts; ++s) {
    seeds.push_back(random_config(n, derive_seed(seed, static_cast<uint64_t>(s))));
  }

  for (const PhaseConfig& start : seeds) {
    try {
      absorb(refine_newton(g, start, tol, max_iter));
    } catch (const DomainError& e) {
      if (e.code() == ErrorCode::NoConvergence ||
          e.code() == ErrorCode::SingularSystem) {
        ++catalog.failures;
      } else {
        throw;
      }
    }
  }
  return catalog;
}

}  // namespace ksync
