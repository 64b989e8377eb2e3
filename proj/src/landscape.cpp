#include "ksync/landscape.hpp"

#include <cmath>
#include <numbers>

#include "ksync/jacobi.hpp"

namespace ksync {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_dimension(const Graph& g, const PhaseRef& theta) {
  if (theta.size() != g.vertex_count()) {
    throw DomainError(ErrorCode::DimensionMismatch,
                      "config has " + std::to_string(theta.size()) +
                          " angles for " + std::to_string(g.vertex_count()) +
                          " vertices");
  }
}

}  // namespace

const char* to_string(ConfigClass c) {
  switch (c) {
    case ConfigClass::NotEquilibrium: return "NotEquilibrium";
    case ConfigClass::SynchronousMinimum: return "SynchronousMinimum";
    case ConfigClass::NonSyncSOSP: return "NonSyncSOSP";
    case ConfigClass::Saddle: return "Saddle";
  }
  return "?";
}

const char* to_string(TwinCaseId c) {
  switch (c) {
    case TwinCaseId::Equal: return "Equal";
    case TwinCaseId::Antipodal: return "Antipodal";
    case TwinCaseId::FreeAtMinusOne: return "FreeAtMinusOne";
    case TwinCaseId::NotGeometricTwins: return "NotGeometricTwins";
  }
  return "?";
}

double wrap_angle(double a) {
  double w = std::remainder(a, kTwoPi);  // in [-pi, pi]
  if (w <= -kPi) w = kPi;
  return w;
}

double circular_distance(double a, double b) {
  return std::abs(wrap_angle(a - b));
}

double circular_diameter(const PhaseRef& theta) {
  double best = 0.0;
  for (Eigen::Index i = 0; i < theta.size(); ++i)
    for (Eigen::Index j = i + 1; j < theta.size(); ++j)
      best = std::max(best, circular_distance(theta[i], theta[j]));
  return best;
}

bool is_synchronous(const PhaseRef& theta, double tol) {
  return circular_diameter(theta) < tol;
}

double energy(const Graph& g, const PhaseRef& theta) {
  require_dimension(g, theta);
  double e = 0.0;
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v : g.neighbors(u)) {
      if (v > u) e += 1.0 - std::cos(theta[u] - theta[v]);
    }
  }
  return e;
}

Eigen::VectorXd gradient(const Graph& g, const PhaseRef& theta) {
  require_dimension(g, theta);
  Eigen::VectorXd grad = Eigen::VectorXd::Zero(theta.size());
  for (int u = 0; u < g.vertex_count(); ++u) {
    double s = 0.0;
    for (int v : g.neighbors(u)) s -= std::sin(theta[v] - theta[u]);
    grad[u] = s;
  }
  return grad;
}

Eigen::MatrixXd hessian(const Graph& g, const PhaseRef& theta) {
  require_dimension(g, theta);
  const int n = g.vertex_count();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (int u = 0; u < n; ++u) {
    double diag = 0.0;
    for (int v : g.neighbors(u)) {
      double c = std::cos(theta[u] - theta[v]);
      diag += c;
      h(u, v) = -c;
    }
    h(u, u) = diag;
  }
  return h;
}

Eigen::VectorXd mu_all(const Graph& g, const PhaseRef& theta) {
  require_dimension(g, theta);
  Eigen::VectorXd mu = Eigen::VectorXd::Zero(theta.size());
  for (int u = 0; u < g.vertex_count(); ++u) {
    double s = 0.0;
    for (int v : g.neighbors(u)) s += std::cos(theta[v] - theta[u]);
    mu[u] = s;
  }
  return mu;
}

double local_order(const Graph& g, const PhaseRef& theta, int vertex) {
  require_dimension(g, theta);
  if (g.degree(vertex) == 0) {
    throw DomainError(ErrorCode::IsolatedVertex,
                      "local order undefined for isolated vertex " +
                          std::to_string(vertex + 1));
  }
  double re = 0.0, im = 0.0;
  for (int v : g.neighbors(vertex)) {
    re += std::cos(theta[v]);
    im += std::sin(theta[v]);
  }
  return std::hypot(re, im) / g.degree(vertex);
}

double block_descent_value(const Graph& g, const PhaseRef& theta,
                           const std::vector<int>& block) {
  require_dimension(g, theta);
  for (int v : block) {
    if (v < 0 || v >= g.vertex_count()) {
      throw DomainError(ErrorCode::DimensionMismatch, "block vertex out of range");
    }
  }
  // x^T H x for the indicator x of the block collapses to the coupling
  // between the block and its outside neighbors.
  std::vector<char> in_block(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : block) in_block[v] = 1;
  double value = 0.0;
  for (int u : block) {
    for (int v : g.neighbors(u)) {
      if (!in_block[v]) value += std::cos(theta[u] - theta[v]);
    }
  }
  return value;
}

LandscapeReport classify(const Graph& g, const PhaseRef& theta,
                         const Tolerances& tol) {
  require_dimension(g, theta);
  LandscapeReport report;
  report.energy = energy(g, theta);
  report.mu = mu_all(g, theta);
  Eigen::VectorXd grad = gradient(g, theta);
  report.gradient_norm = grad.norm();

  Eigen::MatrixXd h = hessian(g, theta);
  auto [min_eig, eigvec] = min_symmetric_eigenpair(h);
  report.min_hessian_eigenvalue = min_eig;

  if (report.gradient_norm > tol.grad) {
    report.classification = ConfigClass::NotEquilibrium;
    return report;
  }

  // A negative mu already certifies a descent direction along a single
  // coordinate, so it is checked before trusting the eigen decomposition.
  for (Eigen::Index i = 0; i < report.mu.size(); ++i) {
    if (report.mu[i] < -tol.psd) {
      report.classification = ConfigClass::Saddle;
      Eigen::VectorXd dir = Eigen::VectorXd::Zero(theta.size());
      dir[i] = 1.0;
      report.witness = dir;
      return report;
    }
  }

  if (min_eig < -tol.psd) {
    report.classification = ConfigClass::Saddle;
    report.witness = eigvec;
    return report;
  }

  report.classification = is_synchronous(theta, tol.sync)
                              ? ConfigClass::SynchronousMinimum
                              : ConfigClass::NonSyncSOSP;
  return report;
}

TwinCase twin_case(const Vec2& v_a, const Vec2& v_b, const Vec2& q, double tol) {
  if (std::abs(v_a.norm() - 1.0) > tol || std::abs(v_b.norm() - 1.0) > tol) {
    throw DomainError(ErrorCode::NotUnitVectors,
                      "phasors must lie on the unit circle");
  }
  TwinCase result;
  result.mu_a = (v_b + q).dot(v_a);
  result.mu_b = (v_a + q).dot(v_b);

  double residual = std::max((v_b + q - result.mu_a * v_a).norm(),
                             (v_a + q - result.mu_b * v_b).norm());
  if (residual > tol) {
    result.case_id = TwinCaseId::NotGeometricTwins;
    return result;
  }

  // The (-1,-1) corner imposes no constraint on the phasors and wins ties.
  if (std::abs(result.mu_a + 1.0) <= tol && std::abs(result.mu_b + 1.0) <= tol) {
    result.case_id = TwinCaseId::FreeAtMinusOne;
  } else if ((v_a - v_b).norm() <= tol) {
    result.case_id = TwinCaseId::Equal;
  } else if ((v_a + v_b).norm() <= tol) {
    result.case_id = TwinCaseId::Antipodal;
  } else {
    result.case_id = TwinCaseId::NotGeometricTwins;
  }
  return result;
}

}  // namespace ksync
