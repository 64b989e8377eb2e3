#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "ksync/graph.hpp"

namespace ksync {

/// One angle per vertex, radians. Canonical form wraps to (-pi, pi].
using PhaseConfig = Eigen::VectorXd;
using Vec2 = Eigen::Vector2d;
using PhaseRef = Eigen::Ref<const PhaseConfig>;

struct Tolerances {
  double grad = 1e-9;  // below this the gradient counts as zero
  double psd = 1e-8;   // eigenvalues admitted down to -psd as numerically zero
  double sync = 1e-6;  // circular diameter below which a config is synchronous
};

enum class ConfigClass { NotEquilibrium, SynchronousMinimum, NonSyncSOSP, Saddle };
const char* to_string(ConfigClass c);

struct LandscapeReport {
  double energy = 0.0;
  double gradient_norm = 0.0;
  Eigen::VectorXd mu;
  double min_hessian_eigenvalue = 0.0;
  ConfigClass classification = ConfigClass::NotEquilibrium;
  std::optional<Eigen::VectorXd> witness;  // descent direction when Saddle
};

/// Wraps an angle to (-pi, pi].
double wrap_angle(double a);

/// Geodesic distance on the circle, in [0, pi].
double circular_distance(double a, double b);

/// Max pairwise geodesic distance.
double circular_diameter(const PhaseRef& theta);

bool is_synchronous(const PhaseRef& theta, double tol);

/// E(theta) = sum over edges of (1 - cos(theta_u - theta_v)).
double energy(const Graph& g, const PhaseRef& theta);

/// Gradient of the energy: component i is -sum_{j~i} sin(theta_j - theta_i).
Eigen::VectorXd gradient(const Graph& g, const PhaseRef& theta);

/// Hessian of the energy: H_ii = sum_{j~i} cos(theta_i - theta_j),
/// H_ij = -cos(theta_i - theta_j) on edges. Rows sum to zero.
Eigen::MatrixXd hessian(const Graph& g, const PhaseRef& theta);

/// mu_i = <sum of neighbor phasors, own phasor> = sum_{j~i} cos(theta_j - theta_i).
Eigen::VectorXd mu_all(const Graph& g, const PhaseRef& theta);

/// R_i = |sum of neighbor phasors| / deg(i), in [0,1]. Throws IsolatedVertex.
double local_order(const Graph& g, const PhaseRef& theta, int vertex);

/// x^T H x for the 0/1 indicator x of the block; a negative value certifies
/// the configuration is not second-order stationary.
double block_descent_value(const Graph& g, const PhaseRef& theta,
                           const std::vector<int>& block);

LandscapeReport classify(const Graph& g, const PhaseRef& theta,
                         const Tolerances& tol = Tolerances{});

/// Outcome of the geometric-twin compatibility test for two unit phasors and
/// a shared neighbor sum q: v_b + q = mu_a v_a and v_a + q = mu_b v_b.
enum class TwinCaseId { Equal, Antipodal, FreeAtMinusOne, NotGeometricTwins };
const char* to_string(TwinCaseId c);

struct TwinCase {
  TwinCaseId case_id = TwinCaseId::NotGeometricTwins;
  double mu_a = 0.0;
  double mu_b = 0.0;
};

/// Solves the pair of relations by projection and verifies residuals within
/// tol. Throws NotUnitVectors if either input is off the unit circle.
TwinCase twin_case(const Vec2& v_a, const Vec2& v_b, const Vec2& q, double tol);

}  // namespace ksync
