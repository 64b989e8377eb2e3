#pragma once

#include <Eigen/Dense>
#include <utility>

namespace ksync {

// Cyclic-by-row Jacobi rotations for small dense symmetric matrices.
// Sweeps run until the off-diagonal Frobenius norm falls below
// 1e-14 * max(1, ||A||_F), which bounds every eigenvalue error by the same
// amount; comfortably inside 1e-9 absolute accuracy for n <= 512.

/// Smallest eigenvalue. Throws NotSymmetric if the input is not symmetric
/// within a small relative tolerance.
double min_symmetric_eigenvalue(const Eigen::Ref<const Eigen::MatrixXd>& m);

/// Smallest eigenvalue together with its (unit) eigenvector.
std::pair<double, Eigen::VectorXd> min_symmetric_eigenpair(
    const Eigen::Ref<const Eigen::MatrixXd>& m);

}  // namespace ksync
