#include "ksync/jacobi.hpp"

#include <cmath>

#include "ksync/errors.hpp"

namespace ksync {

namespace {

double off_diagonal_norm(const Eigen::MatrixXd& a) {
  double s = 0.0;
  const Eigen::Index n = a.rows();
  for (Eigen::Index p = 0; p < n; ++p)
    for (Eigen::Index q = p + 1; q < n; ++q) s += a(p, q) * a(p, q);
  return std::sqrt(2.0 * s);
}

void require_symmetric(const Eigen::Ref<const Eigen::MatrixXd>& m) {
  if (m.rows() != m.cols()) {
    throw DomainError(ErrorCode::NotSymmetric, "matrix is not square");
  }
  double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale) {
    throw DomainError(ErrorCode::NotSymmetric, "matrix is not symmetric");
  }
}

// Cyclic-by-row sweeps; eigenvectors accumulated only when requested.
void jacobi_diagonalize(Eigen::MatrixXd& a, Eigen::MatrixXd* vectors) {
  const Eigen::Index n = a.rows();
  if (vectors) vectors->setIdentity(n, n);
  if (n < 2) return;

  const double stop = 1e-14 * std::max(1.0, a.norm());
  const int max_sweeps = 64;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) <= stop) break;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        double apq = a(p, q);
        if (std::abs(apq) == 0.0) continue;
        double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t = std::copysign(1.0, tau) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;

        double app = a(p, p), aqq = a(q, q);
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (Eigen::Index r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          double arp = a(r, p), arq = a(r, q);
          a(r, p) = a(p, r) = c * arp - s * arq;
          a(r, q) = a(q, r) = s * arp + c * arq;
        }
        if (vectors) {
          for (Eigen::Index r = 0; r < n; ++r) {
            double vrp = (*vectors)(r, p), vrq = (*vectors)(r, q);
            (*vectors)(r, p) = c * vrp - s * vrq;
            (*vectors)(r, q) = s * vrp + c * vrq;
          }
        }
      }
    }
  }
}

}  // namespace

double min_symmetric_eigenvalue(const Eigen::Ref<const Eigen::MatrixXd>& m) {
  require_symmetric(m);
  if (m.rows() == 0) return 0.0;
  Eigen::MatrixXd a = 0.5 * (m + m.transpose());
  jacobi_diagonalize(a, nullptr);
  return a.diagonal().minCoeff();
}

std::pair<double, Eigen::VectorXd> min_symmetric_eigenpair(
    const Eigen::Ref<const Eigen::MatrixXd>& m) {
  require_symmetric(m);
  if (m.rows() == 0) return {0.0, Eigen::VectorXd()};
  Eigen::MatrixXd a = 0.5 * (m + m.transpose());
  Eigen::MatrixXd vectors;
  jacobi_diagonalize(a, &vectors);
  Eigen::Index which = 0;
  a.diagonal().minCoeff(&which);
  return {a(which, which), vectors.col(which)};
}

}  // namespace ksync
