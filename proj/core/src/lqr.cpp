#include "iclcbf/lqr.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace iclcbf {

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> zoh_discretize(const Eigen::MatrixXd& A,
                                                           const Eigen::MatrixXd& B, double dt) {
  const int n = static_cast<int>(A.rows());
  const int m = static_cast<int>(B.cols());
  Eigen::MatrixXd aug = Eigen::MatrixXd::Zero(n + m, n + m);
  aug.topLeftCorner(n, n) = A * dt;
  aug.topRightCorner(n, m) = B * dt;
  const Eigen::MatrixXd expm = aug.exp();
  return {expm.topLeftCorner(n, n), expm.topRightCorner(n, m)};
}

Eigen::MatrixXd solve_dare(const Eigen::MatrixXd& Ad, const Eigen::MatrixXd& Bd,
                           const Eigen::MatrixXd& Q, const Eigen::MatrixXd& R,
                           int max_iterations, double tolerance) {
  Eigen::MatrixXd P = Q;
  for (int it = 0; it < max_iterations; ++it) {
    const Eigen::MatrixXd BtP = Bd.transpose() * P;
    const Eigen::MatrixXd gain = (R + BtP * Bd).ldlt().solve(BtP * Ad);
    Eigen::MatrixXd next = Q + Ad.transpose() * P * (Ad - Bd * gain);
    next = 0.5 * (next + next.transpose());
    if (!next.allFinite()) throw LqrError("Riccati iteration diverged");
    const double diff = (next - P).cwiseAbs().maxCoeff();
    P = next;
    if (diff < tolerance * std::max(1.0, P.cwiseAbs().maxCoeff())) return P;
  }
  throw LqrError("Riccati iteration did not converge; pair may be non-stabilizable");
}

Eigen::MatrixXd lqr_gain(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                         const Eigen::MatrixXd& Q, const Eigen::MatrixXd& R, double dt) {
  const auto [Ad, Bd] = zoh_discretize(A, B, dt);
  const Eigen::MatrixXd P = solve_dare(Ad, Bd, Q, R);
  const Eigen::MatrixXd BtP = Bd.transpose() * P;
  return (R + BtP * Bd).ldlt().solve(BtP * Ad);
}

}  // namespace iclcbf
