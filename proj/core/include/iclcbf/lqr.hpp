#pragma once

#include <Eigen/Dense>
#include <stdexcept>

namespace iclcbf {

struct LqrError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Zero-order-hold discretization of xdot = A x + B u at step dt,
// via the augmented matrix exponential.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> zoh_discretize(const Eigen::MatrixXd& A,
                                                           const Eigen::MatrixXd& B, double dt);

// Infinite-horizon discrete Riccati solution by fixed-point iteration.
// Throws LqrError when the iteration fails to converge (non-stabilizable).
Eigen::MatrixXd solve_dare(const Eigen::MatrixXd& Ad, const Eigen::MatrixXd& Bd,
                           const Eigen::MatrixXd& Q, const Eigen::MatrixXd& R,
                           int max_iterations = 100000, double tolerance = 1e-12);

// Discrete LQR gain for the ZOH discretization of (A, B) at dt.
Eigen::MatrixXd lqr_gain(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                         const Eigen::MatrixXd& Q, const Eigen::MatrixXd& R, double dt);

}  // namespace iclcbf
