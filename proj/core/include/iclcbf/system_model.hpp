#pragma once

#include <Eigen/Dense>
#include <functional>
#include <stdexcept>
#include <string>

namespace iclcbf {

// Control-affine system xdot = f(x) + g(x) u with a box-constrained control.
// Immutable after construction; safe to share across rollout threads.
struct SystemModel {
  std::string name;
  int state_dim = 0;
  int control_dim = 0;
  Eigen::VectorXd control_lower;
  Eigen::VectorXd control_upper;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> drift;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> actuation;

  Eigen::VectorXd derivative(const Eigen::VectorXd& x, const Eigen::VectorXd& u) const {
    return drift(x) + actuation(x) * u;
  }

  Eigen::VectorXd clamp_control(const Eigen::VectorXd& u) const {
    return u.cwiseMax(control_lower).cwiseMin(control_upper);
  }

  bool control_in_box(const Eigen::VectorXd& u, double tol = 0.0) const {
    return (u.array() >= control_lower.array() - tol).all() &&
           (u.array() <= control_upper.array() + tol).all();
  }
};

struct IntegrationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace iclcbf
