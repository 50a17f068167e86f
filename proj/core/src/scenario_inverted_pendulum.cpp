#include "iclcbf/scenarios.hpp"

namespace iclcbf {

// Linearized pendulum xdot = A x + B u with A = [[0,1],[1,0]], B = [0,1]^T.
// The failure set is everything outside [-0.1,0.15] x [-0.3,0.25]; the
// ground-truth barrier is a small invariant ellipse k - x^T P x inside it.
Scenario inverted_pendulum_scenario() {
  Scenario s;
  s.name = "inverted_pendulum";

  const Eigen::Matrix2d A = (Eigen::Matrix2d() << 0.0, 1.0, 1.0, 0.0).finished();
  const Eigen::Vector2d B(0.0, 1.0);
  const Eigen::Matrix2d P = (Eigen::Matrix2d() << 1.25, 0.25, 0.25, 0.25).finished();
  const double k = 0.01;
  const double x_lo = -0.1, x_hi = 0.15, v_lo = -0.3, v_hi = 0.25;

  s.system.name = s.name;
  s.system.state_dim = 2;
  s.system.control_dim = 1;
  s.system.control_lower = Eigen::VectorXd::Constant(1, -5.0);
  s.system.control_upper = Eigen::VectorXd::Constant(1, 5.0);
  s.system.drift = [A](const Eigen::VectorXd& x) -> Eigen::VectorXd { return A * x; };
  s.system.actuation = [B](const Eigen::VectorXd&) -> Eigen::MatrixXd { return B; };

  // pi_ref = -K x with K = [3, 3]; the goal is always the origin.
  s.reference = [](const Eigen::VectorXd& x, const Eigen::VectorXd&) -> Eigen::VectorXd {
    Eigen::VectorXd u(1);
    u(0) = -(3.0 * x(0) + 3.0 * x(1));
    return u;
  };

  s.failure = [=](const Eigen::VectorXd& x) {
    return x(0) < x_lo || x(0) > x_hi || x(1) < v_lo || x(1) > v_hi;
  };
  s.goal_reached = [](const Eigen::VectorXd& x, const Eigen::VectorXd&) {
    return x.norm() <= 0.1;
  };

  // The sampling rectangle [-0.103,0.148] x [-0.3,0.25] pokes slightly out of
  // the safe box on the left edge; those draws are failures and are rejected.
  s.sample_initial = [=](Rng& rng) {
    Eigen::VectorXd x0(2);
    do {
      x0(0) = rng.uniform(-0.103, 0.148);
      x0(1) = rng.uniform(-0.3, 0.25);
    } while (x0(0) < x_lo || x0(0) > x_hi || x0(1) < v_lo || x0(1) > v_hi);
    return std::make_pair(x0, Eigen::VectorXd(Eigen::Vector2d::Zero()));
  };

  s.dt = 0.1;
  s.max_steps = 300;
  s.delta = 0.3;

  s.control_grid.cells_per_dim = {2500};
  s.control_grid.lower = s.system.control_lower;
  s.control_grid.upper = s.system.control_upper;
  s.control_grid.sample_time = s.dt;

  AnalyticBarrier gt;
  gt.value = [P, k](const Eigen::VectorXd& x) { return k - x.dot(P * x); };
  gt.gradient = [P](const Eigen::VectorXd& x) -> Eigen::VectorXd { return -2.0 * (P * x); };
  s.gt_cbf = gt;

  s.expert.kind = ExpertSpec::Kind::gt_cbf_qp;
  s.expert.alpha = 1.0;
  s.lcbf_oracle = LcbfOracle::gt_sign;
  s.default_demo_count = 150;

  s.plot_dims = {0, 1};
  s.plot_lower = Eigen::Vector2d(-0.2, -0.4);
  s.plot_upper = Eigen::Vector2d(0.25, 0.35);
  s.plot_fixed = Eigen::VectorXd::Zero(2);
  return s;
}

}  // namespace iclcbf
