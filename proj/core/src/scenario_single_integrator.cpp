#include "iclcbf/scenarios.hpp"

namespace iclcbf {

// 2D robot, xdot = u, driven across a unit-disk obstacle at the origin.
// Initial states are drawn from [-6,6]^2 outside radius 3 and the goal sits
// near the antipode, so the unfiltered reference drives through the disk.
Scenario single_integrator_scenario() {
  Scenario s;
  s.name = "single_integrator";

  const double obstacle_radius = 1.0;

  s.system.name = s.name;
  s.system.state_dim = 2;
  s.system.control_dim = 2;
  s.system.control_lower = Eigen::Vector2d(-1.0, -1.0);
  s.system.control_upper = Eigen::Vector2d(1.0, 1.0);
  s.system.drift = [](const Eigen::VectorXd& x) { return Eigen::VectorXd::Zero(x.size()); };
  s.system.actuation = [](const Eigen::VectorXd&) {
    return Eigen::MatrixXd::Identity(2, 2);
  };

  s.reference = [](const Eigen::VectorXd& x, const Eigen::VectorXd& goal) -> Eigen::VectorXd {
    Eigen::VectorXd d = goal - x;
    const double n = d.norm();
    if (n < 1e-12) return Eigen::VectorXd::Zero(2);
    return d / n;
  };

  s.sample_initial = [](Rng& rng) {
    Eigen::VectorXd x0(2);
    do {
      x0(0) = rng.uniform(-6.0, 6.0);
      x0(1) = rng.uniform(-6.0, 6.0);
    } while (x0.norm() < 3.0);
    Eigen::VectorXd goal(2);
    goal(0) = -x0(0) + rng.uniform(-1.0, 1.0);
    goal(1) = -x0(1) + rng.uniform(-1.0, 1.0);
    return std::make_pair(x0, goal);
  };

  s.failure = [obstacle_radius](const Eigen::VectorXd& x) { return x.norm() < obstacle_radius; };
  s.goal_reached = [](const Eigen::VectorXd& x, const Eigen::VectorXd& goal) {
    return (x - goal).norm() <= 0.1;
  };

  s.dt = 0.1;
  s.max_steps = 300;
  s.delta = 0.6;

  s.control_grid.cells_per_dim = {50, 50};
  s.control_grid.lower = s.system.control_lower;
  s.control_grid.upper = s.system.control_upper;
  s.control_grid.sample_time = s.dt;

  AnalyticBarrier gt;
  gt.value = [obstacle_radius](const Eigen::VectorXd& x) { return x.norm() - obstacle_radius; };
  gt.gradient = [](const Eigen::VectorXd& x) -> Eigen::VectorXd {
    const double n = x.norm();
    if (n < 1e-12) return Eigen::VectorXd::Zero(2);
    return x / n;
  };
  s.gt_cbf = gt;

  s.expert.kind = ExpertSpec::Kind::gt_cbf_qp;
  s.expert.alpha = 1.0;
  s.lcbf_oracle = LcbfOracle::gt_sign;
  s.default_demo_count = 150;

  s.plot_dims = {0, 1};
  s.plot_lower = Eigen::Vector2d(-6.0, -6.0);
  s.plot_upper = Eigen::Vector2d(6.0, 6.0);
  s.plot_fixed = Eigen::VectorXd::Zero(2);
  return s;
}

}  // namespace iclcbf
