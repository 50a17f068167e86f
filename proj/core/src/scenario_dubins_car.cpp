#include <cmath>

#include "iclcbf/angles.hpp"
#include "iclcbf/scenarios.hpp"

namespace iclcbf {

// Unit-speed Dubins car [x, y, phi] steering its heading toward a fixed goal
// while avoiding the side-2 square at the origin.
Scenario dubins_car_scenario() {
  Scenario s;
  s.name = "dubins_car";

  const double speed = 1.0;

  s.system.name = s.name;
  s.system.state_dim = 3;
  s.system.control_dim = 1;
  s.system.control_lower = Eigen::VectorXd::Constant(1, -1.0);
  s.system.control_upper = Eigen::VectorXd::Constant(1, 1.0);
  s.system.drift = [speed](const Eigen::VectorXd& x) -> Eigen::VectorXd {
    Eigen::VectorXd d(3);
    d << speed * std::cos(x(2)), speed * std::sin(x(2)), 0.0;
    return d;
  };
  s.system.actuation = [](const Eigen::VectorXd&) -> Eigen::MatrixXd {
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(3, 1);
    g(2, 0) = 1.0;
    return g;
  };

  // pi_ref = psi - phi with psi the bearing to the goal, wrapped to (-pi, pi]
  // so the turn command points the short way round.
  s.reference = [](const Eigen::VectorXd& x, const Eigen::VectorXd& goal) -> Eigen::VectorXd {
    const double psi = std::atan2(goal(1) - x(1), goal(0) - x(0));
    Eigen::VectorXd u(1);
    u(0) = wrap_angle(psi - x(2));
    return u;
  };

  s.failure = [](const Eigen::VectorXd& x) {
    return std::abs(x(0)) < 1.0 && std::abs(x(1)) < 1.0;
  };
  s.goal_reached = [](const Eigen::VectorXd& x, const Eigen::VectorXd& goal) {
    return (x.head<2>() - goal.head<2>()).norm() <= 0.1;
  };

  s.sample_initial = [](Rng& rng) {
    Eigen::VectorXd x0(3);
    x0(0) = rng.uniform(-3.2, -2.8);
    x0(1) = rng.uniform(-3.2, -2.8);
    x0(2) = rng.uniform(-0.4 * M_PI, 0.4 * M_PI);
    Eigen::VectorXd goal(2);
    goal << 3.0, 3.5;
    return std::make_pair(x0, goal);
  };

  s.dt = 0.1;
  s.max_steps = 200;
  s.delta = 0.4;

  s.control_grid.cells_per_dim = {50};
  s.control_grid.lower = s.system.control_lower;
  s.control_grid.upper = s.system.control_upper;
  s.control_grid.sample_time = s.dt;

  s.expert.kind = ExpertSpec::Kind::lookahead;
  s.expert.horizon = 10;
  s.expert.continuation = 20;
  s.expert.evasive = ExpertSpec::Evasive::max_turn_from_origin;
  s.lcbf_oracle = LcbfOracle::lookahead_check;
  s.default_demo_count = 100;

  s.plot_dims = {0, 1};
  s.plot_lower = Eigen::Vector2d(-4.5, -4.5);
  s.plot_upper = Eigen::Vector2d(4.5, 5.0);
  s.plot_fixed = Eigen::VectorXd::Zero(3);
  return s;
}

}  // namespace iclcbf
