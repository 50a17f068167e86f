#include <cmath>

#include "iclcbf/lqr.hpp"
#include "iclcbf/scenarios.hpp"

namespace iclcbf {

void QuadrotorParams::validate() const {
  if (mass <= 0 || gravity <= 0 || linear_drag <= 0 || angular_drag <= 0 || inertia <= 0 ||
      arm_length <= 0) {
    throw ConfigError("quadrotor parameters must all be strictly positive");
  }
}

QuadrotorParams QuadrotorParams::from_config(const Config& cfg) {
  QuadrotorParams p;
  p.mass = cfg.get_double("quadrotor.mass", p.mass);
  p.gravity = cfg.get_double("quadrotor.gravity", p.gravity);
  p.linear_drag = cfg.get_double("quadrotor.linear_drag", p.linear_drag);
  p.angular_drag = cfg.get_double("quadrotor.angular_drag", p.angular_drag);
  p.inertia = cfg.get_double("quadrotor.inertia", p.inertia);
  p.arm_length = cfg.get_double("quadrotor.arm_length", p.arm_length);
  p.validate();
  return p;
}

// Self-righting planar quadrotor, state [x, v_x, y, v_y, phi, rho], two
// thrust inputs in [0, 20]. The rotors sit at +-l about the pitch axis, so
// they produce opposite torques; LQR about hover tracks the goal.
Scenario quadrotor_scenario(const QuadrotorParams& params) {
  params.validate();
  Scenario s;
  s.name = "quadrotor";

  const double m = params.mass;
  const double grav = params.gravity;
  const double cdv = params.linear_drag;
  const double cdp = params.angular_drag;
  const double iyy = params.inertia;
  const double arm = params.arm_length;

  s.system.name = s.name;
  s.system.state_dim = 6;
  s.system.control_dim = 2;
  s.system.control_lower = Eigen::Vector2d(0.0, 0.0);
  s.system.control_upper = Eigen::Vector2d(20.0, 20.0);
  s.system.drift = [m, grav, cdv, cdp, iyy](const Eigen::VectorXd& x) -> Eigen::VectorXd {
    Eigen::VectorXd d(6);
    d << x(1), -cdv * x(1) / m, x(3), -cdv * x(3) / m - grav, x(5), -cdp * x(5) / iyy;
    return d;
  };
  s.system.actuation = [m, iyy, arm](const Eigen::VectorXd& x) -> Eigen::MatrixXd {
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(6, 2);
    const double sp = std::sin(x(4));
    const double cp = std::cos(x(4));
    g(1, 0) = -sp / m;
    g(1, 1) = -sp / m;
    g(3, 0) = cp / m;
    g(3, 1) = cp / m;
    g(5, 0) = -arm / iyy;
    g(5, 1) = arm / iyy;
    return g;
  };

  s.dt = 0.05;
  s.max_steps = 300;
  s.delta = 0.6;

  // Hover linearization for the LQR reference: phi = 0, u1 = u2 = m g / 2.
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(6, 6);
  A(0, 1) = 1.0;
  A(1, 1) = -cdv / m;
  A(1, 4) = -grav;  // -(cos phi / m)(u1* + u2*) at hover
  A(2, 3) = 1.0;
  A(3, 3) = -cdv / m;
  A(4, 5) = 1.0;
  A(5, 5) = -cdp / iyy;
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(6, 2);
  B(3, 0) = 1.0 / m;
  B(3, 1) = 1.0 / m;
  B(5, 0) = -arm / iyy;
  B(5, 1) = arm / iyy;

  Eigen::MatrixXd K;
  try {
    K = lqr_gain(A, B, Eigen::MatrixXd::Identity(6, 6), Eigen::MatrixXd::Identity(2, 2), s.dt);
  } catch (const LqrError& e) {
    throw ConfigError(std::string("quadrotor LQR synthesis failed: ") + e.what());
  }
  const Eigen::Vector2d hover(m * grav / 2.0, m * grav / 2.0);

  s.reference = [K, hover](const Eigen::VectorXd& x, const Eigen::VectorXd& goal) {
    Eigen::VectorXd target = Eigen::VectorXd::Zero(6);
    target(0) = goal(0);
    target(2) = goal(1);
    return Eigen::VectorXd(hover - K * (x - target));
  };

  s.failure = [](const Eigen::VectorXd& x) { return x(2) <= 0.0; };
  s.goal_reached = [](const Eigen::VectorXd& x, const Eigen::VectorXd& goal) {
    return (Eigen::Vector2d(x(0), x(2)) - Eigen::Vector2d(goal(0), goal(1))).norm() <= 0.1;
  };

  s.sample_initial = [](Rng& rng) {
    Eigen::VectorXd x0(6);
    x0 << 0.0, 1.0, 2.0 + rng.uniform(-0.1, 0.1), 0.0, -M_PI / 2.5 + rng.uniform(-0.05, 0.05),
        0.0;
    Eigen::VectorXd goal(2);
    goal << 6.0, 9.0;
    return std::make_pair(x0, goal);
  };

  s.control_grid.cells_per_dim = {100, 100};
  s.control_grid.lower = s.system.control_lower;
  s.control_grid.upper = s.system.control_upper;
  s.control_grid.sample_time = s.dt;

  s.expert.kind = ExpertSpec::Kind::lookahead;
  s.expert.horizon = 10;
  s.expert.continuation = 20;
  s.expert.evasive = ExpertSpec::Evasive::constant_control;
  s.expert.evasive_control = hover;
  s.default_demo_count = 60;

  s.plot_dims = {0, 2};
  s.plot_lower = Eigen::Vector2d(-2.0, -1.0);
  s.plot_upper = Eigen::Vector2d(8.0, 11.0);
  s.plot_fixed = Eigen::VectorXd::Zero(6);
  return s;
}

}  // namespace iclcbf
