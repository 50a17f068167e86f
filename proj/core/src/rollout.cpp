#include "iclcbf/rollout.hpp"

namespace iclcbf {

Trajectory rollout(const SystemModel& system, const StatePolicy& policy,
                   const Eigen::VectorXd& x0, double dt, int max_steps,
                   const StatePredicate& goal, const StatePredicate& failure,
                   RolloutCounters* counters) {
  if (max_steps < 1) throw std::invalid_argument("rollout requires max_steps >= 1");
  Trajectory traj;
  traj.dt = dt;
  traj.states.reserve(static_cast<size_t>(max_steps) + 1);
  traj.controls.reserve(static_cast<size_t>(max_steps));

  Eigen::VectorXd x = x0;
  traj.states.push_back(x);
  while (true) {
    if (failure(x)) {
      traj.termination = Termination::failure;
      break;
    }
    if (goal(x)) {
      traj.termination = Termination::goal;
      break;
    }
    if (static_cast<int>(traj.controls.size()) == max_steps) {
      traj.termination = Termination::timeout;
      break;
    }
    Eigen::VectorXd u = policy(x);
    if (!system.control_in_box(u)) {
      u = system.clamp_control(u);
      if (counters) counters->clamped_controls.fetch_add(1, std::memory_order_relaxed);
    }
    traj.controls.push_back(u);
    x = rk4_step(system, x, u, dt);
    traj.states.push_back(x);
  }
  return traj;
}

}  // namespace iclcbf
