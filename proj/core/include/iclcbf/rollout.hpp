#pragma once

#include <atomic>
#include <functional>

#include "iclcbf/integrate.hpp"
#include "iclcbf/trajectory.hpp"

namespace iclcbf {

using StatePolicy = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;
using StatePredicate = std::function<bool(const Eigen::VectorXd&)>;

struct RolloutCounters {
  std::atomic<int64_t> clamped_controls{0};
};

// Steps the closed loop until goal, failure, or max_steps. Every visited
// state is checked (including the last one), so a trajectory has at most
// max_steps + 1 states and exactly one fewer control. Policy outputs outside
// the control box are clamped and counted.
Trajectory rollout(const SystemModel& system, const StatePolicy& policy,
                   const Eigen::VectorXd& x0, double dt, int max_steps,
                   const StatePredicate& goal, const StatePredicate& failure,
                   RolloutCounters* counters = nullptr);

}  // namespace iclcbf
