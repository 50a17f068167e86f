#pragma once

#include "iclcbf/scenario.hpp"
#include "iclcbf/trajectory.hpp"

namespace iclcbf {

// `episodes` fresh (x0, goal) draws rolled out under the policy. Episode i
// uses the RNG stream indexed_seed(stream_seed, i) and writes into slot i,
// so results do not depend on the worker count.
TrajectoryBatch sample_rollouts(const Scenario& scenario, const GoalReference& policy,
                                int episodes, uint64_t stream_seed, int workers = 0,
                                RolloutCounters* counters = nullptr);

}  // namespace iclcbf
