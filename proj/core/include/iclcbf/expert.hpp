#pragma once

#include "iclcbf/scenario.hpp"
#include "iclcbf/trajectory.hpp"

namespace iclcbf {

struct ExpertGenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The demonstration policy for a scenario: a CBF-QP filter around the
// ground-truth barrier where one exists, otherwise the lookahead-filtered
// reference (grid candidates simulated for `horizon` steps plus an evasive
// continuation; nearest failure-free candidate wins).
GoalReference expert_policy(const Scenario& scenario);

// True when some lookahead candidate from x stays failure-free. This is the
// safety oracle used to label states for lookahead scenarios.
bool lookahead_state_safe(const Scenario& scenario, const Eigen::VectorXd& x);

// `count` demonstrations, none ending in failure. For scenarios with a
// ground-truth barrier, trajectories dipping below it (beyond 1e-6) are also
// rejected, so demonstrations witness the expert filter's invariance.
// Rejected episodes are resampled up to 10*count attempts.
TrajectoryBatch generate_expert_demos(const Scenario& scenario, int count, uint64_t seed,
                                      int workers = 0);

}  // namespace iclcbf
