#pragma once

#include <atomic>
#include <functional>
#include <memory>

#include "iclcbf/mlp.hpp"
#include "iclcbf/qp.hpp"
#include "iclcbf/rollout.hpp"
#include "iclcbf/system_model.hpp"

namespace iclcbf {

// Reference controllers are goal-conditioned; the goal is bound per episode.
using GoalReference =
    std::function<Eigen::VectorXd(const Eigen::VectorXd& x, const Eigen::VectorXd& goal)>;

struct FilterDiagnostics {
  std::atomic<int64_t> infeasible_solves{0};
  std::atomic<int64_t> fallback_controls{0};

  void reset() {
    infeasible_solves = 0;
    fallback_controls = 0;
  }
};

// Scalar certificate with gradient, either analytic or a network.
struct Barrier {
  std::function<double(const Eigen::VectorXd&)> value;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> gradient;

  static Barrier from_mlp(const MlpFunction& net);
};

// Control-space grid searched by the heuristic policy: cells_per_dim cells
// over [lower, upper] per axis, candidates are cell centers. ball_radius > 0
// restricts candidates to a centered ball. sample_time is the lookahead used
// to score a candidate.
struct GridPolicySpec {
  std::vector<int> cells_per_dim;
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;
  double sample_time = 0.1;
  double ball_radius = 0.0;

  int total_cells() const;
  Eigen::VectorXd center(int flat_index) const;
};

// The QP safety filter: returns the box control nearest reference(x, goal)
// subject to grad B . (f + g u) + alpha B >= 0. Infeasible solves fall back
// to the least-violating control and are counted, so evaluation can keep
// scoring collisions.
GoalReference cbf_qp_policy(const SystemModel& system, Barrier barrier, double alpha,
                            GoalReference reference,
                            std::shared_ptr<FilterDiagnostics> diagnostics = nullptr);

// Grid-search policy: picks the candidate center nearest reference(x, goal)
// whose sample_time successor x' keeps constraint(x') < delta. When every
// candidate violates, returns the one minimizing constraint(x') (ties to the
// lowest flat cell index) and counts a fallback.
GoalReference grid_heuristic_policy(const SystemModel& system, const MlpFunction& constraint,
                                    double delta, const GridPolicySpec& spec,
                                    GoalReference reference,
                                    std::shared_ptr<FilterDiagnostics> diagnostics = nullptr);

StatePolicy bind_goal(const GoalReference& policy, const Eigen::VectorXd& goal);

}  // namespace iclcbf
