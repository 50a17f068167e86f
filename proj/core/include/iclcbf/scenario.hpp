#pragma once

#include <array>
#include <optional>
#include <utility>

#include "iclcbf/policies.hpp"
#include "iclcbf/rng.hpp"

namespace iclcbf {

// Analytic barrier used to build ground-truth CBF-QP experts.
struct AnalyticBarrier {
  std::function<double(const Eigen::VectorXd&)> value;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> gradient;

  Barrier as_barrier() const { return Barrier{value, gradient}; }
};

// How expert demonstrations are produced for a scenario.
struct ExpertSpec {
  enum class Kind {
    gt_cbf_qp,  // CBF-QP filter around the ground-truth barrier
    lookahead,  // grid candidates simulated forward, safest near-reference pick
  };
  enum class Evasive { none, max_turn_from_origin, constant_control };

  Kind kind = Kind::gt_cbf_qp;
  double alpha = 1.0;      // class-K slope for the ground-truth filter
  int horizon = 10;        // constant-candidate steps in the lookahead
  int continuation = 20;   // evasive continuation steps appended to the lookahead
  Evasive evasive = Evasive::none;
  Eigen::VectorXd evasive_control;  // used by constant_control (e.g. hover thrust)
};

// Safety oracle available for baseline (ground-truth-labeled) training.
enum class LcbfOracle { none, gt_sign, lookahead_check };

// A benchmark environment: dynamics plus reference controller, episode
// sampling, failure/goal predicates, timing, the labeling threshold delta,
// and the control grid for the heuristic policy.
struct Scenario {
  std::string name;
  SystemModel system;
  GoalReference reference;
  // Draws (x0, goal); sampled initial states never satisfy `failure`.
  std::function<std::pair<Eigen::VectorXd, Eigen::VectorXd>(Rng&)> sample_initial;
  StatePredicate failure;
  std::function<bool(const Eigen::VectorXd& x, const Eigen::VectorXd& goal)> goal_reached;
  double dt = 0.1;
  int max_steps = 300;
  double delta = 0.6;
  GridPolicySpec control_grid;
  std::optional<AnalyticBarrier> gt_cbf;
  ExpertSpec expert;
  LcbfOracle lcbf_oracle = LcbfOracle::none;
  int default_demo_count = 150;

  // Level-set export defaults: which two state dims to plot, the window, and
  // values for the remaining coordinates.
  std::array<int, 2> plot_dims = {0, 1};
  Eigen::VectorXd plot_lower;
  Eigen::VectorXd plot_upper;
  Eigen::VectorXd plot_fixed;

  StatePredicate goal_predicate(const Eigen::VectorXd& goal) const {
    auto pred = goal_reached;
    return [pred, goal](const Eigen::VectorXd& x) { return pred(x, goal); };
  }
};

}  // namespace iclcbf
