#pragma once

#include "iclcbf/labeling.hpp"
#include "iclcbf/system_model.hpp"

namespace iclcbf {

// Hinge weights and margins for the barrier loss, plus the class-K slope.
struct CbfLossWeights {
  double w_safe = 1.0;
  double w_unsafe = 1.0;
  double w_ascent = 1.0;
  double eps_safe = 0.05;
  double eps_unsafe = 0.05;
  double eps_ascent = 0.01;
  double alpha = 1.0;

  void validate() const;
};

// Unnormalized classifier loss:
//   sum over sampled ||1 - c(x)||^2 + sum over expert ||1 + c(x)||^2.
// Both sets must be nonempty.
double constraint_loss(const MlpFunction& constraint,
                       const std::vector<Eigen::VectorXd>& sampled_states,
                       const std::vector<Eigen::VectorXd>& expert_states);

// Unnormalized barrier loss: three ReLU hinges pushing B >= eps_safe on safe
// states, B <= -eps_unsafe on unsafe states, and
// grad B . (f + g u) + alpha B >= eps_ascent on safe transitions.
double cbf_loss(const MlpFunction& barrier, const SystemModel& system, const LabeledDataset& data,
                const CbfLossWeights& w);

}  // namespace iclcbf
