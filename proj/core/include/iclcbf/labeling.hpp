#pragma once

#include "iclcbf/mlp.hpp"
#include "iclcbf/trajectory.hpp"

namespace iclcbf {

// Partition of sampled states plus the safe transition pairs. Every state
// lands in exactly one of x_safe / x_unsafe; d_safe holds (x, u) whose
// recorded successor (the next state of the same trajectory) is also safe.
struct LabeledDataset {
  std::vector<Eigen::VectorXd> x_safe;
  std::vector<Eigen::VectorXd> x_unsafe;
  std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>> d_safe;

  size_t total_states() const { return x_safe.size() + x_unsafe.size(); }
};

// Generic labeling pass; `is_safe` decides the partition.
LabeledDataset label_states_by(const std::function<bool(const Eigen::VectorXd&)>& is_safe,
                               const TrajectoryBatch& batch);

// Constraint-based labeling: safe iff constraint(x) < delta (x with
// constraint(x) == delta is unsafe).
LabeledDataset label_states(const MlpFunction& constraint, const TrajectoryBatch& batch,
                            double delta);

}  // namespace iclcbf
