#include "iclcbf/labeling.hpp"

#include <cmath>

namespace iclcbf {

LabeledDataset label_states_by(const std::function<bool(const Eigen::VectorXd&)>& is_safe,
                               const TrajectoryBatch& batch) {
  LabeledDataset data;
  for (const auto& traj : batch.trajectories) {
    std::vector<char> safe(traj.states.size());
    for (size_t k = 0; k < traj.states.size(); ++k) {
      safe[k] = is_safe(traj.states[k]) ? 1 : 0;
      if (safe[k]) {
        data.x_safe.push_back(traj.states[k]);
      } else {
        data.x_unsafe.push_back(traj.states[k]);
      }
    }
    for (size_t k = 0; k + 1 < traj.states.size() && k < traj.controls.size(); ++k) {
      if (safe[k] && safe[k + 1]) data.d_safe.emplace_back(traj.states[k], traj.controls[k]);
    }
  }
  return data;
}

LabeledDataset label_states(const MlpFunction& constraint, const TrajectoryBatch& batch,
                            double delta) {
  if (!std::isfinite(delta)) throw std::invalid_argument("label_states requires finite delta");
  return label_states_by(
      [&constraint, delta](const Eigen::VectorXd& x) { return constraint.value(x) < delta; },
      batch);
}

}  // namespace iclcbf
