#include "iclcbf/losses.hpp"

namespace iclcbf {

void CbfLossWeights::validate() const {
  if (w_safe < 0 || w_unsafe < 0 || w_ascent < 0 || eps_safe < 0 || eps_unsafe < 0 ||
      eps_ascent < 0) {
    throw std::invalid_argument("barrier loss weights and margins must be nonnegative");
  }
  if (alpha <= 0) throw std::invalid_argument("barrier loss requires alpha > 0");
}

double constraint_loss(const MlpFunction& constraint,
                       const std::vector<Eigen::VectorXd>& sampled_states,
                       const std::vector<Eigen::VectorXd>& expert_states) {
  if (sampled_states.empty() || expert_states.empty()) {
    throw std::invalid_argument("constraint_loss requires nonempty sampled and expert sets");
  }
  double loss = 0.0;
  for (const auto& x : sampled_states) {
    const double e = 1.0 - constraint.value(x);
    loss += e * e;
  }
  for (const auto& x : expert_states) {
    const double e = 1.0 + constraint.value(x);
    loss += e * e;
  }
  return loss;
}

double cbf_loss(const MlpFunction& barrier, const SystemModel& system, const LabeledDataset& data,
                const CbfLossWeights& w) {
  w.validate();
  if (data.x_safe.empty() && data.x_unsafe.empty()) {
    throw std::invalid_argument("cbf_loss requires data in at least one partition");
  }
  auto relu = [](double v) { return v > 0.0 ? v : 0.0; };
  double loss = 0.0;
  for (const auto& x : data.x_safe) loss += w.w_safe * relu(w.eps_safe - barrier.value(x));
  for (const auto& x : data.x_unsafe) loss += w.w_unsafe * relu(w.eps_unsafe + barrier.value(x));
  for (const auto& [x, u] : data.d_safe) {
    const double ascent = barrier.directional(x, system.derivative(x, u));
    loss += w.w_ascent * relu(w.eps_ascent - ascent - w.alpha * barrier.value(x));
  }
  return loss;
}

}  // namespace iclcbf
