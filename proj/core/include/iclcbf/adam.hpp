#pragma once

#include "iclcbf/mlp.hpp"

namespace iclcbf {

struct AdamConfig {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

// Adam with bias correction. Moment accumulators mirror the parameter shapes.
class AdamOptimizer {
 public:
  AdamOptimizer(const MlpFunction& net, AdamConfig config = {});

  void step(MlpFunction& net, const MlpGradient& grad);

  int64_t step_count() const { return steps_; }
  const AdamConfig& config() const { return config_; }

 private:
  AdamConfig config_;
  MlpGradient m_;
  MlpGradient v_;
  int64_t steps_ = 0;
};

}  // namespace iclcbf
