#include "iclcbf/adam.hpp"

#include <cmath>

namespace iclcbf {

AdamOptimizer::AdamOptimizer(const MlpFunction& net, AdamConfig config)
    : config_(config), m_(net.zero_gradient()), v_(net.zero_gradient()) {}

void AdamOptimizer::step(MlpFunction& net, const MlpGradient& grad) {
  ++steps_;
  const double c1 = 1.0 - std::pow(config_.beta1, static_cast<double>(steps_));
  const double c2 = 1.0 - std::pow(config_.beta2, static_cast<double>(steps_));
  for (int l = 0; l < net.layer_count(); ++l) {
    m_.weights[l] = config_.beta1 * m_.weights[l] + (1.0 - config_.beta1) * grad.weights[l];
    v_.weights[l] = (config_.beta2 * v_.weights[l].array() +
                     (1.0 - config_.beta2) * grad.weights[l].array().square())
                        .matrix();
    net.weight(l).array() -= config_.learning_rate * (m_.weights[l].array() / c1) /
                             ((v_.weights[l].array() / c2).sqrt() + config_.epsilon);

    m_.biases[l] = config_.beta1 * m_.biases[l] + (1.0 - config_.beta1) * grad.biases[l];
    v_.biases[l] = (config_.beta2 * v_.biases[l].array() +
                    (1.0 - config_.beta2) * grad.biases[l].array().square())
                       .matrix();
    net.bias(l).array() -= config_.learning_rate * (m_.biases[l].array() / c1) /
                           ((v_.biases[l].array() / c2).sqrt() + config_.epsilon);
  }
}

}  // namespace iclcbf
