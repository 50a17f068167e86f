#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace iclcbf {

enum class OutputActivation { identity, tanh_bounded };

std::string output_activation_name(OutputActivation a);
OutputActivation parse_output_activation(const std::string& name);

struct MlpGradient {
  std::vector<Eigen::MatrixXd> weights;
  std::vector<Eigen::VectorXd> biases;

  void set_zero();
  void scale(double s);
};

// Scalar-valued feedforward network with tanh hidden layers. Used both for
// the constraint classifier (tanh output, range (-1,1)) and the barrier
// (identity output). Gradients with respect to inputs and parameters are
// exact reverse-mode; MlpBackprop additionally differentiates through the
// input gradient itself, which the barrier ascent term needs.
class MlpFunction {
 public:
  // layer_sizes = {input, hidden..., 1}. With zero_output_layer the last
  // layer's weights and bias start at zero, so the network is exactly the
  // zero function while the hidden layers keep a trainable seeded
  // fan-in-uniform initialization.
  MlpFunction(std::vector<int> layer_sizes, OutputActivation output, uint64_t seed,
              bool zero_output_layer = false);

  int input_dim() const { return layer_sizes_.front(); }
  int layer_count() const { return static_cast<int>(weights_.size()); }
  const std::vector<int>& layer_sizes() const { return layer_sizes_; }
  OutputActivation output_activation() const { return output_; }
  uint64_t seed() const { return seed_; }

  double value(const Eigen::VectorXd& x) const;
  Eigen::VectorXd input_gradient(const Eigen::VectorXd& x) const;
  // Directional derivative of value at x along v, i.e. input_gradient(x).dot(v).
  double directional(const Eigen::VectorXd& x, const Eigen::VectorXd& v) const;

  // Columns of X are samples; returns one value per column.
  Eigen::RowVectorXd value_batch(const Eigen::MatrixXd& X) const;

  const Eigen::MatrixXd& weight(int layer) const { return weights_[layer]; }
  const Eigen::VectorXd& bias(int layer) const { return biases_[layer]; }
  Eigen::MatrixXd& weight(int layer) { return weights_[layer]; }
  Eigen::VectorXd& bias(int layer) { return biases_[layer]; }

  MlpGradient zero_gradient() const;

  int parameter_count() const;
  Eigen::VectorXd flatten_parameters() const;
  void load_parameters(const Eigen::VectorXd& flat);

 private:
  void check_input(const Eigen::MatrixXd& X) const;

  std::vector<int> layer_sizes_;
  std::vector<Eigen::MatrixXd> weights_;  // weights_[l]: (out x in)
  std::vector<Eigen::VectorXd> biases_;
  OutputActivation output_;
  uint64_t seed_;
};

// Batched forward/tangent/reverse passes over one minibatch. The tangent
// pass pushes per-sample directions V through the network so that the
// reverse pass can produce d/dparams of any scalar built from the values
// y_j and the directional derivatives d_j = grad(x_j) . v_j.
class MlpBackprop {
 public:
  explicit MlpBackprop(const MlpFunction& net) : net_(&net) {}

  const Eigen::RowVectorXd& forward(const Eigen::MatrixXd& X);
  // Requires forward() first; V must match X.
  const Eigen::RowVectorXd& forward_tangent(const Eigen::MatrixXd& V);

  // Accumulates into grad the parameter gradient of
  //   sum_j gy[j] * y_j + sum_j gd[j] * d_j
  // (pass gd = nullptr when no tangent pass was run).
  void backward(const Eigen::RowVectorXd& gy, const Eigen::RowVectorXd* gd, MlpGradient& grad);

  const Eigen::RowVectorXd& values() const { return y_; }
  const Eigen::RowVectorXd& directionals() const { return dy_; }

 private:
  const MlpFunction* net_;
  std::vector<Eigen::MatrixXd> acts_;      // acts_[0] = X, acts_[l] = tanh(Z_{l-1})
  std::vector<Eigen::MatrixXd> tangents_;  // tangent of acts_
  std::vector<Eigen::MatrixXd> dzs_;       // tangent of pre-activations, hidden layers
  Eigen::RowVectorXd zout_, y_, dzout_, dy_;
  bool has_tangent_ = false;
};

// Parameter gradient of sum_j [gy[j] * value(x_j) + gd[j] * (grad(x_j) . v_j)].
// V/gd may be null for losses that do not touch the input gradient.
MlpGradient parameter_gradient(const MlpFunction& net, const Eigen::MatrixXd& X,
                               const Eigen::RowVectorXd& gy, const Eigen::MatrixXd* V,
                               const Eigen::RowVectorXd* gd);

}  // namespace iclcbf
