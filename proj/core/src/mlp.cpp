#include "iclcbf/mlp.hpp"

#include "iclcbf/rng.hpp"

namespace iclcbf {

std::string output_activation_name(OutputActivation a) {
  return a == OutputActivation::identity ? "identity" : "tanh";
}

OutputActivation parse_output_activation(const std::string& name) {
  if (name == "identity") return OutputActivation::identity;
  if (name == "tanh") return OutputActivation::tanh_bounded;
  throw std::invalid_argument("unknown output activation: " + name);
}

void MlpGradient::set_zero() {
  for (auto& w : weights) w.setZero();
  for (auto& b : biases) b.setZero();
}

void MlpGradient::scale(double s) {
  for (auto& w : weights) w *= s;
  for (auto& b : biases) b *= s;
}

MlpFunction::MlpFunction(std::vector<int> layer_sizes, OutputActivation output, uint64_t seed,
                         bool zero_output_layer)
    : layer_sizes_(std::move(layer_sizes)), output_(output), seed_(seed) {
  if (layer_sizes_.size() < 2) throw std::invalid_argument("mlp needs at least two layer sizes");
  for (int s : layer_sizes_) {
    if (s <= 0) throw std::invalid_argument("mlp layer sizes must be positive");
  }
  if (layer_sizes_.back() != 1) throw std::invalid_argument("mlp output size must be 1");

  Rng rng(named_seed(seed, "mlp-init"));
  const int layers = static_cast<int>(layer_sizes_.size()) - 1;
  weights_.reserve(layers);
  biases_.reserve(layers);
  for (int l = 0; l < layers; ++l) {
    const int in = layer_sizes_[l];
    const int out = layer_sizes_[l + 1];
    Eigen::MatrixXd w(out, in);
    Eigen::VectorXd b(out);
    const bool zero = zero_output_layer && l == layers - 1;
    const double bound = 1.0 / std::sqrt(static_cast<double>(in));
    for (int i = 0; i < out; ++i) {
      for (int j = 0; j < in; ++j) w(i, j) = zero ? 0.0 : rng.uniform(-bound, bound);
      b(i) = zero ? 0.0 : rng.uniform(-bound, bound);
    }
    weights_.push_back(std::move(w));
    biases_.push_back(std::move(b));
  }
}

void MlpFunction::check_input(const Eigen::MatrixXd& X) const {
  if (X.rows() != input_dim()) {
    throw std::invalid_argument("mlp input dimension mismatch: got " + std::to_string(X.rows()) +
                                ", expected " + std::to_string(input_dim()));
  }
}

double MlpFunction::value(const Eigen::VectorXd& x) const {
  check_input(x);
  Eigen::VectorXd a = x;
  const int L = layer_count();
  for (int l = 0; l < L - 1; ++l) {
    a = ((weights_[l] * a + biases_[l]).array().tanh()).matrix();
  }
  double z = (weights_[L - 1] * a)(0) + biases_[L - 1](0);
  return output_ == OutputActivation::identity ? z : std::tanh(z);
}

Eigen::RowVectorXd MlpFunction::value_batch(const Eigen::MatrixXd& X) const {
  check_input(X);
  Eigen::MatrixXd a = X;
  const int L = layer_count();
  for (int l = 0; l < L - 1; ++l) {
    a = ((weights_[l] * a).colwise() + biases_[l]).array().tanh().matrix();
  }
  Eigen::RowVectorXd z = (weights_[L - 1] * a).row(0).array() + biases_[L - 1](0);
  if (output_ == OutputActivation::tanh_bounded) z = z.array().tanh().matrix();
  return z;
}

Eigen::VectorXd MlpFunction::input_gradient(const Eigen::VectorXd& x) const {
  check_input(x);
  const int L = layer_count();
  std::vector<Eigen::VectorXd> acts(L);
  acts[0] = x;
  for (int l = 0; l < L - 1; ++l) {
    acts[l + 1] = ((weights_[l] * acts[l] + biases_[l]).array().tanh()).matrix();
  }
  double outprime = 1.0;
  if (output_ == OutputActivation::tanh_bounded) {
    double z = (weights_[L - 1] * acts[L - 1])(0) + biases_[L - 1](0);
    double t = std::tanh(z);
    outprime = 1.0 - t * t;
  }
  Eigen::VectorXd g = weights_[L - 1].transpose() * Eigen::VectorXd::Constant(1, outprime);
  for (int l = L - 2; l >= 0; --l) {
    g = (1.0 - acts[l + 1].array().square()) * g.array();
    g = weights_[l].transpose() * g;
  }
  return g;
}

double MlpFunction::directional(const Eigen::VectorXd& x, const Eigen::VectorXd& v) const {
  check_input(x);
  check_input(v);
  Eigen::VectorXd a = x;
  Eigen::VectorXd da = v;
  const int L = layer_count();
  for (int l = 0; l < L - 1; ++l) {
    Eigen::VectorXd z = weights_[l] * a + biases_[l];
    Eigen::VectorXd dz = weights_[l] * da;
    a = z.array().tanh().matrix();
    da = ((1.0 - a.array().square()) * dz.array()).matrix();
  }
  double dz = (weights_[L - 1] * da)(0);
  if (output_ == OutputActivation::tanh_bounded) {
    double z = (weights_[L - 1] * a)(0) + biases_[L - 1](0);
    double t = std::tanh(z);
    dz *= 1.0 - t * t;
  }
  return dz;
}

MlpGradient MlpFunction::zero_gradient() const {
  MlpGradient g;
  g.weights.reserve(weights_.size());
  g.biases.reserve(biases_.size());
  for (const auto& w : weights_) g.weights.push_back(Eigen::MatrixXd::Zero(w.rows(), w.cols()));
  for (const auto& b : biases_) g.biases.push_back(Eigen::VectorXd::Zero(b.size()));
  return g;
}

int MlpFunction::parameter_count() const {
  int n = 0;
  for (const auto& w : weights_) n += static_cast<int>(w.size());
  for (const auto& b : biases_) n += static_cast<int>(b.size());
  return n;
}

Eigen::VectorXd MlpFunction::flatten_parameters() const {
  Eigen::VectorXd flat(parameter_count());
  int at = 0;
  for (size_t l = 0; l < weights_.size(); ++l) {
    const auto& w = weights_[l];
    for (int i = 0; i < w.rows(); ++i)
      for (int j = 0; j < w.cols(); ++j) flat(at++) = w(i, j);
    for (int i = 0; i < biases_[l].size(); ++i) flat(at++) = biases_[l](i);
  }
  return flat;
}

void MlpFunction::load_parameters(const Eigen::VectorXd& flat) {
  if (flat.size() != parameter_count()) {
    throw std::invalid_argument("parameter vector size mismatch");
  }
  int at = 0;
  for (size_t l = 0; l < weights_.size(); ++l) {
    auto& w = weights_[l];
    for (int i = 0; i < w.rows(); ++i)
      for (int j = 0; j < w.cols(); ++j) w(i, j) = flat(at++);
    for (int i = 0; i < biases_[l].size(); ++i) biases_[l](i) = flat(at++);
  }
}

const Eigen::RowVectorXd& MlpBackprop::forward(const Eigen::MatrixXd& X) {
  const int L = net_->layer_count();
  acts_.resize(L);
  acts_[0] = X;
  for (int l = 0; l < L - 1; ++l) {
    acts_[l + 1] =
        ((net_->weight(l) * acts_[l]).colwise() + net_->bias(l)).array().tanh().matrix();
  }
  zout_ = (net_->weight(L - 1) * acts_[L - 1]).row(0).array() + net_->bias(L - 1)(0);
  y_ = net_->output_activation() == OutputActivation::identity
           ? zout_
           : Eigen::RowVectorXd(zout_.array().tanh().matrix());
  has_tangent_ = false;
  return y_;
}

const Eigen::RowVectorXd& MlpBackprop::forward_tangent(const Eigen::MatrixXd& V) {
  const int L = net_->layer_count();
  tangents_.resize(L);
  dzs_.resize(L - 1);
  tangents_[0] = V;
  for (int l = 0; l < L - 1; ++l) {
    dzs_[l] = net_->weight(l) * tangents_[l];
    tangents_[l + 1] = ((1.0 - acts_[l + 1].array().square()) * dzs_[l].array()).matrix();
  }
  dzout_ = (net_->weight(L - 1) * tangents_[L - 1]).row(0);
  dy_ = net_->output_activation() == OutputActivation::identity
            ? dzout_
            : Eigen::RowVectorXd(((1.0 - y_.array().square()) * dzout_.array()).matrix());
  has_tangent_ = true;
  return dy_;
}

void MlpBackprop::backward(const Eigen::RowVectorXd& gy, const Eigen::RowVectorXd* gd,
                           MlpGradient& grad) {
  const int L = net_->layer_count();
  const bool tangent = gd != nullptr;
  if (tangent && !has_tangent_) {
    throw std::logic_error("backward with directional adjoints requires forward_tangent");
  }

  Eigen::RowVectorXd gz, gdz;
  if (net_->output_activation() == OutputActivation::identity) {
    gz = gy;
    if (tangent) gdz = *gd;
  } else {
    Eigen::ArrayXXd op = 1.0 - y_.array().square();
    gz = (gy.array() * op).matrix();
    if (tangent) {
      gz += ((*gd).array() * (-2.0 * y_.array() * op) * dzout_.array()).matrix();
      gdz = ((*gd).array() * op).matrix();
    }
  }

  grad.weights[L - 1].noalias() += gz * acts_[L - 1].transpose();
  if (tangent) grad.weights[L - 1].noalias() += gdz * tangents_[L - 1].transpose();
  grad.biases[L - 1](0) += gz.sum();

  Eigen::MatrixXd ga = net_->weight(L - 1).transpose() * gz;
  Eigen::MatrixXd gda;
  if (tangent) gda = net_->weight(L - 1).transpose() * gdz;

  for (int l = L - 2; l >= 0; --l) {
    const Eigen::ArrayXXd t = acts_[l + 1].array();
    const Eigen::ArrayXXd hp = 1.0 - t.square();
    Eigen::MatrixXd gzl = (ga.array() * hp).matrix();
    Eigen::MatrixXd gdzl;
    if (tangent) {
      gzl += (gda.array() * (-2.0 * t * hp) * dzs_[l].array()).matrix();
      gdzl = (gda.array() * hp).matrix();
    }
    grad.weights[l].noalias() += gzl * acts_[l].transpose();
    if (tangent) grad.weights[l].noalias() += gdzl * tangents_[l].transpose();
    grad.biases[l].noalias() += gzl.rowwise().sum();
    if (l > 0) {
      ga.noalias() = net_->weight(l).transpose() * gzl;
      if (tangent) gda.noalias() = net_->weight(l).transpose() * gdzl;
    }
  }
}

MlpGradient parameter_gradient(const MlpFunction& net, const Eigen::MatrixXd& X,
                               const Eigen::RowVectorXd& gy, const Eigen::MatrixXd* V,
                               const Eigen::RowVectorXd* gd) {
  MlpGradient grad = net.zero_gradient();
  MlpBackprop bp(net);
  bp.forward(X);
  if (V != nullptr) bp.forward_tangent(*V);
  bp.backward(gy, gd, grad);
  return grad;
}

}  // namespace iclcbf
