#pragma once

#include <optional>

#include "iclcbf/adam.hpp"
#include "iclcbf/config.hpp"
#include "iclcbf/expert.hpp"
#include "iclcbf/losses.hpp"
#include "iclcbf/scenario.hpp"

namespace iclcbf {

struct TrainingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IclConfig {
  int iterations = 5;       // N
  int rollouts_xsb = 150;   // pi_ref rollouts per barrier labeling pass
  int rollouts_xsc = 150;   // approximate-expert rollouts per constraint update
  int constraint_epochs = 200;
  int cbf_epochs = 200;
  int constraint_batch = 256;
  int cbf_batch = 256;
  double constraint_lr = 1e-3;
  double cbf_lr = 1e-3;
  std::vector<int> hidden_layers = {64, 64};
  bool heuristic_mode = true;
  // Data source for the final barrier training pass: fresh reference rollouts
  // or the union of all approximate-expert rollouts across iterations.
  enum class XsbSource { reference, union_xsc };
  XsbSource xsb_source = XsbSource::reference;
  uint64_t seed = 0;
  int workers = 0;

  void validate() const;
  static IclConfig from_config(const Config& cfg);
};

struct IterationRecord {
  int iteration = 0;
  std::optional<double> constraint_loss;
  std::optional<double> cbf_loss;
  std::optional<size_t> n_safe;
  std::optional<size_t> n_unsafe;
  std::optional<size_t> n_dsafe;
  double wall_seconds = 0.0;
};

struct TrainingHistory {
  std::vector<IterationRecord> iterations;

  std::vector<double> constraint_losses() const;
  double total_wall_seconds() const;
  void write_csv(const std::string& path) const;
};

// Minibatch optimization of the classifier loss; returns per-epoch mean
// losses. Throws TrainingError if the loss stops being finite.
std::vector<double> train_constraint(MlpFunction& constraint,
                                     const std::vector<Eigen::VectorXd>& sampled_states,
                                     const std::vector<Eigen::VectorXd>& expert_states,
                                     int epochs, int batch, double lr, Rng& rng);

// Minibatch optimization of the barrier loss; x_unsafe may be empty but
// x_safe and d_safe must not be. Returns per-epoch mean losses.
std::vector<double> train_cbf(MlpFunction& barrier, const SystemModel& system,
                              const LabeledDataset& data, const CbfLossWeights& w, int epochs,
                              int batch, double lr, Rng& rng);

struct IclResult {
  MlpFunction barrier;
  MlpFunction constraint;
  TrainingHistory history;
};

// The iterative trainer. Full mode labels fresh reference rollouts and
// retrains the barrier every iteration, sampling with the CBF-QP policy in
// between. Heuristic mode drives the first N-1 iterations with the
// grid-search policy and trains the barrier once at the end.
IclResult train_icl_cbf(const Scenario& scenario, const TrajectoryBatch& expert,
                        const IclConfig& config, const CbfLossWeights& weights);

struct LcbfResult {
  MlpFunction barrier;
  TrainingHistory history;
};

// Baseline: one barrier training pass on reference rollouts labeled by the
// scenario's ground-truth safety oracle.
LcbfResult train_lcbf(const Scenario& scenario, const IclConfig& config,
                      const CbfLossWeights& weights);

CbfLossWeights cbf_weights_from_config(const Config& cfg);

}  // namespace iclcbf
