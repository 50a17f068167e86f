#pragma once

#include <string>

#include "iclcbf/mlp.hpp"

namespace iclcbf {

struct CheckpointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Plain-text checkpoint: one header line (layer sizes, activations, seed)
// followed by the flat parameter array, one value per line at full decimal
// precision so the round trip is bit-exact.
void save_checkpoint(const MlpFunction& net, const std::string& path);
MlpFunction load_checkpoint(const std::string& path);

}  // namespace iclcbf
