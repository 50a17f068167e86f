#include "iclcbf/checkpoint.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "iclcbf/config.hpp"

namespace iclcbf {

void save_checkpoint(const MlpFunction& net, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw CheckpointError("cannot write checkpoint: " + path);
  out << "mlp layers";
  for (int s : net.layer_sizes()) out << ' ' << s;
  out << " hidden tanh output " << output_activation_name(net.output_activation()) << " seed "
      << net.seed() << '\n';
  const Eigen::VectorXd flat = net.flatten_parameters();
  for (int i = 0; i < flat.size(); ++i) out << format_full(flat(i)) << '\n';
  if (!out) throw CheckpointError("write failed: " + path);
}

MlpFunction load_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CheckpointError("cannot open checkpoint: " + path);
  std::string header;
  if (!std::getline(in, header)) throw CheckpointError("empty checkpoint: " + path);

  std::istringstream hs(header);
  std::string tag, word;
  hs >> tag >> word;
  if (tag != "mlp" || word != "layers") throw CheckpointError("bad checkpoint header: " + header);

  std::vector<int> sizes;
  std::string token;
  std::string hidden_act, output_act;
  uint64_t seed = 0;
  while (hs >> token) {
    if (token == "hidden") {
      hs >> hidden_act;
    } else if (token == "output") {
      hs >> output_act;
    } else if (token == "seed") {
      hs >> seed;
    } else {
      sizes.push_back(std::atoi(token.c_str()));
    }
  }
  if (sizes.size() < 2) throw CheckpointError("bad layer sizes in header: " + header);
  if (hidden_act != "tanh") throw CheckpointError("unsupported hidden activation: " + hidden_act);

  MlpFunction net(sizes, parse_output_activation(output_act), seed);
  Eigen::VectorXd flat(net.parameter_count());
  std::string line;
  for (int i = 0; i < flat.size(); ++i) {
    if (!std::getline(in, line)) {
      throw CheckpointError("checkpoint truncated at parameter " + std::to_string(i));
    }
    char* end = nullptr;
    flat(i) = std::strtod(line.c_str(), &end);
    if (end == line.c_str()) throw CheckpointError("bad parameter value: " + line);
  }
  net.load_parameters(flat);
  return net;
}

}  // namespace iclcbf
