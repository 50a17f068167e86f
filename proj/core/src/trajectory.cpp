#include "iclcbf/trajectory.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "iclcbf/config.hpp"

namespace iclcbf {

std::string termination_name(Termination t) {
  switch (t) {
    case Termination::goal: return "goal";
    case Termination::timeout: return "timeout";
    case Termination::failure: return "failure";
  }
  return "timeout";
}

Termination parse_termination(const std::string& name) {
  if (name == "goal") return Termination::goal;
  if (name == "timeout") return Termination::timeout;
  if (name == "failure") return Termination::failure;
  throw std::invalid_argument("unknown termination: " + name);
}

size_t TrajectoryBatch::total_states() const {
  size_t n = 0;
  for (const auto& t : trajectories) n += t.states.size();
  return n;
}

std::vector<Eigen::VectorXd> TrajectoryBatch::all_states() const {
  std::vector<Eigen::VectorXd> out;
  out.reserve(total_states());
  for (const auto& t : trajectories)
    for (const auto& x : t.states) out.push_back(x);
  return out;
}

void TrajectoryBatch::append(const TrajectoryBatch& other) {
  trajectories.insert(trajectories.end(), other.trajectories.begin(), other.trajectories.end());
}

void write_trajectory_csv(const std::string& path, const TrajectoryBatch& batch, int state_dim,
                          int control_dim) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write trajectory csv: " + path);
  out << "trajectory_id,step,t";
  for (int i = 0; i < state_dim; ++i) out << ",x_" << i;
  for (int i = 0; i < control_dim; ++i) out << ",u_" << i;
  out << ",termination\n";
  for (size_t id = 0; id < batch.trajectories.size(); ++id) {
    const Trajectory& traj = batch.trajectories[id];
    for (size_t k = 0; k < traj.states.size(); ++k) {
      out << id << ',' << k << ',' << format_full(static_cast<double>(k) * traj.dt);
      for (int i = 0; i < state_dim; ++i) out << ',' << format_full(traj.states[k](i));
      const bool has_control = k < traj.controls.size();
      for (int i = 0; i < control_dim; ++i) {
        out << ',';
        if (has_control) out << format_full(traj.controls[k](i));
      }
      out << ',';
      if (k == 0) out << termination_name(traj.termination);
      out << '\n';
    }
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

TrajectoryBatch read_trajectory_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open trajectory csv: " + path);
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("empty trajectory csv: " + path);

  int state_dim = 0, control_dim = 0;
  {
    std::stringstream ss(header);
    std::string col;
    while (std::getline(ss, col, ',')) {
      if (col.rfind("x_", 0) == 0) ++state_dim;
      if (col.rfind("u_", 0) == 0) ++control_dim;
    }
  }
  if (state_dim == 0) throw std::runtime_error("trajectory csv has no state columns: " + path);

  TrajectoryBatch batch;
  std::string line;
  long current_id = -1;
  double prev_t = 0.0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    cells.resize(3 + state_dim + control_dim + 1);

    const long id = std::stol(cells[0]);
    const double t = std::stod(cells[2]);
    if (id != current_id) {
      batch.trajectories.emplace_back();
      current_id = id;
      if (!cells.back().empty()) batch.trajectories.back().termination = parse_termination(cells.back());
    } else {
      batch.trajectories.back().dt = t - prev_t;
    }
    prev_t = t;

    Trajectory& traj = batch.trajectories.back();
    Eigen::VectorXd x(state_dim);
    for (int i = 0; i < state_dim; ++i) x(i) = std::stod(cells[3 + i]);
    traj.states.push_back(x);

    if (!cells[3 + state_dim].empty()) {
      Eigen::VectorXd u(control_dim);
      for (int i = 0; i < control_dim; ++i) u(i) = std::stod(cells[3 + state_dim + i]);
      traj.controls.push_back(u);
    }
  }
  return batch;
}

}  // namespace iclcbf
