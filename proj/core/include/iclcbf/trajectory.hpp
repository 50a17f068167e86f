#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace iclcbf {

enum class Termination { goal, timeout, failure };

std::string termination_name(Termination t);
Termination parse_termination(const std::string& name);

// controls has exactly one fewer entry than states.
struct Trajectory {
  std::vector<Eigen::VectorXd> states;
  std::vector<Eigen::VectorXd> controls;
  double dt = 0.0;
  Termination termination = Termination::timeout;

  size_t step_count() const { return controls.size(); }
};

struct TrajectoryBatch {
  std::vector<Trajectory> trajectories;

  size_t total_states() const;
  // All states of all trajectories, in trajectory order.
  std::vector<Eigen::VectorXd> all_states() const;
  void append(const TrajectoryBatch& other);
};

// One row per step: trajectory_id, step, t, x_0..x_{n-1}, u_0..u_{m-1},
// termination. Control cells are empty on the final row of a trajectory and
// the termination cell is filled only on its first row.
void write_trajectory_csv(const std::string& path, const TrajectoryBatch& batch, int state_dim,
                          int control_dim);
TrajectoryBatch read_trajectory_csv(const std::string& path);

}  // namespace iclcbf
