#include "iclcbf/policies.hpp"

#include <algorithm>
#include <numeric>

#include "iclcbf/integrate.hpp"

namespace iclcbf {

Barrier Barrier::from_mlp(const MlpFunction& net) {
  auto shared = std::make_shared<MlpFunction>(net);
  Barrier b;
  b.value = [shared](const Eigen::VectorXd& x) { return shared->value(x); };
  b.gradient = [shared](const Eigen::VectorXd& x) { return shared->input_gradient(x); };
  return b;
}

int GridPolicySpec::total_cells() const {
  int n = 1;
  for (int c : cells_per_dim) n *= c;
  return n;
}

Eigen::VectorXd GridPolicySpec::center(int flat_index) const {
  const int dims = static_cast<int>(cells_per_dim.size());
  Eigen::VectorXd u(dims);
  int code = flat_index;
  for (int d = 0; d < dims; ++d) {
    const int i = code % cells_per_dim[d];
    code /= cells_per_dim[d];
    const double width = (upper(d) - lower(d)) / cells_per_dim[d];
    u(d) = lower(d) + (i + 0.5) * width;
  }
  return u;
}

GoalReference cbf_qp_policy(const SystemModel& system, Barrier barrier, double alpha,
                            GoalReference reference,
                            std::shared_ptr<FilterDiagnostics> diagnostics) {
  if (alpha <= 0.0) throw std::invalid_argument("cbf_qp_policy requires alpha > 0");
  return [&system, barrier = std::move(barrier), alpha, reference = std::move(reference),
          diagnostics](const Eigen::VectorXd& x, const Eigen::VectorXd& goal) {
    HalfspaceBoxQp qp;
    const Eigen::VectorXd grad = barrier.gradient(x);
    qp.a = system.actuation(x).transpose() * grad;
    qp.b = grad.dot(system.drift(x)) + alpha * barrier.value(x);
    qp.u_ref = reference(x, goal);
    qp.lower = system.control_lower;
    qp.upper = system.control_upper;
    QpSolution sol = solve_halfspace_box_qp(qp);
    if (!sol.feasible && diagnostics) {
      diagnostics->infeasible_solves.fetch_add(1, std::memory_order_relaxed);
    }
    return sol.u;
  };
}

GoalReference grid_heuristic_policy(const SystemModel& system, const MlpFunction& constraint,
                                    double delta, const GridPolicySpec& spec,
                                    GoalReference reference,
                                    std::shared_ptr<FilterDiagnostics> diagnostics) {
  if (static_cast<int>(spec.cells_per_dim.size()) != system.control_dim) {
    throw std::invalid_argument("grid spec does not match the system's control dimension");
  }
  for (int c : spec.cells_per_dim) {
    if (c <= 0) throw std::invalid_argument("grid spec needs positive cell counts");
  }

  // Candidate centers are fixed; precompute them once.
  auto centers = std::make_shared<std::vector<Eigen::VectorXd>>();
  auto flat_ids = std::make_shared<std::vector<int>>();
  const int total = spec.total_cells();
  centers->reserve(total);
  flat_ids->reserve(total);
  for (int i = 0; i < total; ++i) {
    Eigen::VectorXd u = spec.center(i);
    if (spec.ball_radius > 0.0 && u.norm() > spec.ball_radius) continue;
    centers->push_back(std::move(u));
    flat_ids->push_back(i);
  }
  if (centers->empty()) throw std::invalid_argument("grid spec yields no candidate controls");

  auto net = std::make_shared<MlpFunction>(constraint);
  const double ts = spec.sample_time;

  return [&system, net, delta, ts, centers, flat_ids, reference = std::move(reference),
          diagnostics](const Eigen::VectorXd& x, const Eigen::VectorXd& goal) {
    const Eigen::VectorXd u_ref = reference(x, goal);
    const size_t count = centers->size();

    std::vector<std::pair<double, int>> order(count);
    for (size_t i = 0; i < count; ++i) {
      order[i] = {((*centers)[i] - u_ref).squaredNorm(), static_cast<int>(i)};
    }
    std::sort(order.begin(), order.end(), [&](const auto& lhs, const auto& rhs) {
      if (lhs.first != rhs.first) return lhs.first < rhs.first;
      return (*flat_ids)[lhs.second] < (*flat_ids)[rhs.second];
    });

    double best_value = std::numeric_limits<double>::infinity();
    int best_idx = -1;
    for (const auto& [dist2, idx] : order) {
      (void)dist2;
      const Eigen::VectorXd& u = (*centers)[idx];
      const Eigen::VectorXd next = rk4_step(system, x, u, ts);
      const double c = net->value(next);
      if (c < delta) return u;
      if (c < best_value ||
          (c == best_value && best_idx >= 0 && (*flat_ids)[idx] < (*flat_ids)[best_idx])) {
        best_value = c;
        best_idx = idx;
      }
    }
    if (diagnostics) diagnostics->fallback_controls.fetch_add(1, std::memory_order_relaxed);
    return (*centers)[best_idx];
  };
}

StatePolicy bind_goal(const GoalReference& policy, const Eigen::VectorXd& goal) {
  return [policy, goal](const Eigen::VectorXd& x) { return policy(x, goal); };
}

}  // namespace iclcbf
