#include "iclcbf/expert.hpp"

#include <algorithm>

#include "iclcbf/angles.hpp"
#include "iclcbf/parallel.hpp"

namespace iclcbf {

namespace {

Eigen::VectorXd evasive_control(const ExpertSpec& spec, const SystemModel& system,
                                const Eigen::VectorXd& x) {
  switch (spec.evasive) {
    case ExpertSpec::Evasive::max_turn_from_origin: {
      // Turn hard away from the obstacle bearing.
      const double bearing = std::atan2(-x(1), -x(0));
      const double rel = wrap_angle(bearing - x(2));
      Eigen::VectorXd u(1);
      u(0) = rel > 0.0 ? system.control_lower(0) : system.control_upper(0);
      return u;
    }
    case ExpertSpec::Evasive::constant_control:
      return spec.evasive_control;
    case ExpertSpec::Evasive::none:
    default:
      return Eigen::VectorXd::Zero(system.control_dim);
  }
}

// Steps survived (capped at horizon + continuation) before hitting failure.
int lookahead_survival(const Scenario& sc, const Eigen::VectorXd& x0, const Eigen::VectorXd& u) {
  const ExpertSpec& spec = sc.expert;
  Eigen::VectorXd x = x0;
  int steps = 0;
  for (int h = 0; h < spec.horizon; ++h) {
    x = rk4_step(sc.system, x, u, sc.dt);
    if (sc.failure(x)) return steps;
    ++steps;
  }
  for (int e = 0; e < spec.continuation; ++e) {
    x = rk4_step(sc.system, x, evasive_control(spec, sc.system, x), sc.dt);
    if (sc.failure(x)) return steps;
    ++steps;
  }
  return steps;
}

GoalReference lookahead_policy(const Scenario& scenario) {
  auto sc = std::make_shared<Scenario>(scenario);
  auto centers = std::make_shared<std::vector<Eigen::VectorXd>>();
  for (int i = 0; i < sc->control_grid.total_cells(); ++i) {
    centers->push_back(sc->control_grid.center(i));
  }
  const int full = sc->expert.horizon + sc->expert.continuation;

  return [sc, centers, full](const Eigen::VectorXd& x, const Eigen::VectorXd& goal) {
    const Eigen::VectorXd u_ref = sc->reference(x, goal);
    std::vector<std::pair<double, int>> order(centers->size());
    for (size_t i = 0; i < centers->size(); ++i) {
      order[i] = {((*centers)[i] - u_ref).squaredNorm(), static_cast<int>(i)};
    }
    std::sort(order.begin(), order.end());

    int best_idx = order.front().second;
    int best_survival = -1;
    for (const auto& [dist2, idx] : order) {
      (void)dist2;
      const int survived = lookahead_survival(*sc, x, (*centers)[idx]);
      if (survived == full) return (*centers)[idx];
      if (survived > best_survival) {
        best_survival = survived;
        best_idx = idx;
      }
    }
    return (*centers)[best_idx];
  };
}

}  // namespace

GoalReference expert_policy(const Scenario& scenario) {
  if (scenario.expert.kind == ExpertSpec::Kind::gt_cbf_qp) {
    if (!scenario.gt_cbf) {
      throw ExpertGenerationError("scenario '" + scenario.name +
                                  "' has no ground-truth barrier for its expert");
    }
    return cbf_qp_policy(scenario.system, scenario.gt_cbf->as_barrier(), scenario.expert.alpha,
                         scenario.reference);
  }
  return lookahead_policy(scenario);
}

bool lookahead_state_safe(const Scenario& scenario, const Eigen::VectorXd& x) {
  if (scenario.failure(x)) return false;
  const int full = scenario.expert.horizon + scenario.expert.continuation;
  const int total = scenario.control_grid.total_cells();
  for (int i = 0; i < total; ++i) {
    if (lookahead_survival(scenario, x, scenario.control_grid.center(i)) == full) return true;
  }
  return false;
}

TrajectoryBatch generate_expert_demos(const Scenario& scenario, int count, uint64_t seed,
                                      int workers) {
  if (count < 1) throw std::invalid_argument("generate_expert_demos requires count >= 1");
  const uint64_t stream = named_seed(seed, "demo");
  const GoalReference expert = expert_policy(scenario);
  const int max_attempts = 10 * count;

  std::vector<Trajectory> results(max_attempts);
  std::vector<char> accepted(max_attempts, 0);
  std::atomic<int> accepted_count{0};

  const int wave = std::max(count, resolve_workers(workers));
  int attempted = 0;
  while (attempted < max_attempts && accepted_count.load() < count) {
    const int begin = attempted;
    const int end = std::min(max_attempts, begin + wave);
    parallel_for(end - begin, workers, [&](int k) {
      const int attempt = begin + k;
      Rng rng(indexed_seed(stream, static_cast<uint64_t>(attempt)));
      auto [x0, goal] = scenario.sample_initial(rng);
      Trajectory traj = rollout(scenario.system, bind_goal(expert, goal), x0, scenario.dt,
                                scenario.max_steps, scenario.goal_predicate(goal),
                                scenario.failure);
      bool ok = traj.termination != Termination::failure;
      if (ok && scenario.gt_cbf) {
        for (const auto& x : traj.states) {
          if (scenario.gt_cbf->value(x) < -1e-6) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        results[attempt] = std::move(traj);
        accepted[attempt] = 1;
        accepted_count.fetch_add(1, std::memory_order_relaxed);
      }
    });
    attempted = end;
  }

  TrajectoryBatch batch;
  batch.trajectories.reserve(count);
  for (int i = 0; i < attempted && static_cast<int>(batch.trajectories.size()) < count; ++i) {
    if (accepted[i]) batch.trajectories.push_back(std::move(results[i]));
  }
  if (static_cast<int>(batch.trajectories.size()) < count) {
    throw ExpertGenerationError("expert for scenario '" + scenario.name + "' produced only " +
                                std::to_string(batch.trajectories.size()) + "/" +
                                std::to_string(count) + " safe demonstrations in " +
                                std::to_string(attempted) + " attempts");
  }
  return batch;
}

}  // namespace iclcbf
