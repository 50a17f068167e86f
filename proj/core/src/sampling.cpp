#include "iclcbf/sampling.hpp"

#include "iclcbf/parallel.hpp"

namespace iclcbf {

TrajectoryBatch sample_rollouts(const Scenario& scenario, const GoalReference& policy,
                                int episodes, uint64_t stream_seed, int workers,
                                RolloutCounters* counters) {
  TrajectoryBatch batch;
  batch.trajectories.resize(episodes);
  parallel_for(episodes, workers, [&](int i) {
    Rng rng(indexed_seed(stream_seed, static_cast<uint64_t>(i)));
    auto [x0, goal] = scenario.sample_initial(rng);
    batch.trajectories[i] =
        rollout(scenario.system, bind_goal(policy, goal), x0, scenario.dt, scenario.max_steps,
                scenario.goal_predicate(goal), scenario.failure, counters);
  });
  return batch;
}

}  // namespace iclcbf
