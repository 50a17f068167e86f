#pragma once

#include "iclcbf/config.hpp"
#include "iclcbf/scenario.hpp"

namespace iclcbf {

struct QuadrotorParams {
  double mass = 1.0;
  double gravity = 9.81;
  double linear_drag = 0.25;    // C_D^v
  double angular_drag = 0.02255;  // C_D^phi
  double inertia = 0.01;        // I_yy
  double arm_length = 0.3;      // l

  void validate() const;
  static QuadrotorParams from_config(const Config& cfg);
};

Scenario single_integrator_scenario();
Scenario inverted_pendulum_scenario();
Scenario dubins_car_scenario();
Scenario quadrotor_scenario(const QuadrotorParams& params = {});

// Scenario by CLI name, with hyperparameter overrides (delta, dt, max_steps,
// expert lookahead, quadrotor constants) taken from the config.
Scenario make_scenario(const std::string& name, const Config& overrides = {});
std::vector<std::string> scenario_names();

}  // namespace iclcbf
