#include "iclcbf/scenarios.hpp"

namespace iclcbf {

std::vector<std::string> scenario_names() {
  return {"single_integrator", "inverted_pendulum", "dubins_car", "quadrotor"};
}

Scenario make_scenario(const std::string& name, const Config& cfg) {
  Scenario s;
  if (name == "single_integrator") {
    s = single_integrator_scenario();
  } else if (name == "inverted_pendulum") {
    s = inverted_pendulum_scenario();
  } else if (name == "dubins_car") {
    s = dubins_car_scenario();
  } else if (name == "quadrotor") {
    s = quadrotor_scenario(QuadrotorParams::from_config(cfg));
  } else {
    std::string valid;
    for (const auto& n : scenario_names()) valid += " " + n;
    throw ConfigError("unknown scenario '" + name + "'; valid names:" + valid);
  }

  s.delta = cfg.get_double("scenario.delta", s.delta);
  s.max_steps = static_cast<int>(cfg.get_int("scenario.max_steps", s.max_steps));
  if (cfg.has("lcbf.oracle")) {
    const std::string oracle = cfg.get_string("lcbf.oracle", "");
    if (oracle == "gt") {
      s.lcbf_oracle = LcbfOracle::gt_sign;
    } else if (oracle == "lookahead") {
      s.lcbf_oracle = LcbfOracle::lookahead_check;
    } else if (oracle == "none") {
      s.lcbf_oracle = LcbfOracle::none;
    } else {
      throw ConfigError("lcbf.oracle must be one of gt, lookahead, none");
    }
  }
  s.expert.alpha = cfg.get_double("expert.alpha", s.expert.alpha);
  s.expert.horizon = static_cast<int>(cfg.get_int("expert.horizon", s.expert.horizon));
  s.expert.continuation =
      static_cast<int>(cfg.get_int("expert.continuation", s.expert.continuation));
  if (s.dt <= 0 || s.max_steps <= 0) throw ConfigError("scenario timing must be positive");
  if (s.delta < 0.0 || s.delta > 1.0) throw ConfigError("scenario.delta must lie in [0,1]");
  return s;
}

}  // namespace iclcbf
