#pragma once

#include "iclcbf/system_model.hpp"

namespace iclcbf {

// One fourth-order Runge-Kutta step with the control held constant over dt.
// Throws IntegrationError when the result is not finite.
Eigen::VectorXd rk4_step(const SystemModel& system, const Eigen::VectorXd& x,
                         const Eigen::VectorXd& u, double dt);

}  // namespace iclcbf
