#include "iclcbf/integrate.hpp"

#include <sstream>

namespace iclcbf {

Eigen::VectorXd rk4_step(const SystemModel& system, const Eigen::VectorXd& x,
                         const Eigen::VectorXd& u, double dt) {
  if (dt <= 0.0) throw std::invalid_argument("rk4_step requires dt > 0");
  const Eigen::VectorXd k1 = system.derivative(x, u);
  const Eigen::VectorXd k2 = system.derivative(x + 0.5 * dt * k1, u);
  const Eigen::VectorXd k3 = system.derivative(x + 0.5 * dt * k2, u);
  const Eigen::VectorXd k4 = system.derivative(x + dt * k3, u);
  Eigen::VectorXd next = x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  if (!next.allFinite()) {
    std::ostringstream msg;
    msg << "integration diverged for system '" << system.name << "' at state ["
        << x.transpose() << "]";
    throw IntegrationError(msg.str());
  }
  return next;
}

}  // namespace iclcbf
