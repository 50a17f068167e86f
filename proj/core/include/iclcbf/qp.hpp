#pragma once

#include <Eigen/Dense>

namespace iclcbf {

// minimize ||u - u_ref||_2  subject to  a.u + b >= 0,  lower <= u <= upper.
struct HalfspaceBoxQp {
  Eigen::VectorXd a;
  double b = 0.0;
  Eigen::VectorXd u_ref;
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;
};

struct QpSolution {
  Eigen::VectorXd u;
  bool feasible = false;
};

// Exact solution by active-set enumeration, intended for control dimension
// m <= 3. Fast paths: u_ref itself when feasible (returned exactly, so the
// filter is truly inactive), then the hyperplane projection when it lands in
// the box. When no box point satisfies the halfspace, returns the
// least-violating point (argmax of a.u, ties toward clamped u_ref) with
// feasible = false.
QpSolution solve_halfspace_box_qp(const HalfspaceBoxQp& qp);

}  // namespace iclcbf
