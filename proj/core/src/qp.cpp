#include "iclcbf/qp.hpp"

#include <limits>
#include <stdexcept>

namespace iclcbf {

namespace {

constexpr double kBoxTol = 1e-9;
constexpr double kPlaneTol = 1e-12;

bool in_box(const Eigen::VectorXd& u, const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
            double tol = 0.0) {
  return (u.array() >= lo.array() - tol).all() && (u.array() <= hi.array() + tol).all();
}

}  // namespace

QpSolution solve_halfspace_box_qp(const HalfspaceBoxQp& qp) {
  const int m = static_cast<int>(qp.a.size());
  if (qp.u_ref.size() != m || qp.lower.size() != m || qp.upper.size() != m) {
    throw std::invalid_argument("halfspace-box qp dimension mismatch");
  }
  if ((qp.lower.array() > qp.upper.array()).any()) {
    throw std::invalid_argument("halfspace-box qp has an empty control box");
  }

  const Eigen::VectorXd& a = qp.a;
  const Eigen::VectorXd& r = qp.u_ref;

  // u_ref itself, returned bit-exactly so the filter stays inactive.
  if (in_box(r, qp.lower, qp.upper) && a.dot(r) + qp.b >= 0.0) return {r, true};

  // Feasibility via the maximizing vertex; ties on a_i = 0 follow u_ref.
  Eigen::VectorXd least_violating(m);
  for (int i = 0; i < m; ++i) {
    if (a(i) > 0.0) {
      least_violating(i) = qp.upper(i);
    } else if (a(i) < 0.0) {
      least_violating(i) = qp.lower(i);
    } else {
      least_violating(i) = std::min(std::max(r(i), qp.lower(i)), qp.upper(i));
    }
  }
  if (a.dot(least_violating) + qp.b < 0.0) return {least_violating, false};

  // Box projection of u_ref; optimal whenever it satisfies the halfspace.
  Eigen::VectorXd pbox = r.cwiseMax(qp.lower).cwiseMin(qp.upper);
  if (a.dot(pbox) + qp.b >= 0.0) return {pbox, true};

  // Hyperplane projection of u_ref; optimal whenever it lands in the box.
  const double aa_full = a.squaredNorm();
  if (aa_full > 0.0) {
    Eigen::VectorXd proj = r + ((-qp.b - a.dot(r)) / aa_full) * a;
    if (in_box(proj, qp.lower, qp.upper)) return {proj, true};
  }

  // Otherwise the halfspace is active at the optimum; enumerate which box
  // faces are active alongside it. Patterns assign each coordinate one of
  // {free, at lower, at upper}.
  int patterns = 1;
  for (int i = 0; i < m; ++i) patterns *= 3;

  double best_dist2 = std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_u;
  Eigen::VectorXd u(m);
  for (int p = 0; p < patterns; ++p) {
    int code = p;
    double c = -qp.b;
    double aa = 0.0, ar = 0.0;
    for (int i = 0; i < m; ++i) {
      const int s = code % 3;
      code /= 3;
      if (s == 1) {
        u(i) = qp.lower(i);
        c -= a(i) * u(i);
      } else if (s == 2) {
        u(i) = qp.upper(i);
        c -= a(i) * u(i);
      } else {
        u(i) = std::numeric_limits<double>::quiet_NaN();
        aa += a(i) * a(i);
        ar += a(i) * r(i);
      }
    }

    bool ok = true;
    code = p;
    if (aa > 0.0) {
      const double lambda = (c - ar) / aa;
      for (int i = 0; i < m; ++i) {
        const int s = code % 3;
        code /= 3;
        if (s != 0) continue;
        double ui = r(i) + lambda * a(i);
        if (ui < qp.lower(i) - kBoxTol || ui > qp.upper(i) + kBoxTol) {
          ok = false;
          break;
        }
        u(i) = std::min(std::max(ui, qp.lower(i)), qp.upper(i));
      }
    } else {
      // No free support of a: the fixed part alone must meet the plane.
      const double scale = std::max(1.0, std::abs(qp.b));
      if (std::abs(c) > kPlaneTol * scale) {
        ok = false;
      } else {
        for (int i = 0; i < m; ++i) {
          const int s = code % 3;
          code /= 3;
          if (s == 0) u(i) = std::min(std::max(r(i), qp.lower(i)), qp.upper(i));
        }
      }
    }
    if (!ok) continue;

    const double dist2 = (u - r).squaredNorm();
    if (dist2 < best_dist2) {
      best_dist2 = dist2;
      best_u = u;
    }
  }

  if (best_u.size() == m) return {best_u, true};
  // Feasible set is nonempty but every on-plane pattern was rejected by
  // tolerance; fall back to the maximizing vertex, which is feasible.
  return {least_violating, true};
}

}  // namespace iclcbf
