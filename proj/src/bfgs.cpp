#include "iqeb/bfgs.hpp"

#include <cmath>
#include <limits>

namespace iqeb {

namespace {

struct Evaluator {
  const Objective& f;
  int count = 0;
  int budget;
  // Best point seen across every evaluation, line-search trials included.
  Eigen::VectorXd best_x;
  double best_value = std::numeric_limits<double>::infinity();

  double operator()(const Eigen::VectorXd& x, Eigen::VectorXd& grad) {
    const double value = f(x, grad);
    ++count;
    if (value < best_value) {
      best_value = value;
      best_x = x;
    }
    return value;
  }
  bool exhausted() const { return count >= budget; }
};

// Cubic interpolation of a minimizer in [lo, hi] from values/derivatives at
// the endpoints; falls back to bisection when the fit is degenerate.
double interpolate(double a, double fa, double da, double b, double fb,
                   double db) {
  const double d1 = da + db - 3.0 * (fa - fb) / (a - b);
  const double disc = d1 * d1 - da * db;
  if (disc >= 0.0) {
    const double d2 = std::copysign(std::sqrt(disc), b - a);
    const double t = b - (b - a) * (db + d2 - d1) / (db - da + 2.0 * d2);
    const double lo = std::min(a, b), hi = std::max(a, b);
    const double margin = 0.1 * (hi - lo);
    if (std::isfinite(t) && t > lo + margin && t < hi - margin) return t;
  }
  return 0.5 * (a + b);
}

}  // namespace

MinimizeResult bfgs_minimize(const Objective& f, Eigen::VectorXd theta0,
                             const OptimizerSettings& settings) {
  if (!(0.0 < settings.wolfe_c1 && settings.wolfe_c1 < settings.wolfe_c2 &&
        settings.wolfe_c2 < 1.0))
    throw std::invalid_argument("need 0 < c1 < c2 < 1");
  const auto n = theta0.size();
  MinimizeResult result;
  Evaluator eval{f, 0, settings.max_evaluations};

  if (n == 0) {
    Eigen::VectorXd dummy;
    result.theta = theta0;
    result.value = f(theta0, dummy);
    result.evaluations = 1;
    result.converged = true;
    return result;
  }

  Eigen::VectorXd x = std::move(theta0);
  Eigen::VectorXd g(n);
  double fx = eval(x, g);
  Eigen::MatrixXd h_inv = Eigen::MatrixXd::Identity(n, n);

  const double c1 = settings.wolfe_c1;
  const double c2 = settings.wolfe_c2;

  while (!eval.exhausted()) {
    if (g.norm() < settings.gradient_norm_tolerance) {
      result.converged = true;
      break;
    }
    ++result.iterations;

    Eigen::VectorXd p = -(h_inv * g);
    double dphi0 = g.dot(p);
    if (dphi0 >= 0.0) {  // not a descent direction: reset to steepest descent
      h_inv.setIdentity();
      p = -g;
      dphi0 = g.dot(p);
    }

    // Strong-Wolfe line search (bracket + zoom).
    const double phi0 = fx;
    double alpha_prev = 0.0, phi_prev = phi0, dphi_prev = dphi0;
    double alpha = 1.0;
    double alpha_lo = -1.0, alpha_hi = -1.0;
    double phi_lo = 0.0, dphi_lo = 0.0, phi_hi = 0.0, dphi_hi = 0.0;
    bool found = false, bracketed = false;
    double accepted_f = 0.0;
    Eigen::VectorXd x_new(n), g_new(n);

    for (int ls = 0; ls < 30 && !eval.exhausted(); ++ls) {
      x_new = x + alpha * p;
      const double phi = eval(x_new, g_new);
      const double dphi = g_new.dot(p);
      if (phi > phi0 + c1 * alpha * dphi0 || (ls > 0 && phi >= phi_prev)) {
        alpha_lo = alpha_prev; phi_lo = phi_prev; dphi_lo = dphi_prev;
        alpha_hi = alpha; phi_hi = phi; dphi_hi = dphi;
        bracketed = true;
        break;
      }
      if (std::abs(dphi) <= -c2 * dphi0) {
        found = true;
        accepted_f = phi;
        break;
      }
      if (dphi >= 0.0) {
        alpha_lo = alpha; phi_lo = phi; dphi_lo = dphi;
        alpha_hi = alpha_prev; phi_hi = phi_prev; dphi_hi = dphi_prev;
        bracketed = true;
        break;
      }
      alpha_prev = alpha; phi_prev = phi; dphi_prev = dphi;
      alpha *= 2.0;
      if (alpha > 1e6) break;
    }

    if (bracketed && !found) {
      for (int zoom = 0; zoom < 40 && !eval.exhausted(); ++zoom) {
        alpha = interpolate(alpha_lo, phi_lo, dphi_lo, alpha_hi, phi_hi,
                            dphi_hi);
        x_new = x + alpha * p;
        const double phi = eval(x_new, g_new);
        const double dphi = g_new.dot(p);
        if (phi > phi0 + c1 * alpha * dphi0 || phi >= phi_lo) {
          alpha_hi = alpha; phi_hi = phi; dphi_hi = dphi;
        } else {
          if (std::abs(dphi) <= -c2 * dphi0) {
            found = true;
            accepted_f = phi;
            break;
          }
          if (dphi * (alpha_hi - alpha_lo) >= 0.0) {
            alpha_hi = alpha_lo; phi_hi = phi_lo; dphi_hi = dphi_lo;
          }
          alpha_lo = alpha; phi_lo = phi; dphi_lo = dphi;
        }
        if (std::abs(alpha_hi - alpha_lo) * p.norm() <
            settings.parameter_tolerance)
          break;
      }
    }

    if (!found) {
      // No Wolfe point within budget; take the best strict decrease seen,
      // otherwise stop at the current point.
      if (eval.best_value < fx - 1e-15 && eval.best_x.size() == n) {
        x = eval.best_x;
        fx = eval(x, g);  // re-evaluate to refresh the gradient
        h_inv.setIdentity();
        continue;
      }
      break;
    }

    const Eigen::VectorXd s = alpha * p;
    const Eigen::VectorXd y = g_new - g;
    x = x_new;
    fx = accepted_f;
    g = g_new;

    if (s.lpNorm<Eigen::Infinity>() < settings.parameter_tolerance) {
      result.converged = true;
      break;
    }

    const double ys = y.dot(s);
    if (ys > 1e-14 * y.norm() * s.norm()) {
      // Inverse update: H <- (I - s y^T / ys) H (I - y s^T / ys) + s s^T / ys.
      const Eigen::VectorXd hy = h_inv * y;
      const double yhy = y.dot(hy);
      h_inv += ((ys + yhy) / (ys * ys)) * (s * s.transpose()) -
               (hy * s.transpose() + s * hy.transpose()) / ys;
    } else {
      h_inv.setIdentity();
    }
  }

  result.budget_exhausted = eval.exhausted() && !result.converged;
  if (eval.best_value < fx) {
    result.theta = eval.best_x;
    result.value = eval.best_value;
  } else {
    result.theta = x;
    result.value = fx;
  }
  result.evaluations = eval.count;
  return result;
}

MinimizeResult minimize(const Ansatz& a, const Eigen::VectorXd& theta0,
                        const PauliSum& h, const OptimizerSettings& settings) {
  const Objective objective = [&](const Eigen::VectorXd& x,
                                  Eigen::VectorXd& grad) {
    return energy_and_gradient(a, x, h, grad);
  };
  return bfgs_minimize(objective, theta0, settings);
}

}  // namespace iqeb
