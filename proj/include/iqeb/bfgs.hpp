#pragma once

#include <Eigen/Dense>
#include <functional>

#include "iqeb/ansatz.hpp"

namespace iqeb {

struct OptimizerSettings {
  double gradient_norm_tolerance = 1e-8;
  double parameter_tolerance = 1e-10;
  int max_evaluations = 20000;
  double wolfe_c1 = 1e-4;
  double wolfe_c2 = 0.9;
};

struct MinimizeResult {
  Eigen::VectorXd theta;
  double value = 0.0;
  int evaluations = 0;
  int iterations = 0;
  bool converged = false;
  bool budget_exhausted = false;
};

/// f(x, grad_out) -> value; grad_out is resized/filled by the callee.
using Objective =
    std::function<double(const Eigen::VectorXd&, Eigen::VectorXd&)>;

/// BFGS with a strong-Wolfe line search.  Never returns a value above the
/// best evaluated point; on budget exhaustion returns the best found with
/// the flag set.
MinimizeResult bfgs_minimize(const Objective& f, Eigen::VectorXd theta0,
                             const OptimizerSettings& settings = {});

MinimizeResult minimize(const Ansatz& a, const Eigen::VectorXd& theta0,
                        const PauliSum& h,
                        const OptimizerSettings& settings = {});

}  // namespace iqeb
