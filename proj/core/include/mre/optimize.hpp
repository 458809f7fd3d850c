#pragma once

// Derivative-free local minimization used by the decomposition search and the
// relative-entropy oracle.

#include <Eigen/Core>
#include <functional>

namespace mre {

using Objective = std::function<double(const Eigen::VectorXd&)>;

struct NelderMeadOptions {
  /// Edge length of the initial axis-aligned simplex.
  double initial_step = 0.25;
  /// Stop when the spread of simplex values falls below this.
  double tol = 1e-8;
  int max_evaluations = 20000;
  /// Dimension-dependent coefficients (Gao and Han, 2012). They keep the
  /// simplex from collapsing in the 16-64 dimensional problems we solve.
  bool adaptive = true;
  /// After convergence, rebuild a fresh simplex around the best point (with a
  /// halved step) up to this many times while it keeps improving.
  int max_rebuilds = 6;
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

NelderMeadResult nelder_mead(const Objective& f, const Eigen::VectorXd& x0,
                             const NelderMeadOptions& options = {});

}  // namespace mre
