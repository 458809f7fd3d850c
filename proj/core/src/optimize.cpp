#include <mre/optimize.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace mre {

namespace {

struct Coefficients {
  double reflect, expand, contract, shrink;
};

Coefficients coefficients(Eigen::Index n, bool adaptive) {
  if (!adaptive || n < 2) return {1.0, 2.0, 0.5, 0.5};
  const double d = static_cast<double>(n);
  return {1.0, 1.0 + 2.0 / d, 0.75 - 1.0 / (2.0 * d), 1.0 - 1.0 / d};
}

// One Nelder-Mead descent from an axis-aligned simplex around x0.
NelderMeadResult descend(const Objective& f, const Eigen::VectorXd& x0, double step,
                         const NelderMeadOptions& opt, int budget) {
  const Eigen::Index n = x0.size();
  const Coefficients c = coefficients(n, opt.adaptive);
  std::vector<Eigen::VectorXd> pts(n + 1, x0);
  std::vector<double> vals(n + 1);
  int evals = 0;
  auto eval = [&](const Eigen::VectorXd& x) {
    ++evals;
    const double v = f(x);
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };
  vals[0] = eval(pts[0]);
  for (Eigen::Index i = 0; i < n; ++i) {
    pts[i + 1](i) += step;
    vals[i + 1] = eval(pts[i + 1]);
  }

  std::vector<Eigen::Index> order(n + 1);
  bool converged = false;
  Eigen::VectorXd centroid(n);
  while (evals < budget) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return vals[a] < vals[b]; });
    const Eigen::Index best = order.front();
    const Eigen::Index worst = order.back();
    const Eigen::Index second = order[n - 1];
    if (vals[worst] - vals[best] <= opt.tol) {
      converged = true;
      break;
    }

    centroid.setZero();
    for (Eigen::Index i = 0; i <= n; ++i)
      if (i != worst) centroid += pts[i];
    centroid /= static_cast<double>(n);

    const Eigen::VectorXd xr = centroid + c.reflect * (centroid - pts[worst]);
    const double fr = eval(xr);
    if (fr < vals[best]) {
      const Eigen::VectorXd xe = centroid + c.expand * (xr - centroid);
      const double fe = eval(xe);
      if (fe < fr) {
        pts[worst] = xe;
        vals[worst] = fe;
      } else {
        pts[worst] = xr;
        vals[worst] = fr;
      }
      continue;
    }
    if (fr < vals[second]) {
      pts[worst] = xr;
      vals[worst] = fr;
      continue;
    }
    const bool outside = fr < vals[worst];
    const Eigen::VectorXd xc = outside ? Eigen::VectorXd(centroid + c.contract * (xr - centroid))
                                       : Eigen::VectorXd(centroid + c.contract * (pts[worst] - centroid));
    const double fc = eval(xc);
    if (outside ? fc <= fr : fc < vals[worst]) {
      pts[worst] = xc;
      vals[worst] = fc;
      continue;
    }
    for (Eigen::Index i = 0; i <= n; ++i) {
      if (i == best) continue;
      pts[i] = pts[best] + c.shrink * (pts[i] - pts[best]);
      vals[i] = eval(pts[i]);
    }
  }

  const auto it = std::min_element(vals.begin(), vals.end());
  NelderMeadResult out;
  out.x = pts[static_cast<std::size_t>(it - vals.begin())];
  out.value = *it;
  out.evaluations = evals;
  out.converged = converged;
  return out;
}

}  // namespace

NelderMeadResult nelder_mead(const Objective& f, const Eigen::VectorXd& x0,
                             const NelderMeadOptions& options) {
  NelderMeadResult best = descend(f, x0, options.initial_step, options, options.max_evaluations);
  double step = options.initial_step;
  for (int k = 0; k < options.max_rebuilds && best.converged; ++k) {
    const int left = options.max_evaluations - best.evaluations;
    if (left <= static_cast<int>(x0.size()) + 1) break;
    step *= 0.5;
    NelderMeadResult next = descend(f, best.x, step, options, left);
    next.evaluations += best.evaluations;
    const double gain = best.value - next.value;
    if (next.value < best.value) best = next;
    else best.evaluations = next.evaluations;
    if (!(gain > options.tol)) break;
  }
  return best;
}

}  // namespace mre
