#include <mre/errors.hpp>
#include <mre/mixed_measures.hpp>
#include <mre/optimize.hpp>
#include <mre/pure_measures.hpp>
#include <mre/random.hpp>
#include <mre/search.hpp>

#include <cmath>
#include <limits>

namespace mre {

namespace {

Eigen::VectorXd flatten(const Eigen::MatrixXcd& u) {
  Eigen::VectorXd x(2 * u.size());
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    x(2 * i) = u(i).real();
    x(2 * i + 1) = u(i).imag();
  }
  return x;
}

Eigen::MatrixXcd unflatten(const Eigen::VectorXd& x, Eigen::Index m, Eigen::Index r) {
  Eigen::MatrixXcd u(m, r);
  for (Eigen::Index i = 0; i < u.size(); ++i) u(i) = cplx(x(2 * i), x(2 * i + 1));
  return u;
}

// S(rho || R^M) as a function of the (not yet orthonormal) mixing matrix.
class DecompositionObjective {
 public:
  explicit DecompositionObjective(const DensityMatrix& rho)
      : rho_(rho.matrix()), entropy_(von_neumann(rho)), support_(support(rho)) {
    weighted_ = support_.vectors * support_.values.cwiseSqrt().asDiagonal();
  }

  int rank() const { return support_.rank(); }

  double operator()(const Eigen::MatrixXcd& raw) const {
    Eigen::MatrixXcd u = raw;
    if (!gram_schmidt(u)) return std::numeric_limits<double>::infinity();
    Mat4 r = Mat4::Zero();
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
      const Vec4 member = weighted_ * u.row(i).transpose();
      const double p = member.squaredNorm();
      if (p < Ensemble::kNegligibleWeight) continue;
      r += p * detail::relative_matrix(member / std::sqrt(p));
    }
    return std::max(0.0, -entropy_ + detail::cross_entropy(rho_, r));
  }

 private:
  Mat4 rho_;
  double entropy_;
  Support support_;
  Eigen::MatrixXcd weighted_;
};

}  // namespace

Eigen::MatrixXcd isometry_for(const DensityMatrix& rho, const Ensemble& e) {
  const double mismatch = (ensemble_matrix(e) - rho.matrix()).cwiseAbs().maxCoeff();
  if (mismatch > kDecompositionTolerance)
    throw DecompositionError("warm-start ensemble does not reproduce the state");
  const Support s = support(rho);
  Eigen::MatrixXcd u(static_cast<Eigen::Index>(e.size()), s.rank());
  Eigen::Index i = 0;
  for (const auto& [p, psi] : e) {
    for (int k = 0; k < s.rank(); ++k)
      u(i, k) = std::sqrt(p) * s.vectors.col(k).dot(psi.amplitudes()) / std::sqrt(s.values(k));
    ++i;
  }
  gram_schmidt(u);
  return u;
}

MreResult mre_search(const DensityMatrix& rho, const MreSearchConfig& config) {
  if (config.restarts < 0) throw InputError("restarts must be non-negative");
  if (!(config.tol > 0.0)) throw InputError("tolerance must be positive");
  const DecompositionObjective objective(rho);
  const int r = objective.rank();
  const int m_max = config.m_max > 0 ? config.m_max : 2 * r;
  if (m_max < r) throw InputError("m_max must be at least rank(rho) = " + std::to_string(r));

  Engine rng(config.seed);
  Eigen::MatrixXcd best_u = Eigen::MatrixXcd::Identity(r, r);
  double best_value = objective(best_u);
  bool best_converged = true;
  int descents = 0;
  long long evaluations = 1;

  auto refine = [&](const Eigen::MatrixXcd& start, double step) {
    const Eigen::Index m = start.rows();
    auto wrapped = [&objective, m, r](const Eigen::VectorXd& x) {
      return objective(unflatten(x, m, r));
    };
    NelderMeadOptions opt;
    opt.tol = config.tol;
    opt.initial_step = step;
    const int dims = static_cast<int>(2 * m * r);
    opt.max_evaluations = config.max_evaluations > 0 ? config.max_evaluations : 400 * dims;
    const NelderMeadResult res = nelder_mead(wrapped, flatten(start), opt);
    ++descents;
    evaluations += res.evaluations;
    if (res.value < best_value) {
      best_value = res.value;
      best_u = unflatten(res.x, m, r);
      gram_schmidt(best_u);
      best_converged = res.converged;
    }
  };

  if (config.wootters_seed) refine(isometry_for(rho, wootters_decomposition(rho)), 0.1);
  for (const Ensemble& e : config.warm_starts) refine(isometry_for(rho, e), 0.05);
  for (int j = 0; j < config.restarts; ++j) {
    const int m = r + j % (m_max - r + 1);
    refine(random_isometry(rng, m, r), 0.25);
  }

  Ensemble best = hjw_ensemble(rho, best_u);
  const DensityMatrix relative = total_relative_matrix(best);
  const Bits value = relative_entropy_lemma1(rho, eigensystem_of(relative.matrix()));
  return MreResult{value, std::move(best), relative, descents, best_converged, evaluations};
}

}  // namespace mre
