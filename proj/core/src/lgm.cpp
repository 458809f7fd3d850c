#include <mre/errors.hpp>
#include <mre/lgm.hpp>
#include <mre/mixed_measures.hpp>
#include <mre/pure_measures.hpp>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace mre {

double completeness_defect(const std::vector<KrausPair>& pairs) {
  Mat4 sum = Mat4::Zero();
  for (const auto& [a, b] : pairs) sum += kron(Mat2(a.adjoint() * a), Mat2(b.adjoint() * b));
  return (sum - Mat4::Identity()).cwiseAbs().maxCoeff();
}

KrausSet::KrausSet(std::vector<KrausPair> pairs) : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw CompletenessError("Kraus set is empty");
  for (const auto& [a, b] : pairs_)
    if (!a.allFinite() || !b.allFinite()) throw CompletenessError("Kraus operator has non-finite entries");
  const double defect = completeness_defect(pairs_);
  if (defect > kCompletenessTolerance)
    throw CompletenessError("Kraus set is not complete (defect " + std::to_string(defect) + ")");
}

namespace {

bool proportional_to_identity(const Mat2& m) {
  const Mat2 g = m.adjoint() * m;
  const cplx mean = 0.5 * g.trace();
  return (g - mean * Mat2::Identity()).cwiseAbs().maxCoeff() <= 1e-9;
}

}  // namespace

bool KrausSet::proportional() const {
  for (const auto& [a, b] : pairs_)
    if (!proportional_to_identity(a) || !proportional_to_identity(b)) return false;
  return true;
}

PureBranch apply_pure(const KrausPair& pair, const PureState& psi) {
  const Vec4 out = pair.op() * psi.amplitudes();
  const double q = out.squaredNorm();
  if (!(q > kAnnihilatedBranch)) throw AnnihilatedBranchError("Kraus pair annihilates the state");
  return {q, PureState::normalized(out), out};
}

double xi_squared_after_lgm(const PureState& psi, const KrausPair& pair) {
  const double q = (pair.op() * psi.amplitudes()).squaredNorm();
  if (!(q > kAnnihilatedBranch)) throw AnnihilatedBranchError("Kraus pair annihilates the state");
  const double dets = std::norm(pair.a.determinant()) * std::norm(pair.b.determinant());
  return 1.0 - 4.0 * std::norm(psi.det()) * dets / (q * q);
}

MixedOutcome apply_mixed(const KrausSet& set, const DensityMatrix& rho) {
  Mat4 total = Mat4::Zero();
  std::vector<BranchOutcome> branches;
  for (std::size_t l = 0; l < set.size(); ++l) {
    const Mat4 k = set.pairs()[l].op();
    const Mat4 m = k * rho.matrix() * k.adjoint();
    total += m;
    const double q = m.trace().real();
    if (q > kAnnihilatedBranch) branches.push_back({l, q, DensityMatrix(m / q)});
  }
  return {DensityMatrix(total), std::move(branches)};
}

// ------------------------------------------------------------ random sets

namespace {

// Random complete single-party measurement with n operators.
std::vector<Mat2> random_measurement(Engine& rng, int n) {
  std::vector<Mat2> g(static_cast<std::size_t>(n));
  Mat2 s = Mat2::Zero();
  for (auto& m : g) {
    m = random_ginibre2(rng);
    s += m.adjoint() * m;
  }
  Eigen::SelfAdjointEigenSolver<Mat2> es(s);
  const Mat2 inv_sqrt = es.eigenvectors() * es.eigenvalues().cwiseInverse().cwiseSqrt().asDiagonal() *
                        es.eigenvectors().adjoint();
  for (auto& m : g) m = m * inv_sqrt;
  return g;
}

}  // namespace

KrausSet random_kraus_set(Engine& rng, int outcomes_a, int outcomes_b) {
  if (outcomes_a < 1 || outcomes_b < 1) throw InputError("measurement needs at least one outcome");
  std::vector<KrausPair> pairs;
  for (const Mat2& a : random_measurement(rng, outcomes_a))
    for (const Mat2& b : random_measurement(rng, outcomes_b)) pairs.push_back({a, b});
  return KrausSet(std::move(pairs));
}

KrausSet random_proportional_set(Engine& rng, int outcomes) {
  if (outcomes < 1) throw InputError("measurement needs at least one outcome");
  std::gamma_distribution<double> gamma(1.0, 1.0);
  std::vector<double> w(static_cast<std::size_t>(outcomes));
  double total = 0.0;
  for (double& x : w) total += (x = gamma(rng));
  std::vector<KrausPair> pairs;
  for (double x : w) {
    const Mat2 u = random_unitary2(rng);
    const Mat2 v = random_unitary2(rng);
    pairs.push_back({std::sqrt(x / total) * u, v});
  }
  return KrausSet(std::move(pairs));
}

KrausSet random_unitary_set(Engine& rng) {
  const Mat2 u = random_unitary2(rng);
  const Mat2 v = random_unitary2(rng);
  return KrausSet({{u, v}});
}

// ---------------------------------------------------------- monotonicity

PureMonotoneReport check_monotone_pure(const PureState& psi, const KrausSet& set) {
  PureMonotoneReport rep{};
  const double xi = xi_norm(psi);
  rep.xi2_before = xi * xi;
  rep.mre_before = mre_pure(psi);
  rep.worst_branch_gap = std::numeric_limits<double>::infinity();
  rep.mre_after_average = 0.0;
  for (const KrausPair& pair : set) {
    const Vec4 out = pair.op() * psi.amplitudes();
    const double q = out.squaredNorm();
    if (!(q > kAnnihilatedBranch)) continue;
    const PureState branch = PureState::normalized(out);
    const double x = xi_norm(branch);
    rep.q.push_back(q);
    rep.xi2_after.push_back(x * x);
    const double gap = x * x - rep.xi2_before;
    rep.worst_branch_gap = std::min(rep.worst_branch_gap, gap);
    if (gap < -1e-9) ++rep.branch_violations;
    rep.mre_after_average += q * mre_pure(branch);
  }
  rep.average_violation = rep.mre_after_average > rep.mre_before + 1e-9;
  return rep;
}

namespace {

// Member with the same relative-matrix axes but polarization epsilon: the
// Schmidt weights of a maximally entangled state are moved to (1 +- eps)/2
// along the basis picked by the axis rule.
Vec4 shifted_member(const Vec4& psi, double eps) {
  const detail::Axes ax = detail::relative_axes(psi);
  if (!ax.degenerate) return psi;
  Eigen::SelfAdjointEigenSolver<Mat2> es(bloch_projector(ax.eta_a));
  const Vec2 a0 = es.eigenvectors().col(1);  // eigenvalue 1
  const Vec2 a1 = es.eigenvectors().col(0);
  Mat2 m;
  m << psi(0), psi(1), psi(2), psi(3);
  const Vec2 u0 = m.transpose() * a0.conjugate();
  const Vec2 u1 = m.transpose() * a1.conjugate();
  const Vec4 out = std::sqrt(1.0 + eps) * kron(a0, u0) + std::sqrt(1.0 - eps) * kron(a1, u1);
  return out.normalized();
}

Bits transported_value(const DensityMatrix& after, const Ensemble& best, const KrausSet& set,
                       double eps) {
  Mat4 r = Mat4::Zero();
  for (const KrausPair& pair : set) {
    const Mat4 k = pair.op();
    for (const auto& [p, psi] : best) {
      const Vec4 moved = k * shifted_member(psi.amplitudes(), eps);
      const double q = moved.squaredNorm();
      if (!(q > kAnnihilatedBranch)) continue;
      r += p * q * detail::relative_matrix(moved / std::sqrt(q));
    }
  }
  return relative_entropy_lemma1(after, eigensystem_of(r / r.trace().real()));
}

}  // namespace

MixedMonotoneReport check_monotone_mixed(const DensityMatrix& rho, const KrausSet& set,
                                         const MixedMonotoneConfig& config) {
  if (!set.proportional())
    throw RestrictionError("Kraus pairs must satisfy A^dag A = alpha I and B^dag B = beta I");
  const MreResult before = mre_search(rho, config.search);
  const DensityMatrix after = apply_mixed(set, rho).total;

  std::vector<EnsembleMember> moved;
  bool shifted = false;
  for (const auto& [p, psi] : before.best_ensemble) {
    shifted = shifted || detail::relative_axes(psi.amplitudes()).degenerate;
    for (const KrausPair& pair : set) {
      const Vec4 out = pair.op() * psi.amplitudes();
      const double q = out.squaredNorm();
      if (q > kAnnihilatedBranch) moved.push_back({p * q, PureState::normalized(out)});
    }
  }
  double total = 0.0;
  for (const auto& m : moved) total += m.p;
  for (auto& m : moved) m.p /= total;

  MreSearchConfig cfg = config.search;
  cfg.warm_starts.push_back(Ensemble(std::move(moved)));
  const MreResult result = mre_search(after, cfg);

  MixedMonotoneReport rep{};
  rep.mre_before = before.value;
  rep.mre_after_search = result.value;
  rep.shifted = shifted;
  rep.transported_eps = transported_value(after, before.best_ensemble, set, config.epsilon);
  rep.transported_half_eps = transported_value(after, before.best_ensemble, set, 0.5 * config.epsilon);
  rep.transported_limit = std::max(0.0, 2.0 * rep.transported_half_eps - rep.transported_eps);
  rep.shift_stable = std::abs(rep.transported_eps - rep.transported_half_eps) <= 1e-6;
  rep.mre_after = shifted ? std::min(result.value, rep.transported_limit) : result.value;
  return rep;
}

}  // namespace mre
