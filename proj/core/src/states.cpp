#include <mre/errors.hpp>
#include <mre/states.hpp>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>
#include <string>

namespace mre {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

template <typename M>
void check_density(const M& m, const char* what) {
  if (!m.allFinite()) throw NonPhysicalError(std::string(what) + ": non-finite entries");
  const double herm = hermiticity_defect(m);
  if (herm > DensityMatrix::kHermitianTolerance)
    throw NonPhysicalError(std::string(what) + ": not Hermitian (defect " + fmt(herm) + ")");
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > DensityMatrix::kTraceTolerance)
    throw NonPhysicalError(std::string(what) + ": trace " + fmt(tr) + " != 1");
  const M h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<M> es(h, Eigen::EigenvaluesOnly);
  const double least = es.eigenvalues()(0);
  if (least < DensityMatrix::kEigenvalueFloor)
    throw NonPhysicalError(std::string(what) + ": negative eigenvalue " + fmt(least));
}

}  // namespace

// ---------------------------------------------------------------- PureState

PureState::PureState(const Vec4& amplitudes) : amps_(amplitudes) {
  if (!amps_.allFinite()) throw NormalizationError("pure state has non-finite amplitudes");
  const double n2 = amps_.squaredNorm();
  if (std::abs(n2 - 1.0) > kNormTolerance)
    throw NormalizationError("pure state not normalized: squared norm " + fmt(n2));
}

PureState PureState::normalized(const Vec4& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw NormalizationError("cannot normalize a zero vector");
  return PureState(v / n);
}

PureState PureState::product(const Vec2& a, const Vec2& b) { return normalized(kron(a, b)); }

PureState PureState::basis(int index) {
  if (index < 0 || index > 3) throw InputError("basis index must be in 0..3");
  Vec4 v = Vec4::Zero();
  v(index) = 1.0;
  return PureState(v);
}

bool PureState::same_ray(const PureState& other, double tol) const {
  return (projector() - other.projector()).cwiseAbs().maxCoeff() <= tol;
}

const std::array<Vec4, 4>& bell_vectors() {
  static const std::array<Vec4, 4> bells = [] {
    const double s = 1.0 / std::sqrt(2.0);
    std::array<Vec4, 4> v;
    v[0] << s, 0, 0, s;
    v[1] << s, 0, 0, -s;
    v[2] << 0, s, s, 0;
    v[3] << 0, s, -s, 0;
    return v;
  }();
  return bells;
}

PureState bell_state(Bell which) { return PureState(bell_vectors()[static_cast<int>(which)]); }

// ------------------------------------------------------------ DensityMatrix

DensityMatrix::DensityMatrix(const Mat4& m) {
  check_density(m, "density matrix");
  m_ = 0.5 * (m + m.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed() { return DensityMatrix(Mat4::Identity() / 4.0); }

Eigen::Vector4d DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Mat4> es(m_, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

QubitDensity::QubitDensity(const Mat2& m) {
  check_density(m, "qubit density matrix");
  m_ = 0.5 * (m + m.adjoint());
}

Eigen::Vector2d QubitDensity::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Mat2> es(m_, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

PolarizedVector::PolarizedVector(const RVec3& v) : v_(v) {
  if (v_.norm() > 1.0 + kNormSlack)
    throw NonPhysicalError("polarized vector longer than 1: " + fmt(v_.norm()));
}

// ----------------------------------------------------------------- Ensemble

Ensemble::Ensemble(std::vector<EnsembleMember> members) : members_(std::move(members)) {
  if (members_.empty()) throw InputError("ensemble has no members");
  double total = 0.0;
  for (const auto& m : members_) {
    if (!(m.p > 0.0)) throw InputError("ensemble weight must be positive, got " + fmt(m.p));
    total += m.p;
  }
  if (std::abs(total - 1.0) > kSumTolerance)
    throw InputError("ensemble weights sum to " + fmt(total) + ", expected 1");
}

Ensemble Ensemble::from_subnormalized(const std::vector<Vec4>& vectors) {
  std::vector<EnsembleMember> out;
  out.reserve(vectors.size());
  double total = 0.0;
  for (const auto& v : vectors) {
    const double p = v.squaredNorm();
    if (p < kNegligibleWeight) continue;
    out.push_back({p, PureState(v / std::sqrt(p))});
    total += p;
  }
  if (out.empty()) throw InputError("all ensemble members have negligible weight");
  for (auto& m : out) m.p /= total;
  return Ensemble(std::move(out));
}

// --------------------------------------------------------------- operations

Support support(const DensityMatrix& rho, double cutoff) {
  Eigen::SelfAdjointEigenSolver<Mat4> es(rho.matrix());
  int rank = 0;
  for (int k = 0; k < 4; ++k)
    if (es.eigenvalues()(k) > cutoff) ++rank;
  Support s;
  s.values.resize(rank);
  s.vectors.resize(4, rank);
  // SelfAdjointEigenSolver sorts ascending; emit descending.
  for (int j = 0; j < rank; ++j) {
    s.values(j) = es.eigenvalues()(3 - j);
    s.vectors.col(j) = es.eigenvectors().col(3 - j);
  }
  return s;
}

DensityMatrix pure_to_density(const PureState& psi) { return DensityMatrix(psi.projector()); }

PauliCoefficients pauli_expand(const DensityMatrix& rho) {
  RMat4 a;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      a(mu, nu) = (rho.matrix() * pauli_product(mu, nu)).trace().real();
  return PauliCoefficients(a);
}

PauliCoefficients pauli_expand(const PureState& psi) {
  RMat4 a;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      a(mu, nu) = psi.amplitudes().dot(pauli_product(mu, nu) * psi.amplitudes()).real();
  return PauliCoefficients(a);
}

DensityMatrix pauli_reconstruct(const PauliCoefficients& c) {
  if (std::abs(c(0, 0) - 1.0) > 1e-12) throw InputError("Pauli table must have a_00 = 1");
  Mat4 m = Mat4::Zero();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) m += c(mu, nu) * pauli_product(mu, nu);
  return DensityMatrix(0.25 * m);
}

namespace {

Mat2 partial_trace(const Mat4& m, Party keep) {
  Mat2 r = Mat2::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        r(i, j) += keep == Party::A ? m(2 * i + k, 2 * j + k) : m(2 * k + i, 2 * k + j);
  return r;
}

}  // namespace

QubitDensity reduced(const DensityMatrix& rho, Party keep) {
  return QubitDensity(partial_trace(rho.matrix(), keep));
}

QubitDensity reduced(const PureState& psi, Party keep) {
  return QubitDensity(partial_trace(psi.projector(), keep));
}

RVec3 bloch_vector(const QubitDensity& rho) {
  const auto& m = rho.matrix();
  return RVec3{2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(), (m(0, 0) - m(1, 1)).real()};
}

PolarizedPair polarized_vectors(const DensityMatrix& rho) {
  const PauliCoefficients a = pauli_expand(rho);
  return {PolarizedVector(RVec3{a(1, 0), a(2, 0), a(3, 0)}),
          PolarizedVector(RVec3{a(0, 1), a(0, 2), a(0, 3)})};
}

PolarizedPair polarized_vectors(const PureState& psi) {
  return {PolarizedVector(bloch_vector(reduced(psi, Party::A))),
          PolarizedVector(bloch_vector(reduced(psi, Party::B)))};
}

double lemma_two_residual(const PureState& psi) {
  const PauliCoefficients a = pauli_expand(psi);
  const RVec3 xa{a(1, 0), a(2, 0), a(3, 0)};
  const RVec3 xb{a(0, 1), a(0, 2), a(0, 3)};
  const RMat3 corr = a.correlations();
  const RVec3 left = xa - corr * xb;
  const RVec3 right = corr.transpose() * xa - xb;
  return std::max(left.cwiseAbs().maxCoeff(), right.cwiseAbs().maxCoeff());
}

Ensemble hjw_ensemble(const DensityMatrix& rho, const Eigen::MatrixXcd& isometry) {
  const Support s = support(rho);
  const int r = s.rank();
  if (isometry.cols() != r)
    throw ParametrizationError("isometry has " + std::to_string(isometry.cols()) +
                               " columns, rank(rho) = " + std::to_string(r));
  if (isometry.rows() < r) throw ParametrizationError("isometry needs at least rank(rho) rows");
  const Eigen::MatrixXcd gram = isometry.adjoint() * isometry;
  const double defect = (gram - Eigen::MatrixXcd::Identity(r, r)).cwiseAbs().maxCoeff();
  if (defect > 1e-10)
    throw ParametrizationError("mixing matrix is not an isometry (defect " + fmt(defect) + ")");

  // Rows of U * diag(sqrt(lambda)) * E^T are the sub-normalized members.
  const Eigen::MatrixXcd weighted = s.vectors * s.values.cwiseSqrt().asDiagonal();
  std::vector<Vec4> members;
  members.reserve(isometry.rows());
  for (Eigen::Index i = 0; i < isometry.rows(); ++i)
    members.emplace_back(weighted * isometry.row(i).transpose());
  return Ensemble::from_subnormalized(members);
}

Mat4 ensemble_matrix(const Ensemble& e) {
  Mat4 m = Mat4::Zero();
  for (const auto& [p, psi] : e) m += p * psi.projector();
  return m;
}

DensityMatrix ensemble_to_density(const Ensemble& e) { return DensityMatrix(ensemble_matrix(e)); }

}  // namespace mre
