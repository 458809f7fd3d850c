#pragma once

// Two-qubit state representations: pure states, density matrices, the Pauli
// (Fano) expansion, reduced states and pure-state ensembles.
//
// Conventions: the computational basis is ordered |00>, |01>, |10>, |11> with
// party A as the left (most significant) qubit. Pauli indices run 0..3 as
// I, X, Y, Z and a_{mu nu} = Tr(rho sigma_mu (x) sigma_nu).

#include <mre/linalg.hpp>

#include <utility>
#include <vector>

namespace mre {

/// Normalized two-qubit state a|00> + b|01> + c|10> + d|11>.
///
/// The global phase is not fixed; compare states with same_ray(), which looks
/// at the projector rather than the amplitude tuple.
class PureState {
 public:
  static constexpr double kNormTolerance = 1e-12;

  /// Throws NormalizationError unless |a|^2+|b|^2+|c|^2+|d|^2 = 1 within 1e-12.
  explicit PureState(const Vec4& amplitudes);

  /// Rescales a non-zero vector onto the unit sphere.
  static PureState normalized(const Vec4& v);
  static PureState product(const Vec2& a, const Vec2& b);
  static PureState basis(int index);

  const Vec4& amplitudes() const { return amps_; }
  cplx a() const { return amps_(0); }
  cplx b() const { return amps_(1); }
  cplx c() const { return amps_(2); }
  cplx d() const { return amps_(3); }

  /// ad - bc; vanishes exactly on product states.
  cplx det() const { return amps_(0) * amps_(3) - amps_(1) * amps_(2); }

  Mat4 projector() const { return amps_ * amps_.adjoint(); }

  bool same_ray(const PureState& other, double tol = 1e-10) const;

 private:
  Vec4 amps_;
};

enum class Bell { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

/// Phi+- = (|00> +- |11>)/sqrt2, Psi+- = (|01> +- |10>)/sqrt2.
PureState bell_state(Bell which);

/// The four Bell states in the order Phi+, Phi-, Psi+, Psi-.
const std::array<Vec4, 4>& bell_vectors();

/// Validated 4x4 density matrix: Hermitian (1e-10), unit trace (1e-10) and
/// least eigenvalue >= -1e-9. The stored matrix is the Hermitian part of the
/// input.
class DensityMatrix {
 public:
  static constexpr double kHermitianTolerance = 1e-10;
  static constexpr double kTraceTolerance = 1e-10;
  static constexpr double kEigenvalueFloor = -1e-9;

  explicit DensityMatrix(const Mat4& m);

  static DensityMatrix maximally_mixed();

  const Mat4& matrix() const { return m_; }
  cplx operator()(int i, int j) const { return m_(i, j); }

  /// Ascending eigenvalues.
  Eigen::Vector4d eigenvalues() const;
  double purity() const { return (m_ * m_).trace().real(); }

 private:
  Mat4 m_;
};

/// Validated single-qubit density matrix (reduced states).
class QubitDensity {
 public:
  explicit QubitDensity(const Mat2& m);

  const Mat2& matrix() const { return m_; }
  cplx operator()(int i, int j) const { return m_(i, j); }
  Eigen::Vector2d eigenvalues() const;

 private:
  Mat2 m_;
};

/// Real table a_{mu nu} with rho = (1/4) sum a_{mu nu} sigma_mu (x) sigma_nu.
class PauliCoefficients {
 public:
  PauliCoefficients() : a_(RMat4::Zero()) { a_(0, 0) = 1.0; }
  explicit PauliCoefficients(const RMat4& table) : a_(table) {}

  double operator()(int mu, int nu) const { return a_(mu, nu); }
  double& operator()(int mu, int nu) { return a_(mu, nu); }
  const RMat4& table() const { return a_; }

  /// The 3x3 correlation block a_{ij}, i,j = 1..3.
  RMat3 correlations() const { return a_.block<3, 3>(1, 1); }

  /// (1/4) sum_{mu nu} a_{mu nu}^2, equal to Tr(rho^2).
  double purity() const { return 0.25 * a_.squaredNorm(); }

 private:
  RMat4 a_;
};

/// Bloch ("polarized") vector of a reduced single-qubit state.
class PolarizedVector {
 public:
  static constexpr double kNormSlack = 1e-10;

  PolarizedVector() : v_(RVec3::Zero()) {}
  /// Throws NonPhysicalError when |v| > 1 + 1e-10.
  explicit PolarizedVector(const RVec3& v);

  const RVec3& components() const { return v_; }
  double operator[](int i) const { return v_(i); }
  double norm() const { return v_.norm(); }

 private:
  RVec3 v_;
};

struct PolarizedPair {
  PolarizedVector a;
  PolarizedVector b;
};

enum class Party { A, B };

struct EnsembleMember {
  double p;
  PureState psi;
};

/// Probability-weighted pure-state decomposition {(p_i, psi_i)}.
class Ensemble {
 public:
  static constexpr double kSumTolerance = 1e-12;
  /// Members lighter than this are dropped by from_subnormalized().
  static constexpr double kNegligibleWeight = 1e-12;

  /// Throws InputError unless every p_i > 0 and sum p_i = 1 within 1e-12.
  explicit Ensemble(std::vector<EnsembleMember> members);

  /// Builds an ensemble from sub-normalized vectors |psi~_i> with
  /// p_i = <psi~_i|psi~_i>. Members with p_i < 1e-12 are dropped and the
  /// remaining weights renormalized to sum to one.
  static Ensemble from_subnormalized(const std::vector<Vec4>& vectors);

  const std::vector<EnsembleMember>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

 private:
  std::vector<EnsembleMember> members_;
};

/// Eigenpairs of a density matrix restricted to its support, eigenvalues in
/// descending order.
struct Support {
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;  // 4 x rank, orthonormal columns
  int rank() const { return static_cast<int>(values.size()); }
};

/// Eigenvalues <= cutoff are treated as zero.
Support support(const DensityMatrix& rho, double cutoff = 1e-12);

DensityMatrix pure_to_density(const PureState& psi);

PauliCoefficients pauli_expand(const DensityMatrix& rho);
PauliCoefficients pauli_expand(const PureState& psi);

/// Inverse of pauli_expand. Throws InputError when a_00 != 1 and
/// NonPhysicalError when the table does not describe a positive operator.
DensityMatrix pauli_reconstruct(const PauliCoefficients& c);

QubitDensity reduced(const DensityMatrix& rho, Party keep);
QubitDensity reduced(const PureState& psi, Party keep);

/// xi_A^i = a_{i0}, xi_B^j = a_{0j}.
PolarizedPair polarized_vectors(const DensityMatrix& rho);
PolarizedPair polarized_vectors(const PureState& psi);

/// Bloch vector of a single-qubit state.
RVec3 bloch_vector(const QubitDensity& rho);

/// Largest violation of xi_A^i = sum_j a_ij xi_B^j and sum_i xi_A^i a_ij =
/// xi_B^j over all components.
double lemma_two_residual(const PureState& psi);

/// Members |psi~_i> = sum_k U_ik sqrt(lambda_k) |e_k> built from the
/// eigen-ensemble of rho. U must be m x rank(rho) with orthonormal columns
/// (1e-10); otherwise ParametrizationError.
Ensemble hjw_ensemble(const DensityMatrix& rho, const Eigen::MatrixXcd& isometry);

/// sum_i p_i |psi_i><psi_i|.
DensityMatrix ensemble_to_density(const Ensemble& e);
Mat4 ensemble_matrix(const Ensemble& e);

}  // namespace mre
