#pragma once

// Entanglement of pure two-qubit states and the explicit separable relative
// density matrix whose relative entropy to |psi><psi| equals the entanglement
// of formation.

#include <mre/entropy.hpp>
#include <mre/states.hpp>

#include <array>

namespace mre {

/// Below this polarization norm a pure state is treated as maximally entangled
/// and the relative-matrix axes come from the correlation block instead of
/// xi_A / |xi_A|.
inline constexpr double kDegenerateXi = 1e-9;

/// R = q1 rho_A1 (x) rho_B1 + q2 rho_A2 (x) rho_B2 with
/// q1 = (1 - xi)/2, rho_X1 = (I - eta_X.sigma)/2 and rho_X2 = I - rho_X1.
struct RelativeMatrixParts {
  double q1 = 0.0;
  double q2 = 1.0;
  RVec3 eta_a = RVec3::UnitZ();
  RVec3 eta_b = RVec3::UnitZ();
  Mat2 rho_a1, rho_b1, rho_a2, rho_b2;
  /// True when the maximally-entangled (singular-vector) axis rule was used.
  bool degenerate = false;
  DensityMatrix matrix = DensityMatrix::maximally_mixed();
};

/// Overlaps omega_alpha = Tr(rho rho_alpha^R) with the four product
/// projectors built from +-eta_A, +-eta_B. For xi != 0 the order is
/// ((1+xi)/2, 0, 0, (1-xi)/2); for maximally entangled states (1/2, 1/2, 0, 0).
struct OmegaSpectrum {
  std::array<double, 4> omega{};
  double sum() const { return omega[0] + omega[1] + omega[2] + omega[3]; }
};

/// C = 2|ad - bc|.
double concurrence_pure(const PureState& psi);

/// Common norm of both polarized vectors, equal to sqrt(1 - 4|ad - bc|^2).
/// Taken from the reduced Bloch vectors, which stay accurate near xi = 0
/// where the square root amplifies rounding.
double xi_norm(const PureState& psi);

/// Entropy of either reduced state, H((1 + |xi|)/2).
Bits ef_pure(const PureState& psi);

/// Separable relative density matrix of a pure state.
///
/// For |xi| >= 1e-9 the axes are eta_A = xi_A/|xi_A| and eta_B = xi_B/|xi_B|.
/// For maximally entangled states every axis pair with eta_A^T a eta_B = 1
/// works; we take eta_A as the projection of z onto the leading left singular
/// subspace of the correlation block a_ij and eta_B = a^T eta_A / |a^T eta_A|.
/// On the four Bell states this gives eta_A = z and eta_B = +z for Phi+- and
/// -z for Psi+-. The rule for maximally entangled states outside the Bell
/// quadruple is our own extension.
RelativeMatrixParts relative_matrix_pure(const PureState& psi);

/// S(|psi><psi| || R(psi)) through the eigen-form of the relative entropy.
/// Equal to ef_pure(psi).
Bits mre_pure(const PureState& psi);

OmegaSpectrum omega_spectrum(const PureState& psi);

namespace detail {

/// Axes (eta_A, eta_B) and degenerate flag for a normalized amplitude vector.
struct Axes {
  RVec3 eta_a;
  RVec3 eta_b;
  double xi;
  bool degenerate;
};

Axes relative_axes(const Vec4& psi);

/// Relative matrix of a normalized amplitude vector, unvalidated.
Mat4 relative_matrix(const Vec4& psi);

/// Correlation block a_ij = <psi| sigma_i (x) sigma_j |psi>.
RMat3 correlation_block(const Vec4& psi);

}  // namespace detail

}  // namespace mre
