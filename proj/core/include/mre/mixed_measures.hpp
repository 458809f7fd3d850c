#pragma once

// Mixed-state quantities that do not involve a search: the total relative
// matrix of a decomposition, its relative entropy, Wootters' concurrence and
// entanglement of formation, and the partial-transpose test.

#include <mre/entropy.hpp>
#include <mre/pure_measures.hpp>
#include <mre/states.hpp>

#include <array>

namespace mre {

/// Largest entry-wise mismatch tolerated between an ensemble and the density
/// matrix it claims to decompose.
inline constexpr double kDecompositionTolerance = 1e-9;

/// R^M = sum_i p_i R(psi_i). Separable by construction.
DensityMatrix total_relative_matrix(const Ensemble& e);

/// S(rho || R^M(e)). Throws DecompositionError when e does not reproduce rho
/// within 1e-9. May return +infinity.
Bits mre_for_decomposition(const DensityMatrix& rho, const Ensemble& e);

/// Square roots of the eigenvalues of rho (Y(x)Y) rho* (Y(x)Y), descending.
std::array<double, 4> wootters_lambdas(const DensityMatrix& rho);

/// max(0, l1 - l2 - l3 - l4).
double wootters_concurrence(const DensityMatrix& rho);

/// H((1 + sqrt(1 - C^2))/2) with C the Wootters concurrence.
Bits wootters_ef(const DensityMatrix& rho);

/// Entanglement of formation of a pure state with concurrence c.
Bits ef_from_concurrence(double c);

/// Four-member decomposition from Wootters' construction. The
/// probability-weighted member concurrences add up to the concurrence of rho;
/// when that is zero every member is a product state.
Ensemble wootters_decomposition(const DensityMatrix& rho);

/// Partial transpose over party B.
Mat4 partial_transpose(const Mat4& m);

/// Least eigenvalue of the partial transpose >= -1e-9. For two qubits this is
/// equivalent to separability.
bool is_ppt(const DensityMatrix& rho);

/// Least eigenvalue of the partial transpose.
double ppt_margin(const DensityMatrix& rho);

}  // namespace mre
