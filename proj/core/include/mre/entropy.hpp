#pragma once

// Entropy functionals. All logarithms are base 2, so a maximally entangled
// pair of qubits carries exactly one unit of entanglement.

#include <mre/states.hpp>

#include <limits>
#include <vector>

namespace mre {

/// Entropy in bits. Relative entropies may be +infinity.
using Bits = double;

inline constexpr Bits kInfiniteEntropy = std::numeric_limits<double>::infinity();

/// Eigenvalues at or below this are exact zeros in entropy sums (0 log 0 = 0).
inline constexpr double kZeroEigenvalue = 1e-12;

/// Overlap with the null space of sigma above this makes S(rho||sigma) infinite.
inline constexpr double kSupportMismatch = 1e-9;

/// -x log2 x - (1-x) log2 (1-x). Throws DomainError for x outside [0,1] by
/// more than 1e-12.
Bits binary_entropy(double x);

/// Shannon entropy of a probability vector, zero entries skipped.
Bits shannon_entropy(const Eigen::VectorXd& p);

Bits von_neumann(const DensityMatrix& rho);
Bits von_neumann(const QubitDensity& rho);

/// Tr(rho log rho - rho log sigma), evaluated in the eigenbases of both
/// operators. Infinite when rho has weight > 1e-9 on the null space of sigma.
Bits relative_entropy_direct(const DensityMatrix& rho, const DensityMatrix& sigma);

/// One eigenpair (lambda_alpha, |v_alpha>) of a relative density matrix.
struct EigenPair {
  double value;
  Vec4 vector;
};

/// Complete orthonormal eigensystem; eigensystem_of() builds one from a matrix.
using Eigensystem = std::vector<EigenPair>;

Eigensystem eigensystem_of(const Mat4& sigma);

/// -S(rho) - sum_alpha log2(lambda_alpha) <v_alpha|rho|v_alpha>, floored at 0.
/// Terms with overlap <= 1e-12 are skipped; overlap > 1e-9 on a zero
/// eigenvalue gives +infinity. Throws InputError unless the eigensystem is
/// complete and orthonormal (1e-9).
Bits relative_entropy_lemma1(const DensityMatrix& rho, const Eigensystem& sigma);

namespace detail {

/// -sum_alpha log2(lambda_alpha) <v_alpha|rho|v_alpha> for an unvalidated
/// Hermitian sigma; the cross-entropy half of S(rho||sigma).
double cross_entropy(const Mat4& rho, const Mat4& sigma);

}  // namespace detail

}  // namespace mre
