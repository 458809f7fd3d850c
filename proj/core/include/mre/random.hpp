#pragma once

// Seeded samplers for states, isometries and local operations. Every sampler
// draws from a caller-owned engine, so results are reproducible per seed on a
// given standard library.

#include <mre/states.hpp>

#include <random>

namespace mre {

using Engine = std::mt19937_64;

/// Haar-random pure state (normalized complex Gaussian vector).
PureState random_pure_state(Engine& rng);

/// Haar-random single-qubit state vector.
Vec2 random_qubit(Engine& rng);

/// Random density matrix of the given rank from the induced (Ginibre) measure.
DensityMatrix random_density(Engine& rng, int rank = 4);

/// Random separable state: a convex mixture of `terms` random product states.
DensityMatrix random_separable(Engine& rng, int terms = 4);

/// Bell-diagonal weights drawn uniformly from the probability simplex.
std::array<double, 4> random_simplex4(Engine& rng);

/// m x r matrix with orthonormal columns, Haar distributed.
Eigen::MatrixXcd random_isometry(Engine& rng, int m, int r);

/// Haar-random 2x2 unitary.
Mat2 random_unitary2(Engine& rng);

/// Complex Ginibre 2x2 matrix with unit-variance entries.
Mat2 random_ginibre2(Engine& rng);

/// Orthonormalizes the columns of x in place by modified Gram-Schmidt.
/// Returns false when a column is (numerically) dependent on the previous ones.
bool gram_schmidt(Eigen::MatrixXcd& x);

}  // namespace mre
