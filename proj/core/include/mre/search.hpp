#pragma once

// Numerical MRE of a mixed state: minimize S(rho || R^M(e)) over pure-state
// decompositions e. Decompositions with m members are generated from m x r
// isometries acting on the eigen-ensemble of rho (r = rank rho).

#include <mre/entropy.hpp>
#include <mre/states.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace mre {

struct MreSearchConfig {
  /// Random starting isometries, spread round-robin over sizes r..m_max.
  int restarts = 32;
  /// Largest ensemble size searched; 0 means 2 * rank.
  int m_max = 0;
  std::uint64_t seed = 0;
  /// Convergence tolerance on the objective for each local descent.
  double tol = 1e-8;
  /// Evaluation budget of one local descent; 0 picks 400 per real parameter.
  int max_evaluations = 0;
  /// Start one descent from Wootters' decomposition (product members for
  /// separable states, so those reach zero exactly).
  bool wootters_seed = true;
  /// Extra decompositions of rho to refine; any size is allowed.
  std::vector<Ensemble> warm_starts;
};

struct MreResult {
  Bits value;
  Ensemble best_ensemble;
  DensityMatrix best_relative_matrix;
  /// Local descents run (random restarts plus seeded starts).
  int restarts_used;
  /// Whether the descent that produced the best value met its tolerance.
  bool converged;
  long long evaluations;
};

MreResult mre_search(const DensityMatrix& rho, const MreSearchConfig& config = {});

/// Isometry U (m x rank) that hjw_ensemble maps to e. Throws
/// DecompositionError when e does not reproduce rho within 1e-9.
Eigen::MatrixXcd isometry_for(const DensityMatrix& rho, const Ensemble& e);

}  // namespace mre
