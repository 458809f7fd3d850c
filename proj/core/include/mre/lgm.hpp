#pragma once

// Local general measurements with classical communication: product Kraus
// pairs (A, B) applied as (A (x) B) rho (A (x) B)^dag, plus the monotonicity
// checks for pure and mixed inputs.

#include <mre/entropy.hpp>
#include <mre/random.hpp>
#include <mre/search.hpp>
#include <mre/states.hpp>

#include <vector>

namespace mre {

/// Branches with probability at or below this are treated as annihilated.
inline constexpr double kAnnihilatedBranch = 1e-14;

struct KrausPair {
  Mat2 a;
  Mat2 b;

  Mat4 op() const { return kron(a, b); }
};

/// Product Kraus operators with sum_l A_l^dag A_l (x) B_l^dag B_l = I.
class KrausSet {
 public:
  static constexpr double kCompletenessTolerance = 1e-10;

  /// Throws CompletenessError when the completeness defect exceeds 1e-10.
  explicit KrausSet(std::vector<KrausPair> pairs);

  const std::vector<KrausPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

  /// True when every pair has A^dag A and B^dag B proportional to I (1e-9).
  bool proportional() const;

 private:
  std::vector<KrausPair> pairs_;
};

/// Largest entry of |sum_l A_l^dag A_l (x) B_l^dag B_l - I|.
double completeness_defect(const std::vector<KrausPair>& pairs);

/// The branch of a pure state under one Kraus pair.
struct PureBranch {
  double q;
  PureState state;
  /// (a'', b'', c'', d'') before normalization.
  Vec4 unnormalized;
};

/// Throws AnnihilatedBranchError when q <= 1e-14.
PureBranch apply_pure(const KrausPair& pair, const PureState& psi);

/// |xi''|^2 = 1 - 4|ad - bc|^2 |det A|^2 |det B|^2 / q^2.
double xi_squared_after_lgm(const PureState& psi, const KrausPair& pair);

struct BranchOutcome {
  std::size_t index;
  double q;
  DensityMatrix state;
};

struct MixedOutcome {
  DensityMatrix total;
  /// Non-annihilated branches only; their q add up to 1 up to the dropped mass.
  std::vector<BranchOutcome> branches;
};

MixedOutcome apply_mixed(const KrausSet& set, const DensityMatrix& rho);

/// Kraus set of one-way LGM + CC: A measures with `outcomes_a` random
/// operators, then B applies an independent random complete measurement with
/// `outcomes_b` operators for each A outcome.
KrausSet random_kraus_set(Engine& rng, int outcomes_a = 2, int outcomes_b = 2);

/// Pairs (sqrt(w_l) U_l, V_l) with Haar unitaries and random weights w_l.
KrausSet random_proportional_set(Engine& rng, int outcomes = 3);

/// Single pair of Haar unitaries.
KrausSet random_unitary_set(Engine& rng);

struct PureMonotoneReport {
  double xi2_before;
  std::vector<double> q;
  std::vector<double> xi2_after;
  /// min over branches of xi''^2 - xi^2; negative values are violations.
  double worst_branch_gap;
  int branch_violations;
  Bits mre_before;
  Bits mre_after_average;
  bool average_violation;

  bool ok() const { return branch_violations == 0 && !average_violation; }
};

/// Per-branch xi''^2 >= xi^2 - 1e-9 and sum_l q_l MRE(branch) <= MRE(psi) + 1e-9.
/// Violations are reported, not thrown.
PureMonotoneReport check_monotone_pure(const PureState& psi, const KrausSet& set);

struct MixedMonotoneConfig {
  /// Budget and seed shared by both searches.
  MreSearchConfig search;
  double epsilon = 1e-6;
  /// Allowed excess of MRE(rho'') over MRE(rho).
  double tol = 1e-4;
};

struct MixedMonotoneReport {
  Bits mre_before;
  /// Search value for rho'', warm-started from the transported decomposition.
  Bits mre_after_search;
  /// S(rho'' || sum_l (A (x) B) R^M (A (x) B)^dag / q_l weights), the
  /// transported relative matrix, evaluated at shift epsilon and epsilon/2
  /// and extrapolated to zero shift.
  Bits transported_eps;
  Bits transported_half_eps;
  Bits transported_limit;
  /// Whether the best decomposition of rho had a maximally entangled member,
  /// so that the shifted transport was needed.
  bool shifted;
  /// |transported_eps - transported_half_eps| <= 1e-6.
  bool shift_stable;
  /// min(mre_after_search, transported_limit if shifted).
  Bits mre_after;

  bool ok(double tol) const { return mre_after <= mre_before + tol; }
};

/// MRE(rho'') <= MRE(rho) for sets whose pairs have A^dag A and B^dag B
/// proportional to the identity. Throws RestrictionError otherwise.
MixedMonotoneReport check_monotone_mixed(const DensityMatrix& rho, const KrausSet& set,
                                         const MixedMonotoneConfig& config = {});

}  // namespace mre
