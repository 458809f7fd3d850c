#pragma once

// Upper estimate of the relative entropy of entanglement: minimize S(rho||sigma)
// over explicit mixtures of at most 16 product pure states.

#include <mre/entropy.hpp>
#include <mre/search.hpp>
#include <mre/states.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace mre {

/// Bloch angles of one product term w |alpha><alpha| (x) |beta><beta|.
struct ProductTerm {
  double w;
  double theta_a, phi_a;
  double theta_b, phi_b;
};

class SeparableCandidate {
 public:
  static constexpr std::size_t kMaxTerms = 16;

  /// Throws InputError for more than 16 terms, negative weights, or weights
  /// not summing to 1 (1e-9).
  explicit SeparableCandidate(std::vector<ProductTerm> terms);

  /// Product decomposition of a separable two-qubit density matrix. Throws
  /// DomainError when sigma is entangled (Wootters concurrence > 1e-9).
  static SeparableCandidate from_separable(const DensityMatrix& sigma);

  const std::vector<ProductTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  Mat4 matrix() const;

 private:
  std::vector<ProductTerm> terms_;
};

struct ReConfig {
  /// Product terms in the random candidates.
  int terms = 8;
  int restarts = 64;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  /// Evaluation budget per local descent; 0 picks 300 per real parameter.
  int max_evaluations = 0;
  /// Separable state to refine first, typically an MRE relative matrix.
  std::optional<DensityMatrix> warm_start;
};

struct ReEstimate {
  Bits value;
  SeparableCandidate best;
  int restarts_used;
  bool converged;
};

/// Never exceeds S(rho || warm_start) when a warm start is given. Starts also
/// from Wootters' product decomposition of rho when rho is separable, so such
/// states reach zero.
ReEstimate re_estimate(const DensityMatrix& rho, const ReConfig& config = {});

struct BoundChainConfig {
  MreSearchConfig search;
  ReConfig re;
  /// Allowed excess of RE over MRE and of MRE over EF.
  double tol = 1e-4;
};

struct BoundChainReport {
  Bits re;
  Bits mre;
  Bits ef;
  bool re_below_mre;
  bool mre_below_ef;
  bool mre_converged;
  bool re_converged;

  bool holds() const { return re_below_mre && mre_below_ef; }
};

/// re_estimate <= mre_search + tol <= wootters_ef + 2 tol. The RE search is
/// warm-started from the relative matrix of the best MRE decomposition.
BoundChainReport verify_bound_chain(const DensityMatrix& rho, const BoundChainConfig& config = {});

}  // namespace mre
