#pragma once

// Closed forms for three families of mixed states: Bell-diagonal mixtures,
// Werner states and the rank-2 "departure" states G|Psi-><Psi-| + (1-G)|i><i|.
//
// The entangled-regime formulas (b_max >= 1/2, F >= 1/2) throw RegimeError
// outside that regime instead of extrapolating.

#include <mre/entropy.hpp>
#include <mre/states.hpp>

#include <array>
#include <optional>

namespace mre {

/// Weights (b1, b2, b3, b4) of Phi+, Phi-, Psi+, Psi-.
class BellMixture {
 public:
  explicit BellMixture(const std::array<double, 4>& weights);

  double operator[](int k) const { return b_[static_cast<std::size_t>(k)]; }
  const std::array<double, 4>& weights() const { return b_; }
  double b_max() const;
  /// Index of the largest weight (lowest index on ties).
  int dominant() const;
  bool entangled() const { return b_max() > 0.5; }

 private:
  std::array<double, 4> b_;
};

DensityMatrix bell_mixture_state(const BellMixture& b);

/// Eight equal-weight members
///   sqrt(b1)|Phi+> + (-1)^x sqrt(b2)|Phi-> + (-1)^y sqrt(b3)|Psi+> + (-1)^z sqrt(b4)|Psi->
/// with a factor i on the terms selected by the dominant weight: Psi- when
/// b1 dominates, Psi+ for b2, Phi- for b3, and all three non-Phi+ terms for b4.
/// Requires b_max >= 1/2.
Ensemble bell_mixture_mpsd(const BellMixture& b);

/// Closed-form total relative matrix of bell_mixture_mpsd(b).
DensityMatrix bell_mixture_relative_matrix(const BellMixture& b);

/// 1 + b log2 b + (1-b) log2(1-b) = 1 - H(b), for b_max >= 1/2.
Bits bell_mixture_mre_closed(double b_max);

/// H((1 + 2 sqrt(b(1-b)))/2), for b_max >= 1/2.
Bits bell_mixture_ef_closed(double b_max);

/// F|Psi-><Psi-| + (1-F)/3 (|Phi+><Phi+| + |Phi-><Phi-| + |Psi+><Psi+|).
DensityMatrix werner_state(double f);
BellMixture werner_weights(double f);
Bits werner_mre_closed(double f);
Bits werner_ef_closed(double f);

/// B_i = G|Psi-><Psi-| + (1-G)|i><i| with |i> in {|00>, |01>, |10>, |11>}
/// for index 1..4.
struct DepartureFamily {
  int index;
  double g;

  DepartureFamily(int i, double weight);
};

DensityMatrix departure_state(const DepartureFamily& fam);

/// Two equal-weight members sqrt(l1)|e1> +- sqrt(l2)|e2> from the eigen-ensemble
/// of B_i. For i = 1, 4 the eigenvectors are |i> and |Psi-> themselves
/// (l1 = 1-G, l2 = G). For i = 2, 3 they are the real eigenvectors in
/// span{|i>, |Psi->}, ordered by descending eigenvalue.
Ensemble departure_mpsd(const DepartureFamily& fam);

/// Closed-form total relative matrix of departure_mpsd(fam).
DensityMatrix departure_relative_matrix(const DepartureFamily& fam);

/// Closed-form MRE. Families 1 and 4 use the three-term logarithmic
/// expression with the second and third lines added; families 2 and 3 use the
/// sqrt(1 - 2G(1-G)) expression.
Bits departure_mre_closed(const DepartureFamily& fam);

/// Family 1/4 curve computed as S(B_i || departure_relative_matrix(fam)).
Bits departure_mre_numeric(const DepartureFamily& fam);

/// H((1 + sqrt(1-G^2))/2), the entanglement of formation of families 1 and 4.
Bits departure_ef_closed(double g);

/// Polarization norms |xi(+)|, |xi(-)| of the two departure_mpsd members.
std::array<double, 2> departure_member_xi(const DepartureFamily& fam);

/// Printed closed form for xi(+-) of families 2 and 3,
///   (G(2 - 5G + 4G^2) +- 2(1-G) sqrt(2G(1-G)(1-2G+2G^2))) / (1 - 2G + 2G^2).
/// It does not match the members' actual polarization and can leave [0, 1];
/// kept only so the discrepancy can be reported.
std::array<double, 2> departure_xi_printed(double g);

/// Average reduced entropy (H((1+xi+)/2) + H((1+xi-)/2))/2 of the two members,
/// with xi taken from the members directly. Families 2 and 3 only.
Bits departure_avg_reduced_entropy(const DepartureFamily& fam);

/// Bell weights of rho when it is diagonal in the Bell basis (entries within
/// tol), otherwise nullopt.
std::optional<BellMixture> as_bell_mixture(const DensityMatrix& rho, double tol = 1e-10);

/// Departure family of rho when it equals some B_i within tol. For G = 1
/// every index matches and family 1 is returned.
std::optional<DepartureFamily> as_departure(const DensityMatrix& rho, double tol = 1e-10);

}  // namespace mre
