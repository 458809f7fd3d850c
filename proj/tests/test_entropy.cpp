#include <mre/entropy.hpp>
#include <mre/errors.hpp>
#include <mre/random.hpp>

#include "test_util.hpp"

#include <limits>

namespace mre {
namespace {

using test::density;
using test::diag;
using test::ket;

// H(0.75) to 30 digits (mpmath).
constexpr double kH075 = 0.811278124459132863909695792039;

TEST(BinaryEntropy, Values) {
  EXPECT_DOUBLE_EQ(binary_entropy(0.5), 1.0);
  EXPECT_EQ(binary_entropy(0.0), 0.0);
  EXPECT_EQ(binary_entropy(1.0), 0.0);
  EXPECT_NEAR(binary_entropy(0.75), kH075, 1e-15);
  EXPECT_NEAR(binary_entropy(0.25), kH075, 1e-15);
}

TEST(BinaryEntropy, ZeroIsNeverNegativeZero) { EXPECT_FALSE(std::signbit(binary_entropy(1.0))); }

TEST(BinaryEntropy, DomainIsTheUnitIntervalWithSlack) {
  EXPECT_THROW(binary_entropy(-1e-9), DomainError);
  EXPECT_THROW(binary_entropy(1.0 + 1e-9), DomainError);
  EXPECT_NO_THROW(binary_entropy(1.0 + 1e-13));
  EXPECT_THROW(binary_entropy(std::numeric_limits<double>::quiet_NaN()), DomainError);
}

TEST(VonNeumann, Examples) {
  EXPECT_NEAR(von_neumann(density(ket(0.6, 0, 0, 0.8))), 0.0, 1e-12);
  EXPECT_NEAR(von_neumann(DensityMatrix::maximally_mixed()), 2.0, 1e-15);
  Mat2 r = Mat2::Zero();
  r(0, 0) = 0.75;
  r(1, 1) = 0.25;
  EXPECT_NEAR(von_neumann(QubitDensity(r)), kH075, 1e-15);
}

TEST(RelativeEntropyDirect, SelfIsZero) {
  Engine rng(21);
  for (int k = 0; k < 20; ++k) {
    const DensityMatrix rho = random_density(rng, 1 + k % 4);
    EXPECT_NEAR(relative_entropy_direct(rho, rho), 0.0, 1e-10);
  }
}

TEST(RelativeEntropyDirect, BellStateAgainstItsRelativeMatrix) {
  const DensityMatrix r(diag(0.5, 0, 0, 0.5));
  EXPECT_NEAR(relative_entropy_direct(density(bell_state(Bell::PhiPlus)), r), 1.0, 1e-12);
}

TEST(RelativeEntropyDirect, PureAgainstMaximallyMixedIsTwo) {
  EXPECT_NEAR(relative_entropy_direct(DensityMatrix(diag(1, 0, 0, 0)), DensityMatrix::maximally_mixed()), 2.0,
              1e-14);
}

TEST(RelativeEntropyDirect, SupportMismatchIsInfinite) {
  const DensityMatrix rho = density(bell_state(Bell::PhiPlus));
  EXPECT_TRUE(std::isinf(relative_entropy_direct(rho, DensityMatrix(diag(1, 0, 0, 0)))));
  EXPECT_TRUE(std::isinf(relative_entropy_direct(rho, DensityMatrix(diag(0, 0.5, 0.5, 0)))));
}

TEST(RelativeEntropyDirect, AgreesWithEigenvalueFormulaForCommutingPairs) {
  // Diagonal pairs reduce to the classical Kullback-Leibler divergence.
  const double p[4] = {0.1, 0.2, 0.3, 0.4}, q[4] = {0.4, 0.3, 0.2, 0.1};
  double kl = 0.0;
  for (int i = 0; i < 4; ++i) kl += p[i] * std::log2(p[i] / q[i]);
  EXPECT_NEAR(relative_entropy_direct(DensityMatrix(diag(p[0], p[1], p[2], p[3])),
                                      DensityMatrix(diag(q[0], q[1], q[2], q[3]))),
              kl, 1e-14);
}

TEST(RelativeEntropyLemma1, PureSelfIsZero) {
  const DensityMatrix rho = density(ket(0.6, 0, 0.8, 0));
  EXPECT_NEAR(relative_entropy_lemma1(rho, eigensystem_of(rho.matrix())), 0.0, 1e-12);
}

TEST(RelativeEntropyLemma1, PhiMinusWithHalfHalfSpectrumIsOne) {
  // Eigensystem {1/2, 1/2, 0, 0} on |00>, |11>, |01>, |10>.
  Eigensystem sys{{{0.5, Vec4::Unit(0)}, {0.5, Vec4::Unit(3)}, {0.0, Vec4::Unit(1)}, {0.0, Vec4::Unit(2)}}};
  EXPECT_NEAR(relative_entropy_lemma1(density(bell_state(Bell::PhiMinus)), sys), 1.0, 1e-15);
}

TEST(RelativeEntropyLemma1, RejectsNonOrthonormalEigensystems) {
  Eigensystem sys{{{0.5, Vec4::Unit(0)}, {0.5, Vec4::Unit(0)}, {0.0, Vec4::Unit(1)}, {0.0, Vec4::Unit(2)}}};
  EXPECT_THROW(relative_entropy_lemma1(DensityMatrix::maximally_mixed(), sys), InputError);
}

TEST(RelativeEntropyLemma1, InfiniteOnZeroEigenvalueOverlap) {
  Eigensystem sys{{{1.0, Vec4::Unit(0)}, {0.0, Vec4::Unit(3)}, {0.0, Vec4::Unit(1)}, {0.0, Vec4::Unit(2)}}};
  EXPECT_TRUE(std::isinf(relative_entropy_lemma1(density(bell_state(Bell::PhiPlus)), sys)));
}

TEST(RelativeEntropyLemma1, MatchesDirectOnRandomPairs) {
  Engine rng(22);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const DensityMatrix rho = random_density(rng, 1 + k % 4);
    const DensityMatrix sigma = random_density(rng, 4);
    worst = std::max(worst, std::abs(relative_entropy_lemma1(rho, eigensystem_of(sigma.matrix())) -
                                     relative_entropy_direct(rho, sigma)));
  }
  EXPECT_LT(worst, 1e-9);
}

TEST(RelativeEntropy, KleinInequality) {
  Engine rng(23);
  for (int k = 0; k < 300; ++k) {
    const DensityMatrix rho = random_density(rng, 1 + k % 4);
    const DensityMatrix sigma = random_density(rng, 4);
    EXPECT_GE(relative_entropy_direct(rho, sigma), 0.0);
    EXPECT_GT(relative_entropy_direct(rho, sigma), 1e-9);  // rho != sigma almost surely
  }
}

TEST(RelativeEntropy, JointConvexity) {
  Engine rng(24);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    const double p = unit(rng);
    const DensityMatrix r0 = random_density(rng, 2), r1 = random_density(rng, 3);
    const DensityMatrix s0 = random_density(rng, 4), s1 = random_density(rng, 4);
    const DensityMatrix r(p * r0.matrix() + (1 - p) * r1.matrix());
    const DensityMatrix s(p * s0.matrix() + (1 - p) * s1.matrix());
    EXPECT_LE(relative_entropy_direct(r, s),
              p * relative_entropy_direct(r0, s0) + (1 - p) * relative_entropy_direct(r1, s1) + 1e-9);
  }
}

TEST(RelativeEntropy, MonotoneUnderPartialTrace) {
  Engine rng(25);
  for (int k = 0; k < 200; ++k) {
    const DensityMatrix rho = random_density(rng, 1 + k % 4);
    const DensityMatrix sigma = random_density(rng, 4);
    // Embed the reduced states as rho_A (x) I/2 so the 4x4 evaluator applies;
    // the appended maximally mixed factor cancels.
    const Mat2 half = 0.5 * Mat2::Identity();
    const DensityMatrix ra(kron(reduced(rho, Party::A).matrix(), half));
    const DensityMatrix sa(kron(reduced(sigma, Party::A).matrix(), half));
    EXPECT_LE(relative_entropy_direct(ra, sa), relative_entropy_direct(rho, sigma) + 1e-9);
  }
}

}  // namespace
}  // namespace mre
