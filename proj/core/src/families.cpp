#include <mre/errors.hpp>
#include <mre/families.hpp>
#include <mre/mixed_measures.hpp>
#include <mre/pure_measures.hpp>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

namespace mre {

namespace {

constexpr double kRegimeSlack = 1e-12;

// a log2 b with the 0 log 0 = 0 convention.
double xlog(double a, double b) { return a == 0.0 ? 0.0 : a * std::log2(b); }

void require_probability(double x, const char* what) {
  if (!(x >= -kRegimeSlack && x <= 1.0 + kRegimeSlack))
    throw DomainError(std::string(what) + " must lie in [0, 1]");
}

void require_entangled(double b_max, const char* what) {
  require_probability(b_max, what);
  if (b_max < 0.5 - kRegimeSlack)
    throw RegimeError(std::string(what) + " < 1/2: the closed form holds only in the entangled regime");
}

Mat4 bell_projector(int k) {
  const Vec4& v = bell_vectors()[static_cast<std::size_t>(k)];
  return v * v.adjoint();
}

}  // namespace

// ------------------------------------------------------------- Bell mixtures

BellMixture::BellMixture(const std::array<double, 4>& weights) : b_(weights) {
  double total = 0.0;
  for (double x : b_) {
    if (!(x >= 0.0)) throw DomainError("Bell-mixture weights must be non-negative");
    total += x;
  }
  if (std::abs(total - 1.0) > 1e-12) throw DomainError("Bell-mixture weights must sum to 1");
}

double BellMixture::b_max() const { return *std::max_element(b_.begin(), b_.end()); }

int BellMixture::dominant() const {
  return static_cast<int>(std::max_element(b_.begin(), b_.end()) - b_.begin());
}

DensityMatrix bell_mixture_state(const BellMixture& b) {
  Mat4 m = Mat4::Zero();
  for (int k = 0; k < 4; ++k) m += b[k] * bell_projector(k);
  return DensityMatrix(m);
}

Ensemble bell_mixture_mpsd(const BellMixture& b) {
  require_entangled(b.b_max(), "b_max");
  // Which of the Phi-, Psi+, Psi- terms carries the factor i, per dominant index.
  static constexpr bool kImaginary[4][3] = {
      {false, false, true}, {false, true, false}, {true, false, false}, {true, true, true}};
  const int k = b.dominant();
  const auto& bell = bell_vectors();
  std::vector<EnsembleMember> members;
  members.reserve(8);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) {
        const int signs[3] = {x, y, z};
        Vec4 psi = std::sqrt(b[0]) * bell[0];
        for (int t = 0; t < 3; ++t) {
          cplx coeff = std::sqrt(b[t + 1]) * (signs[t] ? -1.0 : 1.0);
          if (kImaginary[k][t]) coeff *= cplx(0.0, 1.0);
          psi += coeff * bell[static_cast<std::size_t>(t + 1)];
        }
        members.push_back({0.125, PureState::normalized(psi)});
      }
  return Ensemble(std::move(members));
}

DensityMatrix bell_mixture_relative_matrix(const BellMixture& b) {
  require_entangled(b.b_max(), "b_max");
  const int k = b.dominant();
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  if (k <= 1) {
    // Phi-type dominant: r from the other Phi weight, t = (b3 - b4)/rest.
    const double other = b[1 - k];
    const double rest = 1.0 - b[k];
    // A pure Bell state has no rest; its relative matrix keeps only the
    // dominant diagonal pair, which r = 1, t = 0 reproduces.
    const bool pure = rest < 1e-14;
    const double r = pure ? 1.0 : other / rest;
    const double t = pure ? 0.0 : (b[2] - b[3]) / rest;
    const double corner = k == 0 ? 1.0 - r : -1.0 + r;
    m << 1 + r, 0, 0, corner, 0, 1 - r, t, 0, 0, t, 1 - r, 0, corner, 0, 0, 1 + r;
  } else {
    const double other = b[5 - k];
    const double rest = 1.0 - b[k];
    const bool pure = rest < 1e-14;
    const double r = pure ? 1.0 : other / rest;
    const double t = pure ? 0.0 : (b[0] - b[1]) / rest;
    const double middle = k == 2 ? 1.0 - r : -1.0 + r;
    m << 1 - r, 0, 0, t, 0, 1 + r, middle, 0, 0, middle, 1 + r, 0, t, 0, 0, 1 - r;
  }
  return DensityMatrix(0.25 * m.cast<cplx>());
}

Bits bell_mixture_mre_closed(double b_max) {
  require_entangled(b_max, "b_max");
  return 1.0 - binary_entropy(std::clamp(b_max, 0.0, 1.0));
}

Bits bell_mixture_ef_closed(double b_max) {
  require_entangled(b_max, "b_max");
  const double b = std::clamp(b_max, 0.0, 1.0);
  return binary_entropy(0.5 * (1.0 + 2.0 * std::sqrt(b * (1.0 - b))));
}

// ------------------------------------------------------------------- Werner

BellMixture werner_weights(double f) {
  require_probability(f, "F");
  f = std::clamp(f, 0.0, 1.0);
  const double rest = (1.0 - f) / 3.0;
  return BellMixture({rest, rest, rest, 1.0 - 3.0 * rest});
}

DensityMatrix werner_state(double f) { return bell_mixture_state(werner_weights(f)); }

Bits werner_mre_closed(double f) {
  require_entangled(f, "F");
  return bell_mixture_mre_closed(f);
}

Bits werner_ef_closed(double f) {
  require_entangled(f, "F");
  return bell_mixture_ef_closed(f);
}

// ---------------------------------------------------------------- departure

DepartureFamily::DepartureFamily(int i, double weight) : index(i), g(weight) {
  if (i < 1 || i > 4) throw DomainError("departure family index must be 1..4");
  require_probability(weight, "G");
  g = std::clamp(weight, 0.0, 1.0);
}

DensityMatrix departure_state(const DepartureFamily& fam) {
  const Vec4 i = PureState::basis(fam.index - 1).amplitudes();
  return DensityMatrix(fam.g * bell_projector(3) + (1.0 - fam.g) * i * i.adjoint());
}

namespace {

struct TwoLevel {
  double l1, l2;
  Vec4 e1, e2;
};

TwoLevel departure_eigen(const DepartureFamily& fam) {
  const Vec4& psi_minus = bell_vectors()[3];
  const Vec4 basis = PureState::basis(fam.index - 1).amplitudes();
  if (fam.index == 1 || fam.index == 4) return {1.0 - fam.g, fam.g, basis, psi_minus};
  // Families 2 and 3 live in span{|01>, |10>}.
  const Vec4 u = PureState::basis(1).amplitudes();
  const Vec4 w = PureState::basis(2).amplitudes();
  const double g = fam.g;
  Eigen::Matrix2d block;
  if (fam.index == 2)
    block << 1.0 - g / 2, -g / 2, -g / 2, g / 2;
  else
    block << g / 2, -g / 2, -g / 2, 1.0 - g / 2;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(block);
  const Eigen::Vector2d hi = es.eigenvectors().col(1);
  const Eigen::Vector2d lo = es.eigenvectors().col(0);
  return {std::max(0.0, es.eigenvalues()(1)), std::max(0.0, es.eigenvalues()(0)),
          hi(0) * u + hi(1) * w, lo(0) * u + lo(1) * w};
}

}  // namespace

Ensemble departure_mpsd(const DepartureFamily& fam) {
  const TwoLevel t = departure_eigen(fam);
  const Vec4 plus = std::sqrt(t.l1) * t.e1 + std::sqrt(t.l2) * t.e2;
  const Vec4 minus = std::sqrt(t.l1) * t.e1 - std::sqrt(t.l2) * t.e2;
  return Ensemble({{0.5, PureState::normalized(plus)}, {0.5, PureState::normalized(minus)}});
}

DensityMatrix departure_relative_matrix(const DepartureFamily& fam) {
  const double g = fam.g;
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  switch (fam.index) {
    case 1:
    case 4: {
      const double top = fam.index == 1 ? 2.0 - g * g : g * g;
      const double bottom = fam.index == 1 ? g * g : 2.0 - g * g;
      m << top, 0, 0, -g, 0, g, -g, 0, 0, -g, g, 0, -g, 0, 0, bottom;
      m /= 2.0 * (1.0 + g);
      break;
    }
    case 2:
      m(1, 1) = 1.0 - g / 2;
      m(2, 2) = g / 2;
      break;
    default:
      m(1, 1) = g / 2;
      m(2, 2) = 1.0 - g / 2;
      break;
  }
  return DensityMatrix(m.cast<cplx>());
}

Bits departure_mre_closed(const DepartureFamily& fam) {
  const double g = fam.g;
  if (fam.index == 1 || fam.index == 4) {
    if (g <= 0.0) return 0.0;
    const double root = std::sqrt(1.0 - g * g + g * g * g * g);
    return xlog(0.5 * (1.0 - g), 1.0 - g) + xlog(0.5 * (1.0 + g), 1.0 + g) +
           xlog((1.0 - g) * (1.0 - g * g) / (2.0 * root), (1.0 - root) / (1.0 + root)) -
           xlog(1.0 - g, 0.5 * g);
  }
  const double s = std::sqrt(1.0 - 2.0 * g * (1.0 - g));
  return 0.5 * (xlog(1.0 - s, 1.0 - s) + xlog(1.0 + s, 1.0 + s) - xlog(g, g) - xlog(2.0 - g, 2.0 - g));
}

Bits departure_mre_numeric(const DepartureFamily& fam) {
  return relative_entropy_lemma1(departure_state(fam),
                                 eigensystem_of(departure_relative_matrix(fam).matrix()));
}

Bits departure_ef_closed(double g) {
  require_probability(g, "G");
  g = std::clamp(g, 0.0, 1.0);
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - g * g)));
}

std::array<double, 2> departure_member_xi(const DepartureFamily& fam) {
  const Ensemble e = departure_mpsd(fam);
  return {xi_norm(e.members()[0].psi), xi_norm(e.members()[1].psi)};
}

std::array<double, 2> departure_xi_printed(double g) {
  const double d = 1.0 - 2.0 * g + 2.0 * g * g;
  const double head = g * (2.0 - 5.0 * g + 4.0 * g * g);
  const double tail = 2.0 * (1.0 - g) * std::sqrt(std::max(0.0, 2.0 * g * (1.0 - g) * d));
  return {(head + tail) / d, (head - tail) / d};
}

Bits departure_avg_reduced_entropy(const DepartureFamily& fam) {
  if (fam.index != 2 && fam.index != 3)
    throw DomainError("average reduced entropy is defined for departure families 2 and 3");
  const auto xi = departure_member_xi(fam);
  return 0.5 * binary_entropy(0.5 * (1.0 + xi[0])) + 0.5 * binary_entropy(0.5 * (1.0 + xi[1]));
}

// ------------------------------------------------------------- recognition

std::optional<BellMixture> as_bell_mixture(const DensityMatrix& rho, double tol) {
  Mat4 basis;
  for (int k = 0; k < 4; ++k) basis.col(k) = bell_vectors()[static_cast<std::size_t>(k)];
  const Mat4 in_bell = basis.adjoint() * rho.matrix() * basis;
  const Mat4 off = in_bell - Mat4(in_bell.diagonal().asDiagonal());
  if (off.cwiseAbs().maxCoeff() > tol) return std::nullopt;
  std::array<double, 4> b{};
  double total = 0.0;
  for (int k = 0; k < 4; ++k) total += (b[static_cast<std::size_t>(k)] = std::max(0.0, in_bell(k, k).real()));
  for (double& x : b) x /= total;
  return BellMixture(b);
}

std::optional<DepartureFamily> as_departure(const DensityMatrix& rho, double tol) {
  const Vec4& psi_minus = bell_vectors()[3];
  const double weight = psi_minus.dot(rho.matrix() * psi_minus).real();
  for (int i = 1; i <= 4; ++i) {
    // <Psi-|B_i|Psi-> = G + (1-G)|<i|Psi->|^2.
    const double overlap = std::norm(psi_minus(i - 1));
    const DepartureFamily candidate(i, std::clamp((weight - overlap) / (1.0 - overlap), 0.0, 1.0));
    if ((departure_state(candidate).matrix() - rho.matrix()).cwiseAbs().maxCoeff() <= tol) return candidate;
  }
  return std::nullopt;
}

}  // namespace mre
