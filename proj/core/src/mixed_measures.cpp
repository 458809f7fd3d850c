#include <mre/errors.hpp>
#include <mre/mixed_measures.hpp>

#include <Eigen/SVD>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace mre {

DensityMatrix total_relative_matrix(const Ensemble& e) {
  Mat4 r = Mat4::Zero();
  for (const auto& [p, psi] : e) r += p * detail::relative_matrix(psi.amplitudes());
  return DensityMatrix(r);
}

Bits mre_for_decomposition(const DensityMatrix& rho, const Ensemble& e) {
  const double mismatch = (ensemble_matrix(e) - rho.matrix()).cwiseAbs().maxCoeff();
  if (mismatch > kDecompositionTolerance)
    throw DecompositionError("ensemble does not reproduce the density matrix (mismatch " +
                             std::to_string(mismatch) + ")");
  return relative_entropy_lemma1(rho, eigensystem_of(total_relative_matrix(e).matrix()));
}

std::array<double, 4> wootters_lambdas(const DensityMatrix& rho) {
  // With rho = V V^dag the lambdas are the singular values of the symmetric
  // matrix V^T (Y(x)Y) V. Taking them directly avoids square roots of
  // near-zero eigenvalues of rho rho~, which turn rounding noise of 1e-17 into
  // errors of 1e-8 for rank-deficient states.
  Eigen::SelfAdjointEigenSolver<Mat4> es(rho.matrix());
  const Mat4 v = es.eigenvectors() * es.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal();
  const Mat4 tau = v.transpose() * spin_flip() * v;
  const Eigen::Vector4d sv = Eigen::JacobiSVD<Mat4>(tau).singularValues();
  return {sv(0), sv(1), sv(2), sv(3)};
}

double wootters_concurrence(const DensityMatrix& rho) {
  const auto l = wootters_lambdas(rho);
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

Bits ef_from_concurrence(double c) {
  c = std::clamp(c, 0.0, 1.0);
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

Bits wootters_ef(const DensityMatrix& rho) { return ef_from_concurrence(wootters_concurrence(rho)); }

namespace {

// Phases phi_j with sum_j l_j exp(i phi_j) = 0, for l descending with
// l0 <= l1 + l2 + l3: close the triangle (l0, l1, L) and split L into (l2, l3).
std::array<double, 4> closing_phases(const std::array<double, 4>& l) {
  std::array<double, 4> phi{};
  if (!(l[1] > 0.0)) return phi;
  const double len = std::clamp(l[0] - l[1], l[2] - l[3], l[2] + l[3]);
  const double cos_a = std::clamp((len * len - l[0] * l[0] - l[1] * l[1]) / (2.0 * l[0] * l[1]), -1.0, 1.0);
  phi[1] = std::acos(cos_a);
  const cplx partial = l[0] + l[1] * std::polar(1.0, phi[1]);
  const cplx target = -partial;
  if (!(l[2] > 0.0)) return phi;
  const double beta = std::arg(target);
  double cos_g = 1.0;
  if (len > 0.0) cos_g = std::clamp((len * len + l[2] * l[2] - l[3] * l[3]) / (2.0 * len * l[2]), -1.0, 1.0);
  phi[2] = beta + std::acos(cos_g);
  const cplx rest = target - l[2] * std::polar(1.0, phi[2]);
  phi[3] = std::abs(rest) > 0.0 ? std::arg(rest) : phi[2] + std::numbers::pi;
  return phi;
}

}  // namespace

namespace {

// Entangled case. With y = (x_1, i x_2, i x_3, i x_4) the bilinear form
// T = (y_i | y~_j) is real diagonal with trace C. A real orthogonal O keeps
// sum |z_i><z_i| for z = O y, and member i has concurrence C exactly when
// (O A O^T)_ii = 0 for A = T - C Re<y_i|y_j>. A is traceless, so Givens
// rotations pairing a positive with a negative diagonal entry zero it.
std::vector<Vec4> equal_concurrence_rotation(const std::array<Vec4, 4>& x, double c) {
  std::array<Vec4, 4> y = x;
  for (int j = 1; j < 4; ++j) y[j] *= cplx(0.0, 1.0);
  Eigen::Matrix4d a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      a(i, j) = (y[i].transpose() * spin_flip() * y[j]).value().real() - c * y[i].dot(y[j]).real();
  a = 0.5 * (a + a.transpose()).eval();

  Eigen::Matrix4d o = Eigen::Matrix4d::Identity();
  for (int step = 0; step < 16; ++step) {
    int i = 0, j = 0;
    for (int k = 1; k < 4; ++k) {
      if (a(k, k) > a(i, i)) i = k;
      if (a(k, k) < a(j, j)) j = k;
    }
    if (a(i, i) <= 1e-15 || a(j, j) >= -1e-15) break;
    // a_ii + 2 t a_ij + t^2 a_jj = 0 has a real root since a_ii a_jj < 0.
    const double t = (-a(i, j) - std::sqrt(a(i, j) * a(i, j) - a(i, i) * a(j, j))) / a(j, j);
    const double cs = 1.0 / std::sqrt(1.0 + t * t);
    Eigen::Matrix4d g = Eigen::Matrix4d::Identity();
    g(i, i) = cs;
    g(i, j) = t * cs;
    g(j, i) = -t * cs;
    g(j, j) = cs;
    a = g * a * g.transpose();
    o = g * o;
  }

  std::vector<Vec4> members;
  for (int i = 0; i < 4; ++i) {
    Vec4 z = Vec4::Zero();
    for (int j = 0; j < 4; ++j) z += o(i, j) * y[j];
    members.push_back(z);
  }
  return members;
}

}  // namespace

Ensemble wootters_decomposition(const DensityMatrix& rho) {
  const Support s = support(rho);
  const int r = s.rank();
  const Eigen::MatrixXcd v = s.vectors * s.values.cwiseSqrt().asDiagonal();

  // Takagi factorization of tau = V^T (Y(x)Y) V (complex symmetric, r x r)
  // through the real symmetric embedding [[Re, Im], [Im, -Re]].
  const Eigen::MatrixXcd tau = v.transpose() * spin_flip() * v;
  Eigen::MatrixXd embed(2 * r, 2 * r);
  embed << tau.real(), tau.imag(), tau.imag(), -tau.real();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (embed + embed.transpose()));

  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  Eigen::MatrixXcd w(r, r);
  std::vector<double> sigma;
  int filled = 0;
  for (int k = 2 * r - 1; k >= 0 && filled < r; --k) {
    const double value = es.eigenvalues()(k);
    if (value <= 1e-10 * scale) break;
    const Eigen::VectorXd col = es.eigenvectors().col(k);
    w.col(filled) = col.head(r).cast<cplx>() + cplx(0.0, 1.0) * col.tail(r).cast<cplx>();
    sigma.push_back(value);
    ++filled;
  }
  // Complete with an orthonormal basis of the complement (tau vanishes there).
  for (int e = 0; filled < r && e < r; ++e) {
    Eigen::VectorXcd cand = Eigen::VectorXcd::Unit(r, e);
    for (int k = 0; k < filled; ++k) cand -= w.col(k).dot(cand) * w.col(k);
    if (cand.norm() < 1e-6) continue;
    w.col(filled) = cand.normalized();
    sigma.push_back(0.0);
    ++filled;
  }

  // x_j with <x_j| (x_k)~> = sigma_j delta_jk. The conjugation of tau flips
  // the Takagi vectors: tau w* = sigma w means the states are V w*.
  std::array<Vec4, 4> x;
  std::array<double, 4> l{};
  for (int j = 0; j < 4; ++j) {
    x[j] = Vec4::Zero();
    if (j < r) {
      x[j] = v * w.col(j).conjugate();
      l[j] = sigma[j];
    }
  }

  const double c = l[0] - l[1] - l[2] - l[3];
  std::vector<Vec4> members;
  if (c > 0.0) {
    members = equal_concurrence_rotation(x, c);
  } else {
    const std::array<double, 4> phi = closing_phases(l);
    static constexpr int kHadamard[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
    for (int i = 0; i < 4; ++i) {
      Vec4 z = Vec4::Zero();
      for (int j = 0; j < 4; ++j) z += 0.5 * kHadamard[i][j] * std::polar(1.0, -0.5 * phi[j]) * x[j];
      members.push_back(z);
    }
  }
  return Ensemble::from_subnormalized(members);
}

Mat4 partial_transpose(const Mat4& m) {
  Mat4 out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int b2 = 0; b2 < 2; ++b2) out(2 * a + b, 2 * a2 + b2) = m(2 * a + b2, 2 * a2 + b);
  return out;
}

double ppt_margin(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Mat4> es(partial_transpose(rho.matrix()), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

bool is_ppt(const DensityMatrix& rho) { return ppt_margin(rho) >= -1e-9; }

}  // namespace mre
