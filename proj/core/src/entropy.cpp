#include <mre/entropy.hpp>
#include <mre/errors.hpp>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <utility>

namespace mre {

namespace {

double xlog2x(double x) { return x > kZeroEigenvalue ? x * std::log2(x) : 0.0; }

}  // namespace

Bits binary_entropy(double x) {
  if (!(x >= -1e-12 && x <= 1.0 + 1e-12))
    throw DomainError("binary_entropy: argument outside [0,1]");
  x = std::clamp(x, 0.0, 1.0);
  return 0.0 - xlog2x(x) - xlog2x(1.0 - x);
}

Bits shannon_entropy(const Eigen::VectorXd& p) {
  double h = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) h -= xlog2x(p(i));
  return h;
}

Bits von_neumann(const DensityMatrix& rho) { return shannon_entropy(rho.eigenvalues()); }

Bits von_neumann(const QubitDensity& rho) { return shannon_entropy(rho.eigenvalues()); }

namespace detail {

double cross_entropy(const Mat4& rho, const Mat4& sigma) {
  Eigen::SelfAdjointEigenSolver<Mat4> es(sigma);
  double total = 0.0;
  for (int k = 0; k < 4; ++k) {
    const Vec4 v = es.eigenvectors().col(k);
    const double overlap = v.dot(rho * v).real();
    if (overlap <= kZeroEigenvalue) continue;
    const double lambda = es.eigenvalues()(k);
    if (lambda <= kZeroEigenvalue) {
      if (overlap > kSupportMismatch) return kInfiniteEntropy;
      continue;
    }
    total -= overlap * std::log2(lambda);
  }
  return total;
}

}  // namespace detail

namespace {

// log2 of a positive semidefinite matrix on its support, plus the projector
// onto the null space.
std::pair<Mat4, Mat4> support_log2(const Mat4& m) {
  Eigen::SelfAdjointEigenSolver<Mat4> es(m);
  Mat4 log_m = Mat4::Zero();
  Mat4 null = Mat4::Zero();
  for (int k = 0; k < 4; ++k) {
    const Vec4 v = es.eigenvectors().col(k);
    const double lambda = es.eigenvalues()(k);
    if (lambda > kZeroEigenvalue)
      log_m += std::log2(lambda) * (v * v.adjoint());
    else
      null += v * v.adjoint();
  }
  return {log_m, null};
}

}  // namespace

Bits relative_entropy_direct(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const auto [log_sigma, sigma_null] = support_log2(sigma.matrix());
  if ((rho.matrix() * sigma_null).trace().real() > kSupportMismatch) return kInfiniteEntropy;
  const Mat4 log_rho = support_log2(rho.matrix()).first;
  const double value = (rho.matrix() * (log_rho - log_sigma)).trace().real();
  // Klein's inequality: rounding can only push an exact zero slightly negative.
  return std::max(0.0, value);
}

Eigensystem eigensystem_of(const Mat4& sigma) {
  Eigen::SelfAdjointEigenSolver<Mat4> es(0.5 * (sigma + sigma.adjoint()));
  Eigensystem out;
  out.reserve(4);
  for (int k = 3; k >= 0; --k) out.push_back({es.eigenvalues()(k), es.eigenvectors().col(k)});
  return out;
}

Bits relative_entropy_lemma1(const DensityMatrix& rho, const Eigensystem& sigma) {
  if (sigma.size() != 4) throw InputError("eigensystem must contain four eigenpairs");
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const cplx g = sigma[i].vector.dot(sigma[j].vector);
      if (std::abs(g - (i == j ? 1.0 : 0.0)) > 1e-9)
        throw InputError("eigensystem is not orthonormal");
    }
  double cross = 0.0;
  for (const auto& [lambda, v] : sigma) {
    const double omega = v.dot(rho.matrix() * v).real();
    if (omega <= kZeroEigenvalue) continue;
    if (lambda <= kZeroEigenvalue) {
      if (omega > kSupportMismatch) return kInfiniteEntropy;
      continue;
    }
    cross -= std::log2(lambda) * omega;
  }
  return std::max(0.0, -von_neumann(rho) + cross);
}

}  // namespace mre
