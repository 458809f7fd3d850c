#include <mre/pure_measures.hpp>

#include <Eigen/SVD>
#include <cmath>

namespace mre {

namespace detail {

namespace {

// Bloch vectors of both reduced states straight from the amplitudes.
void reduced_blochs(const Vec4& psi, RVec3& xa, RVec3& xb) {
  const cplx a = psi(0), b = psi(1), c = psi(2), d = psi(3);
  const cplx ra01 = a * std::conj(c) + b * std::conj(d);
  const cplx rb01 = a * std::conj(b) + c * std::conj(d);
  xa = RVec3{2.0 * ra01.real(), -2.0 * ra01.imag(),
             std::norm(a) + std::norm(b) - std::norm(c) - std::norm(d)};
  xb = RVec3{2.0 * rb01.real(), -2.0 * rb01.imag(),
             std::norm(a) + std::norm(c) - std::norm(b) - std::norm(d)};
}

}  // namespace

RMat3 correlation_block(const Vec4& psi) {
  RMat3 corr;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) corr(i, j) = psi.dot(pauli_product(i + 1, j + 1) * psi).real();
  return corr;
}

Axes relative_axes(const Vec4& psi) {
  RVec3 xa, xb;
  reduced_blochs(psi, xa, xb);
  const double na = xa.norm();
  const double nb = xb.norm();
  const double xi = 0.5 * (na + nb);
  if (xi >= kDegenerateXi) return {xa / na, xb / nb, std::min(xi, 1.0), false};

  const RMat3 corr = correlation_block(psi);
  Eigen::JacobiSVD<RMat3> svd(corr, Eigen::ComputeFullU);
  const auto& s = svd.singularValues();
  const RMat3& u = svd.matrixU();
  RVec3 proj = RVec3::Zero();
  for (int k = 0; k < 3; ++k)
    if (s(k) >= s(0) - 1e-8) proj += u.col(k) * u.col(k).z();
  const RVec3 eta_a = proj.norm() > 1e-6 ? RVec3(proj.normalized()) : RVec3(u.col(0));
  const RVec3 eta_b = (corr.transpose() * eta_a).normalized();
  return {eta_a, eta_b, 0.0, true};
}

Mat4 relative_matrix(const Vec4& psi) {
  const Axes ax = relative_axes(psi);
  const double q1 = 0.5 * (1.0 - ax.xi);
  return q1 * kron(bloch_projector(-ax.eta_a), bloch_projector(-ax.eta_b)) +
         (1.0 - q1) * kron(bloch_projector(ax.eta_a), bloch_projector(ax.eta_b));
}

}  // namespace detail

double concurrence_pure(const PureState& psi) { return std::min(1.0, 2.0 * std::abs(psi.det())); }

double xi_norm(const PureState& psi) {
  RVec3 xa, xb;
  detail::reduced_blochs(psi.amplitudes(), xa, xb);
  return std::min(1.0, 0.5 * (xa.norm() + xb.norm()));
}

Bits ef_pure(const PureState& psi) { return binary_entropy(0.5 * (1.0 + xi_norm(psi))); }

RelativeMatrixParts relative_matrix_pure(const PureState& psi) {
  const detail::Axes ax = detail::relative_axes(psi.amplitudes());
  RelativeMatrixParts parts;
  parts.degenerate = ax.degenerate;
  parts.eta_a = ax.eta_a;
  parts.eta_b = ax.eta_b;
  parts.q1 = 0.5 * (1.0 - ax.xi);
  parts.q2 = 1.0 - parts.q1;
  parts.rho_a1 = bloch_projector(-ax.eta_a);
  parts.rho_b1 = bloch_projector(-ax.eta_b);
  parts.rho_a2 = Mat2::Identity() - parts.rho_a1;
  parts.rho_b2 = Mat2::Identity() - parts.rho_b1;
  parts.matrix = DensityMatrix(parts.q1 * kron(parts.rho_a1, parts.rho_b1) +
                               parts.q2 * kron(parts.rho_a2, parts.rho_b2));
  return parts;
}

Bits mre_pure(const PureState& psi) {
  const RelativeMatrixParts parts = relative_matrix_pure(psi);
  return relative_entropy_lemma1(pure_to_density(psi), eigensystem_of(parts.matrix.matrix()));
}

OmegaSpectrum omega_spectrum(const PureState& psi) {
  const detail::Axes ax = detail::relative_axes(psi.amplitudes());
  const PauliCoefficients a = pauli_expand(psi);
  const RVec3 xa{a(1, 0), a(2, 0), a(3, 0)};
  const RVec3 xb{a(0, 1), a(0, 2), a(0, 3)};
  const RMat3 corr = a.correlations();
  auto omega = [&](double sa, double sb) {
    const RVec3 ea = sa * ax.eta_a;
    const RVec3 eb = sb * ax.eta_b;
    return 0.25 * (1.0 + ea.dot(xa) + xb.dot(eb) + ea.dot(corr * eb));
  };
  OmegaSpectrum out;
  if (ax.degenerate)
    out.omega = {omega(1, 1), omega(-1, -1), omega(1, -1), omega(-1, 1)};
  else
    out.omega = {omega(1, 1), omega(1, -1), omega(-1, 1), omega(-1, -1)};
  return out;
}

}  // namespace mre
