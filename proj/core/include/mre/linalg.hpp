#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

namespace mre {

using cplx = std::complex<double>;

using Vec2 = Eigen::Vector2cd;
using Vec4 = Eigen::Vector4cd;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using RVec3 = Eigen::Vector3d;
using RMat3 = Eigen::Matrix3d;
using RMat4 = Eigen::Matrix4d;

/// Pauli matrices indexed 0..3 as I, X, Y, Z.
const std::array<Mat2, 4>& pauli_matrices();

/// sigma_mu (x) sigma_nu with the A factor leftmost.
const Mat4& pauli_product(int mu, int nu);

inline Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

inline Vec4 kron(const Vec2& a, const Vec2& b) {
  return Vec4{a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1)};
}

/// Projector (I + n.sigma)/2 onto the Bloch direction n (|n| = 1).
inline Mat2 bloch_projector(const RVec3& n) {
  Mat2 p;
  p << cplx(1.0 + n.z(), 0.0), cplx(n.x(), -n.y()), cplx(n.x(), n.y()),
      cplx(1.0 - n.z(), 0.0);
  return 0.5 * p;
}

/// Spin-flip operator sigma_y (x) sigma_y.
const Mat4& spin_flip();

/// Largest absolute entry of a - a^dag.
template <typename M>
double hermiticity_defect(const M& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace mre
