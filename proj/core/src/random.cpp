#include <mre/random.hpp>

#include <cmath>

namespace mre {

namespace {

cplx complex_normal(Engine& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

}  // namespace

PureState random_pure_state(Engine& rng) {
  Vec4 v;
  for (int i = 0; i < 4; ++i) v(i) = complex_normal(rng);
  return PureState::normalized(v);
}

Vec2 random_qubit(Engine& rng) {
  Vec2 v{complex_normal(rng), complex_normal(rng)};
  return v.normalized();
}

DensityMatrix random_density(Engine& rng, int rank) {
  Eigen::Matrix<cplx, 4, Eigen::Dynamic> g(4, rank);
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < 4; ++i) g(i, j) = complex_normal(rng);
  Mat4 m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix(m);
}

DensityMatrix random_separable(Engine& rng, int terms) {
  std::gamma_distribution<double> gamma(1.0, 1.0);
  Mat4 m = Mat4::Zero();
  double total = 0.0;
  for (int k = 0; k < terms; ++k) {
    const double w = gamma(rng);
    const Vec4 v = kron(random_qubit(rng), random_qubit(rng));
    m += w * v * v.adjoint();
    total += w;
  }
  return DensityMatrix(m / total);
}

std::array<double, 4> random_simplex4(Engine& rng) {
  std::gamma_distribution<double> gamma(1.0, 1.0);
  std::array<double, 4> b{};
  double total = 0.0;
  for (double& x : b) total += (x = gamma(rng));
  for (double& x : b) x /= total;
  return b;
}

bool gram_schmidt(Eigen::MatrixXcd& x) {
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    for (Eigen::Index k = 0; k < j; ++k) {
      const cplx overlap = x.col(k).dot(x.col(j));
      x.col(j) -= overlap * x.col(k);
    }
    const double n = x.col(j).norm();
    if (!(n > 1e-12)) return false;
    x.col(j) /= n;
  }
  return true;
}

Eigen::MatrixXcd random_isometry(Engine& rng, int m, int r) {
  Eigen::MatrixXcd x(m, r);
  do {
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < m; ++i) x(i, j) = complex_normal(rng);
  } while (!gram_schmidt(x));
  return x;
}

Mat2 random_unitary2(Engine& rng) {
  Eigen::MatrixXcd u = random_isometry(rng, 2, 2);
  return u;
}

Mat2 random_ginibre2(Engine& rng) {
  Mat2 g;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g(i, j) = complex_normal(rng);
  return g;
}

}  // namespace mre
