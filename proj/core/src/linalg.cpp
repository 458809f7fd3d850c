#include <mre/linalg.hpp>

namespace mre {

const std::array<Mat2, 4>& pauli_matrices() {
  static const std::array<Mat2, 4> sigma = [] {
    const cplx i{0.0, 1.0};
    std::array<Mat2, 4> s;
    s[0] << 1, 0, 0, 1;
    s[1] << 0, 1, 1, 0;
    s[2] << 0, -i, i, 0;
    s[3] << 1, 0, 0, -1;
    return s;
  }();
  return sigma;
}

const Mat4& pauli_product(int mu, int nu) {
  static const std::array<Mat4, 16> table = [] {
    std::array<Mat4, 16> t;
    const auto& s = pauli_matrices();
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) t[4 * m + n] = kron(s[m], s[n]);
    return t;
  }();
  return table[4 * mu + nu];
}

const Mat4& spin_flip() {
  static const Mat4 yy = kron(pauli_matrices()[2], pauli_matrices()[2]);
  return yy;
}

}  // namespace mre
