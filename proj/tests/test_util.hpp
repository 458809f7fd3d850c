#pragma once

#include <mre/linalg.hpp>
#include <mre/states.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <initializer_list>

namespace mre::test {

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

inline double max_abs_diff(const Mat4& a, const Mat4& b) { return (a - b).cwiseAbs().maxCoeff(); }

inline Mat4 real_matrix(std::initializer_list<std::initializer_list<double>> rows) {
  Mat4 m = Mat4::Zero();
  int r = 0;
  for (const auto& row : rows) {
    int c = 0;
    for (double x : row) m(r, c++) = x;
    ++r;
  }
  return m;
}

inline Mat4 diag(double a, double b, double c, double d) {
  return real_matrix({{a, 0, 0, 0}, {0, b, 0, 0}, {0, 0, c, 0}, {0, 0, 0, d}});
}

inline PureState ket(double a, double b, double c, double d) { return PureState(Vec4{a, b, c, d}); }

inline DensityMatrix density(const PureState& psi) { return pure_to_density(psi); }

}  // namespace mre::test
