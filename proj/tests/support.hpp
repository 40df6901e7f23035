#pragma once

// Reference computations used only by the tests. Nothing here calls the library's
// closed forms: matrix exponentials are summed as series and derivatives are taken
// by finite differences.

#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>

#include "su2ctl/su2.hpp"

namespace su2ctl::testing {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

/// The basis matrices written out by hand.
inline Mat2 basis(int k) {
  const Complex i(0, 1);
  Mat2 m;
  switch (k) {
    case 0: m << 0, 0.5 * i, 0.5 * i, 0; break;
    case 1: m << 0, -0.5, 0.5, 0; break;
    default: m << 0.5 * i, 0, 0, -0.5 * i; break;
  }
  return m;
}

/// Taylor series of e^M, summed until terms vanish, with scaling and squaring.
inline Mat2 series_exp(const Mat2& m) {
  int squarings = 0;
  double n = m.norm();
  while (n > 0.5) {
    n *= 0.5;
    ++squarings;
  }
  const Mat2 a = m / std::pow(2.0, squarings);
  Mat2 sum = Mat2::Identity(), term = Mat2::Identity();
  for (int k = 1; k < 40; ++k) {
    term = term * a / double(k);
    sum += term;
    if (term.norm() < 1e-20) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

inline Mat2 lie_matrix(double cx, double cy, double cz) { return cx * basis(0) + cy * basis(1) + cz * basis(2); }

inline double frob(const Mat2& a, const Mat2& b) { return (a - b).norm(); }

inline DiskPoint random_disk_point(double r_max = 0.999) {
  const double r = r_max * std::sqrt(uniform(0.0, 1.0));
  const double th = uniform(-M_PI, M_PI);
  return {r * std::cos(th), r * std::sin(th)};
}

inline SU2 random_su2() {
  std::normal_distribution<double> n(0.0, 1.0);
  return SU2(Complex(n(rng()), n(rng())), Complex(n(rng()), n(rng())));
}

}  // namespace su2ctl::testing
