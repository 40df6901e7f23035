#pragma once

// SU(2) elements stored as the first row (alpha, beta) of
//   | alpha        beta      |
//   | -conj(beta)  conj(alpha) |
// together with the su(2) basis
//   sx = (i/2) sigma_x, sy = (-i/2) sigma_y, sz = (i/2) sigma_z
// and the projection onto the unit disk through the (1,1) entry.

#include <cmath>
#include <complex>

#include <Eigen/Core>

#include "su2ctl/tolerances.hpp"

namespace su2ctl {

template <typename Scalar>
using Matrix2c = Eigen::Matrix<std::complex<Scalar>, 2, 2>;

/// Point of the closed unit disk; the (1,1) entry of an SU(2) element.
template <typename Scalar>
struct DiskPointT {
  Scalar x{1};
  Scalar y{0};

  std::complex<Scalar> as_complex() const { return {x, y}; }
  Eigen::Matrix<Scalar, 2, 1> as_vector() const { return {x, y}; }
  Scalar norm() const { return std::hypot(x, y); }
  Scalar squared_norm() const { return x * x + y * y; }

  static DiskPointT from_complex(std::complex<Scalar> z) { return {z.real(), z.imag()}; }
};

/// Rotation of a disk point by `angle` radians (multiplication by e^{i angle}).
template <typename Scalar>
DiskPointT<Scalar> rotate(const DiskPointT<Scalar>& p, Scalar angle) {
  return DiskPointT<Scalar>::from_complex(p.as_complex() * std::polar(Scalar(1), angle));
}

/// Coefficients on (sx, sy, sz).
template <typename Scalar>
struct LieCoeffsT {
  Scalar cx{0};
  Scalar cy{0};
  Scalar cz{0};

  LieCoeffsT operator-() const { return {-cx, -cy, -cz}; }
  Scalar norm() const { return std::sqrt(cx * cx + cy * cy + cz * cz); }

  /// The su(2) matrix cx*sx + cy*sy + cz*sz.
  Matrix2c<Scalar> matrix() const {
    using C = std::complex<Scalar>;
    const C i(0, 1);
    Matrix2c<Scalar> m;
    m << i * cz / Scalar(2), (i * cx - cy) / Scalar(2),
         (i * cx + cy) / Scalar(2), -i * cz / Scalar(2);
    return m;
  }
};

template <typename Scalar>
class SU2Element {
 public:
  using Complex = std::complex<Scalar>;

  SU2Element() = default;

  /// Builds from a first row that is already unit-norm up to rounding; renormalizes.
  SU2Element(Complex alpha, Complex beta) : alpha_(alpha), beta_(beta) { renormalize(); }

  static SU2Element identity() { return {}; }

  /// diag(e^{i psi}, e^{-i psi}).
  static SU2Element phase(Scalar psi) { return SU2Element(std::polar(Scalar(1), psi), Complex(0)); }

  /// Off-diagonal element with alpha = 0 and beta = e^{i phi}.
  static SU2Element swap_like(Scalar phi) { return SU2Element(Complex(0), std::polar(Scalar(1), phi)); }

  /// Element with (1,1) entry `p` and a real non-negative (1,2) entry.
  static SU2Element from_disk_point(const DiskPointT<Scalar>& p) {
    const Scalar r2 = p.squared_norm();
    const Scalar b = r2 < Scalar(1) ? std::sqrt(Scalar(1) - r2) : Scalar(0);
    return SU2Element(p.as_complex(), Complex(b));
  }

  /// Element from an arbitrary 2x2 matrix, keeping its first row.
  static SU2Element from_matrix(const Matrix2c<Scalar>& m) { return SU2Element(m(0, 0), m(0, 1)); }

  const Complex& alpha() const { return alpha_; }
  const Complex& beta() const { return beta_; }

  Matrix2c<Scalar> matrix() const {
    Matrix2c<Scalar> m;
    m << alpha_, beta_, -std::conj(beta_), std::conj(alpha_);
    return m;
  }

  SU2Element inverse() const {
    SU2Element r;
    r.alpha_ = std::conj(alpha_);
    r.beta_ = -beta_;
    return r;
  }

  Scalar unitarity_defect() const { return std::abs(std::norm(alpha_) + std::norm(beta_) - Scalar(1)); }

 private:
  void renormalize() {
    const Scalar n = std::sqrt(std::norm(alpha_) + std::norm(beta_));
    if (n > Scalar(0)) {
      alpha_ /= n;
      beta_ /= n;
    }
  }

  Complex alpha_{1};
  Complex beta_{0};
};

using DiskPoint = DiskPointT<double>;
using LieCoeffs = LieCoeffsT<double>;
using SU2 = SU2Element<double>;

/// Group product AB, renormalized.
template <typename Scalar>
SU2Element<Scalar> compose(const SU2Element<Scalar>& a, const SU2Element<Scalar>& b) {
  return SU2Element<Scalar>(a.alpha() * b.alpha() - a.beta() * std::conj(b.beta()),
                            a.alpha() * b.beta() + a.beta() * std::conj(b.alpha()));
}

template <typename Scalar>
SU2Element<Scalar> operator*(const SU2Element<Scalar>& a, const SU2Element<Scalar>& b) {
  return compose(a, b);
}

/// e^{cx sx + cy sy + cz sz}. The generator M satisfies M^2 = -(|c|/2)^2 I, so
/// e^M = cos(|c|/2) I + sin(|c|/2)/(|c|/2) M.
template <typename Scalar>
SU2Element<Scalar> exp_lie(const LieCoeffsT<Scalar>& v) {
  using C = std::complex<Scalar>;
  const Scalar theta = v.norm() / Scalar(2);
  // sin(theta)/theta, series below 1e-4 keeps full precision
  const Scalar sinc = theta < Scalar(1e-4) ? Scalar(1) - theta * theta / Scalar(6) : std::sin(theta) / theta;
  const C alpha(std::cos(theta), sinc * v.cz / Scalar(2));
  const C beta(-sinc * v.cy / Scalar(2), sinc * v.cx / Scalar(2));
  return SU2Element<Scalar>(alpha, beta);
}

/// Tr(A B^dagger).
template <typename Scalar>
std::complex<Scalar> trace_inner(const Matrix2c<Scalar>& a, const Matrix2c<Scalar>& b) {
  return (a * b.adjoint()).trace();
}

template <typename Scalar>
std::complex<Scalar> trace_inner(const SU2Element<Scalar>& a, const SU2Element<Scalar>& b) {
  return trace_inner<Scalar>(a.matrix(), b.matrix());
}

/// sqrt(<A - B, A - B>).
template <typename Scalar>
Scalar distance(const SU2Element<Scalar>& a, const SU2Element<Scalar>& b) {
  const Matrix2c<Scalar> d = a.matrix() - b.matrix();
  return std::sqrt(std::max(Scalar(0), trace_inner<Scalar>(d, d).real()));
}

template <typename Scalar>
DiskPointT<Scalar> disk_point(const SU2Element<Scalar>& x) {
  return DiskPointT<Scalar>::from_complex(x.alpha());
}

}  // namespace su2ctl
