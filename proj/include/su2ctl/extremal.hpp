#pragma once

// Closed-form extremals for the drift system
//   dX/dtau = (sz + u_x sx + u_y sy) X
// and the driftless (interaction-picture) system
//   dU/dtau = (v_x sx + v_y sy) U,
// driven by u = gamma (sin(omega tau + phi), -cos(omega tau + phi)).
//
// All durations are in t-units, t = tau / 2. The two systems use different
// frequency conventions: drift laws have b = 1 - omega, a = sqrt(gamma^2 + b^2);
// free laws have a = sqrt(omega^2 + gamma^2). A free law with frequency w maps
// to the drift law with frequency w + 1 and the same phase.

#include <cmath>
#include <complex>
#include <numbers>
#include <utility>

#include "su2ctl/errors.hpp"
#include "su2ctl/su2.hpp"

namespace su2ctl {

namespace detail {

template <typename Scalar>
Scalar wrap_phase(Scalar phi) {
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  Scalar w = std::fmod(phi + pi, 2 * pi);
  if (w < 0) w += 2 * pi;
  return w - pi;
}

template <typename Scalar>
std::pair<Scalar, Scalar> extremal_control(Scalar gamma, Scalar omega, Scalar phi, Scalar tau) {
  const Scalar arg = omega * tau + phi;
  return {gamma * std::sin(arg), -gamma * std::cos(arg)};
}

// Off-diagonal entry e^{i(omega t + phi)} (gamma/a) sin(a t), shared by both systems.
template <typename Scalar>
std::complex<Scalar> off_diagonal(Scalar t, Scalar omega, Scalar phi, Scalar gamma, Scalar a) {
  return std::polar(gamma / a * std::sin(a * t), omega * t + phi);
}

}  // namespace detail

template <typename Scalar>
struct DriftControlLawT {
  Scalar gamma{1};
  Scalar omega{0};
  Scalar phi{0};
  Scalar t_final{0};

  /// (u_x, u_y) at physical time tau.
  std::pair<Scalar, Scalar> control(Scalar tau) const {
    return detail::extremal_control(gamma, omega, phi, tau);
  }
};

template <typename Scalar>
struct FreeControlLawT {
  Scalar gamma{1};
  Scalar omega{0};
  Scalar phi{0};
  Scalar t_final{0};

  /// (v_x, v_y) at physical time tau.
  std::pair<Scalar, Scalar> control(Scalar tau) const {
    return detail::extremal_control(gamma, omega, phi, tau);
  }
};

using DriftControlLaw = DriftControlLawT<double>;
using FreeControlLaw = FreeControlLawT<double>;

template <typename Scalar>
SU2Element<Scalar> drift_propagator(Scalar t, Scalar omega, Scalar phi, Scalar gamma) {
  using C = std::complex<Scalar>;
  const Scalar b = Scalar(1) - omega;
  const Scalar a = std::hypot(gamma, b);
  const C alpha = std::polar(Scalar(1), omega * t) * C(std::cos(a * t), b / a * std::sin(a * t));
  return SU2Element<Scalar>(alpha, detail::off_diagonal(t, omega, phi, gamma, a));
}

template <typename Scalar>
SU2Element<Scalar> free_propagator(Scalar t, Scalar omega, Scalar phi, Scalar gamma) {
  using C = std::complex<Scalar>;
  const Scalar a = std::hypot(omega, gamma);
  const C alpha = std::polar(Scalar(1), omega * t) * C(std::cos(a * t), -omega / a * std::sin(a * t));
  return SU2Element<Scalar>(alpha, detail::off_diagonal(t, omega, phi, gamma, a));
}

template <typename Scalar>
SU2Element<Scalar> propagate(const DriftControlLawT<Scalar>& law) {
  return drift_propagator(law.t_final, law.omega, law.phi, law.gamma);
}

template <typename Scalar>
SU2Element<Scalar> propagate(const FreeControlLawT<Scalar>& law) {
  return free_propagator(law.t_final, law.omega, law.phi, law.gamma);
}

/// (1,1) entry of the drift extremal, evaluated from its real/imaginary parts.
template <typename Scalar>
DiskPointT<Scalar> drift_disk_traj(Scalar t, Scalar omega, Scalar gamma) {
  const Scalar b = Scalar(1) - omega;
  const Scalar a = std::hypot(gamma, b);
  const Scalar cw = std::cos(omega * t), sw = std::sin(omega * t);
  const Scalar ca = std::cos(a * t), sa = std::sin(a * t);
  return {cw * ca - b / a * sw * sa, sw * ca + b / a * cw * sa};
}

/// (1,1) entry of the driftless extremal; at fixed t and varying omega these are the frontlines.
template <typename Scalar>
DiskPointT<Scalar> free_disk_traj(Scalar t, Scalar omega, Scalar gamma) {
  // evaluated at |omega| and mirrored, so omega -> -omega is an exact reflection
  const Scalar w = std::abs(omega);
  const Scalar a = std::hypot(w, gamma);
  const Scalar cw = std::cos(w * t), sw = std::sin(w * t);
  const Scalar ca = std::cos(a * t), sa = std::sin(a * t);
  const Scalar y = sw * ca - w / a * cw * sa;
  return {cw * ca + w / a * sw * sa, omega < 0 ? -y : y};
}

/// 1 - (gamma/a)^2 sin^2(a t): squared radius of any extremal point with this a.
template <typename Scalar>
Scalar extremal_radius_squared(Scalar t, Scalar a, Scalar gamma) {
  const Scalar s = gamma / a * std::sin(a * t);
  return Scalar(1) - s * s;
}

/// Drift-system control u = R(tau)^T v(tau) at tau = 2t.
template <typename Scalar>
std::pair<Scalar, Scalar> control_transform(const FreeControlLawT<Scalar>& free_law, Scalar t) {
  const Scalar tau = Scalar(2) * t;
  const auto [vx, vy] = free_law.control(tau);
  const Scalar c = std::cos(tau), s = std::sin(tau);
  return {c * vx - s * vy, s * vx + c * vy};
}

template <typename Scalar>
DriftControlLawT<Scalar> to_drift(const FreeControlLawT<Scalar>& f) {
  return {f.gamma, f.omega + Scalar(1), f.phi, f.t_final};
}

template <typename Scalar>
FreeControlLawT<Scalar> to_free(const DriftControlLawT<Scalar>& d) {
  return {d.gamma, d.omega - Scalar(1), d.phi, d.t_final};
}

namespace detail {

template <typename Scalar>
Scalar match_phase_impl(const SU2Element<Scalar>& target, Scalar t, Scalar omega, Scalar gamma, Scalar a,
                        Scalar tol) {
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar target_mag = std::abs(target.beta());
  const Scalar s = gamma / a * std::sin(a * t);
  if (std::abs(std::abs(s) - target_mag) > tol) {
    throw MagnitudeMismatch("off-diagonal magnitude " + std::to_string(std::abs(s)) +
                            " does not match target " + std::to_string(target_mag));
  }
  if (target_mag < kGeometryTol) return Scalar(0);
  Scalar phi = std::arg(target.beta()) - omega * t;
  if (s < 0) phi -= pi;
  return wrap_phase(phi);
}

}  // namespace detail

/// Phase in [-pi, pi) making the law's (1,2) entry equal the target's.
/// `tol` bounds the accepted magnitude disagreement.
template <typename Scalar>
Scalar match_phase(const SU2Element<Scalar>& target, const DriftControlLawT<Scalar>& law,
                   Scalar tol = Scalar(kVerifyTol)) {
  const Scalar a = std::hypot(law.gamma, Scalar(1) - law.omega);
  return detail::match_phase_impl(target, law.t_final, law.omega, law.gamma, a, tol);
}

/// Drift-convention form taking the extremal's (t, omega, gamma) directly.
template <typename Scalar>
Scalar match_phase(const SU2Element<Scalar>& target, Scalar t, Scalar omega, Scalar gamma,
                   Scalar tol = Scalar(kVerifyTol)) {
  return match_phase(target, DriftControlLawT<Scalar>{gamma, omega, Scalar(0), t}, tol);
}

template <typename Scalar>
Scalar match_phase(const SU2Element<Scalar>& target, const FreeControlLawT<Scalar>& law,
                   Scalar tol = Scalar(kVerifyTol)) {
  const Scalar a = std::hypot(law.gamma, law.omega);
  return detail::match_phase_impl(target, law.t_final, law.omega, law.gamma, a, tol);
}

}  // namespace su2ctl
