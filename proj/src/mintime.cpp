#include "su2ctl/mintime.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "su2ctl/detail/search.hpp"
#include "su2ctl/errors.hpp"
#include "su2ctl/reachable.hpp"

namespace su2ctl {

namespace {

constexpr double kPi = std::numbers::pi;
using Complex = std::complex<double>;

void check_gamma(double gamma) {
  if (!(gamma > 0) || !std::isfinite(gamma)) throw InvalidInput("gamma must be positive, got " + std::to_string(gamma));
}

void check_target(const SU2& target) {
  const bool finite = std::isfinite(target.alpha().real()) && std::isfinite(target.alpha().imag()) &&
                      std::isfinite(target.beta().real()) && std::isfinite(target.beta().imag());
  if (!finite || target.unitarity_defect() > kGeometryTol) throw InvalidInput("target is not a valid SU(2) element");
}

// (1,1) entry and its (omega, t) partials for either frequency convention.
struct EntryJet {
  Complex value;
  Complex d_omega;
  Complex d_t;
};

EntryJet drift_jet(double omega, double t, double gamma) {
  const double b = 1.0 - omega;
  const double a = std::hypot(gamma, b);
  const double at = a * t;
  const Complex rot = std::polar(1.0, omega * t);
  const double f = std::sin(at) - at * std::cos(at);
  const double k = (1.0 + gamma * gamma - omega) / a;
  return {rot * Complex(std::cos(at), b / a * std::sin(at)),
          rot * Complex(0.0, -gamma * gamma / (a * a * a) * f),
          rot * Complex(-k * std::sin(at), std::cos(at))};
}

EntryJet free_jet(double omega, double t, double gamma) {
  const double a = std::hypot(gamma, omega);
  const double at = a * t;
  const Complex rot = std::polar(1.0, omega * t);
  const double f = std::sin(at) - at * std::cos(at);
  return {rot * Complex(std::cos(at), -omega / a * std::sin(at)),
          rot * Complex(0.0, -gamma * gamma / (a * a * a) * f),
          rot * Complex(-gamma * gamma / a * std::sin(at), 0.0)};
}

// Damped Newton on the 2x2 system entry(omega, t) = target. Returns the improved pair
// when it lowers the residual without drifting beyond the given windows.
template <typename Jet>
void polish(Jet&& jet, Complex target, double& omega, double& t, double max_dt, double max_domega) {
  const double omega0 = omega, t0 = t;
  double w = omega, s = t;
  double res = std::abs(jet(w, s).value - target);
  const double res0 = res;
  for (int it = 0; it < 40 && res > 1e-15; ++it) {
    const EntryJet j = jet(w, s);
    Eigen::Matrix2d J;
    J << j.d_omega.real(), j.d_t.real(), j.d_omega.imag(), j.d_t.imag();
    if (std::abs(J.determinant()) < 1e-12) break;
    const Complex r = j.value - target;
    const Eigen::Vector2d step = J.partialPivLu().solve(Eigen::Vector2d(-r.real(), -r.imag()));
    double lambda = 1.0;
    bool improved = false;
    for (int h = 0; h < 12; ++h, lambda *= 0.5) {
      const double w1 = w + lambda * step(0), s1 = s + lambda * step(1);
      if (s1 < 0) continue;
      const double r1 = std::abs(jet(w1, s1).value - target);
      if (r1 < res) {
        w = w1, s = s1, res = r1;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  if (res < res0 && std::abs(s - t0) <= max_dt && std::abs(w - omega0) <= max_domega) {
    omega = w;
    t = s;
  }
}

// Gauss-Newton on omega alone with t held fixed.
template <typename Jet>
void polish_omega(Jet&& jet, Complex target, double& omega, double t, double max_domega) {
  const double omega0 = omega;
  double w = omega;
  double res = std::abs(jet(w, t).value - target);
  const double res0 = res;
  for (int it = 0; it < 40 && res > 1e-15; ++it) {
    const EntryJet j = jet(w, t);
    const double g2 = std::norm(j.d_omega);
    if (g2 < 1e-24) break;
    const double step = -(std::conj(j.d_omega) * (j.value - target)).real() / g2;
    double lambda = 1.0;
    bool improved = false;
    for (int h = 0; h < 12; ++h, lambda *= 0.5) {
      const double r1 = std::abs(jet(w + lambda * step, t).value - target);
      if (r1 < res) {
        w += lambda * step;
        res = r1;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  if (res < res0 && std::abs(w - omega0) <= max_domega) omega = w;
}

// Free-convention frequency of the frontline point matching q at time T.
double frontline_omega_for(const DiskPoint& q, double T, double gamma) {
  if (gamma * T >= kPi) return 0.0;  // frontline collapsed to (-1,0)
  if (q.norm() >= 1.0 - kGeometryTol) {
    // circle targets sit on an endpoint, where |beta| is too sensitive to omega for a search
    const double w = frontline_omega_limit(T, gamma);
    return q.y >= 0 ? -w : w;
  }
  return nearest_on_frontline(q, T, gamma).omega;
}

}  // namespace

OmegaBounds omega_bounds(const DiskPoint& p, double gamma) {
  check_gamma(gamma);
  const double r2 = p.squared_norm();
  if (r2 >= 1.0 - kGeometryTol) throw BoundaryPoint("omega bounds diverge on the unit circle");
  const double K = std::sqrt(r2 / (1.0 - r2));
  return {1.0 - gamma * K, 1.0 + gamma * K};
}

double boundary_min_time(double psi_f, double gamma) {
  check_gamma(gamma);
  if (!(psi_f >= 0.0 && psi_f < 2.0 * kPi)) throw InvalidInput("psi_f must lie in [0, 2 pi)");
  if (gamma > 1.0) throw OutOfValidity("boundary minimum-time formula holds only for gamma <= 1");
  const double q = psi_f * (2.0 * kPi - psi_f);
  return q / (kPi - psi_f + std::sqrt(kPi * kPi + gamma * gamma * q));
}

double drift_scan_step(double gamma) {
  check_gamma(gamma);
  return std::min(0.01, kPi / (100.0 * gamma));
}

double first_contact_time(const DiskPoint& p_f, double gamma, double t_begin) {
  check_gamma(gamma);
  if (!(t_begin >= 0)) throw InvalidInput("t_begin must be non-negative");
  const double t_full = kPi / gamma;
  if (t_begin >= t_full) return t_begin;
  auto feasible = [&](double t) { return contains_drift(p_f, t, gamma); };
  auto margin = [&](double t) { return drift_margin(p_f, t, gamma); };
  auto inside = [&](double t) { return contains_drift_exact(p_f, t, gamma); };
  if (feasible(t_begin)) return t_begin;

  const double step = drift_scan_step(gamma);
  double t_left = t_begin, m_left = margin(t_begin);  // sample before t0
  double t0 = t_begin, m0 = m_left;
  bool rising = true;  // margin has not decreased since t_left
  while (true) {
    const double t1 = std::min(t0 + step, t_full);
    const double m1 = margin(t1);
    if (inside(t1)) {
      // transversal entry: locate it on the exact region
      return detail::bisect_predicate(inside, t0, t1, 1e-12).second;
    }
    if (feasible(t1)) return detail::bisect_predicate(feasible, t0, t1, 1e-12).second;
    // a sampled peak may hide a narrow window or a tangential touch
    if (rising && m1 < m0) {
      auto neg = [&](double t) { return -margin(t); };
      const auto [t_peak, neg_peak] = detail::golden_minimize(neg, t_left, t1, 1e-13);
      if (-neg_peak >= -kGeometryTol && feasible(t_peak)) {
        // a touch that never enters the region: the tolerance band would open early
        if (!inside(t_peak)) return t_peak;
        return detail::bisect_predicate(inside, t_left, t_peak, 1e-12).second;
      }
    }
    if (t1 >= t_full) return t_full;
    rising = m1 >= m0;
    t_left = t0;
    t0 = t1;
    m0 = m1;
  }
}

DriftControlLaw synthesize_drift_law(const SU2& target, double T, double gamma, bool polish_time) {
  check_gamma(gamma);
  check_target(target);
  if (!(T >= 0)) throw InvalidInput("T must be non-negative");
  const DiskPoint p = disk_point(target);
  DriftControlLaw law{gamma, 1.0, 0.0, T};
  if (T == 0) return law;

  law.omega = frontline_omega_for(rotate(p, -T), T, gamma) + 1.0;
  auto jet = [gamma](double w, double t) { return drift_jet(w, t, gamma); };
  if (polish_time) {
    polish(jet, p.as_complex(), law.omega, law.t_final, 1e-6, 1e-3);
  } else {
    polish_omega(jet, p.as_complex(), law.omega, law.t_final, 1e-3);
  }
  law.phi = match_phase(target, law);
  return law;
}

MinTimeResult min_time_drift(const SU2& target, double gamma) {
  check_gamma(gamma);
  check_target(target);
  const double t = first_contact_time(disk_point(target), gamma, 0.0);
  const DriftControlLaw law = synthesize_drift_law(target, t, gamma, true);
  MinTimeResult r;
  r.t_star = law.t_final;
  r.omega_star = law.omega;
  r.convention = OmegaConvention::Drift;
  r.law = law;
  r.target = target;
  r.residual = distance(target, propagate(law));
  return r;
}

MinTimeResult min_time_free(const SU2& target, double gamma) {
  check_gamma(gamma);
  check_target(target);
  const DiskPoint p = disk_point(target);
  FreeControlLaw law{gamma, 0.0, 0.0, 0.0};
  if (!contains(p, 0.0, gamma)) {
    // R_U(T) grows with T, so membership is monotone
    const double t_full = kPi / gamma;
    const double T =
        detail::bisect_predicate([&](double s) { return contains_exact(p, s, gamma); }, 0.0, t_full, 1e-12).second;
    law.t_final = T;
    law.omega = frontline_omega_for(p, T, gamma);
    auto jet = [gamma](double w, double t) { return free_jet(w, t, gamma); };
    polish(jet, p.as_complex(), law.omega, law.t_final, 1e-6, 1e-3);
  }
  law.phi = match_phase(target, law);
  MinTimeResult r;
  r.t_star = law.t_final;
  r.omega_star = law.omega;
  r.convention = OmegaConvention::Free;
  r.law = law;
  r.target = target;
  r.residual = distance(target, propagate(law));
  return r;
}

MinTimeResult min_time_free(const DiskPoint& p, double gamma) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y) || p.norm() > 1.0 + kGeometryTol) {
    throw InvalidInput("point outside the unit disk");
  }
  return min_time_free(SU2::from_disk_point(p), gamma);
}

std::vector<SweepPoint> min_time_sweep(const DiskPoint& p_f, const std::vector<double>& gamma_grid) {
  for (std::size_t i = 0; i < gamma_grid.size(); ++i) {
    check_gamma(gamma_grid[i]);
    if (i > 0 && !(gamma_grid[i] > gamma_grid[i - 1])) throw InvalidInput("gamma grid must be strictly ascending");
  }
  const SU2 target = SU2::from_disk_point(p_f);
  std::vector<SweepPoint> out;
  out.reserve(gamma_grid.size());
  for (double g : gamma_grid) out.push_back({g, min_time_drift(target, g).t_star});

  const std::size_t n = out.size();
  if (n < 2) return out;
  std::vector<double> diff(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) diff[k] = std::abs(out[k + 1].t_star - out[k].t_star);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // continuity scale: median of up to four neighbouring increments
    std::vector<double> near;
    for (int off : {-2, -1, 1, 2}) {
      const long j = static_cast<long>(k) + off;
      if (j >= 0 && j < static_cast<long>(diff.size())) near.push_back(diff[j]);
    }
    if (near.empty()) continue;
    std::nth_element(near.begin(), near.begin() + near.size() / 2, near.end());
    const double scale = near[near.size() / 2];
    if (diff[k] > 10.0 * scale && diff[k] > 1e-6) {
      out[k].jump = true;
      double dmin = std::numeric_limits<double>::infinity();
      constexpr int probes = 9;
      for (int i = 0; i < probes; ++i) {
        const double g = gamma_grid[k] + (gamma_grid[k + 1] - gamma_grid[k]) * i / (probes - 1);
        dmin = std::min(dmin, critical_distance(p_f, g));
      }
      out[k].on_critical = dmin < 1e-3;
    }
  }
  return out;
}

}  // namespace su2ctl
