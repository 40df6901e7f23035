#include "curves.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "su2ctl/errors.hpp"
#include "su2ctl/extremal.hpp"
#include "su2ctl/reachable.hpp"

namespace su2ctl::cli {

namespace {

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

void check(double gamma, int n) {
  if (!(gamma > 0) || !std::isfinite(gamma)) throw InvalidInput("gamma must be positive");
  if (n < 2) throw InvalidInput("need at least 2 samples per curve");
}

Curve drift_curve(const std::string& name, double omega, double gamma, double t_end, int n) {
  Curve c{name, {}};
  c.rows.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double t = i == n - 1 ? t_end : t_end * i / (n - 1);
    const DiskPoint p = drift_disk_traj(t, omega, gamma);
    c.rows.push_back({omega, t, p.x, p.y});
  }
  return c;
}

}  // namespace

std::vector<Curve> frontline_curves(double gamma, const std::vector<double>& Ts, int n) {
  check(gamma, n);
  std::vector<Curve> out;
  for (double T : Ts) {
    if (!(T > 0) || !std::isfinite(T)) throw InvalidInput("frontline times must be positive");
    const Frontline f = frontline(T, gamma, n);
    Curve c{"frontline_T" + fmt("%g", T), {}};
    for (const auto& s : f.samples) c.rows.push_back({s.omega, T, s.point.x, s.point.y});
    out.push_back(std::move(c));
  }
  return out;
}

Curve critical_curve(double gamma, int n) {
  check(gamma, n);
  const CriticalTrajectory ct = critical_trajectory(gamma, n);
  Curve c{"critical", {}};
  for (const auto& s : ct.samples) c.rows.push_back({ct.omega_c, s.t, s.point.x, s.point.y});
  return c;
}

Curve separatrix_curve(double gamma, int n) {
  check(gamma, n);
  const double w = separatrix(gamma).omega_star;
  // closes on (1,0) when a t = pi
  return drift_curve("separatrix", w, gamma, std::numbers::pi / std::hypot(gamma, 1.0 - w), n);
}

std::vector<Curve> synthesis_curves(double gamma, const std::vector<double>& omegas, int n) {
  check(gamma, n);
  std::vector<Curve> out;
  for (double w : omegas) {
    if (!std::isfinite(w)) throw InvalidInput("omega must be finite");
    const double t_end = std::numbers::pi / std::hypot(gamma, 1.0 - w);
    out.push_back(drift_curve("synthesis_omega" + fmt("%g", w), w, gamma, t_end, n));
  }
  return out;
}

std::vector<double> default_synthesis_omegas(double gamma) {
  const double ws = separatrix(gamma).omega_star;
  std::vector<double> out = {-3.0, -1.0, 0.0};
  for (double f : {0.2, 0.5, 0.7, 0.9, 1.3, 1.45, 1.6, 1.8}) out.push_back(f * ws);
  return out;
}

void write_csv(std::ostream& os, const Curve& c) {
  os << "omega,t,x,y\n";
  char buf[160];
  for (const auto& r : c.rows) {
    std::snprintf(buf, sizeof buf, "%.9f,%.9f,%.9f,%.9f\n", r[0], r[1], r[2], r[3]);
    os << buf;
  }
}

void write_svg(std::ostream& os, const std::vector<Curve>& curves) {
  // unit disk mapped to an 800x800 viewport with a 20px margin
  constexpr double size = 800, half = size / 2, scale = half - 20;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  os << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  os << "<circle cx=\"400\" cy=\"400\" r=\"" << scale << "\" fill=\"none\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  char buf[64];
  for (const auto& c : curves) {
    os << "<polyline id=\"" << c.name << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.2\" points=\"";
    for (const auto& r : c.rows) {
      std::snprintf(buf, sizeof buf, "%.3f,%.3f ", half + scale * r[2], half - scale * r[3]);
      os << buf;
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
}

}  // namespace su2ctl::cli
