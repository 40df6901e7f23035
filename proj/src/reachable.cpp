#include "su2ctl/reachable.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "su2ctl/detail/search.hpp"
#include "su2ctl/errors.hpp"
#include "su2ctl/extremal.hpp"

namespace su2ctl {

namespace {

constexpr double kPi = std::numbers::pi;

// Frontline point in the scaled parameter s = omega T, with aT = hypot(s, gamma T).
DiskPoint frontline_point_scaled(double s, double gT) {
  const double aT = std::hypot(s, gT);
  const double cs = std::cos(s), ss = std::sin(s);
  const double ca = std::cos(aT), sa = std::sin(aT);
  const double r = s / aT;
  return {cs * ca + r * ss * sa, ss * ca - r * cs * sa};
}

double scaled_limit(double gT) { return gT >= kPi ? 0.0 : std::sqrt(kPi * kPi - gT * gT); }

void check_params(double T, double gamma) {
  if (!(gamma > 0) || !std::isfinite(gamma)) throw InvalidInput("gamma must be positive, got " + std::to_string(gamma));
  if (!(T >= 0) || !std::isfinite(T)) throw InvalidInput("T must be non-negative, got " + std::to_string(T));
}

void check_in_disk(const DiskPoint& p) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y) || p.norm() > 1.0 + kGeometryTol) {
    throw InvalidInput("point (" + std::to_string(p.x) + ", " + std::to_string(p.y) + ") outside the unit disk");
  }
}

// The upper half of F_T (s in [-S, 0]) is a graph over x with x strictly decreasing in s,
// running from the circle endpoint to (cos gamma T, 0). Requires 0 < gamma T < pi.
bool inside_strict(const DiskPoint& p, double gT) {
  const double S = scaled_limit(gT);
  const double px = p.x, py = std::abs(p.y);
  if (px >= -std::cos(S)) return true;
  if (px < std::cos(gT)) return false;
  // the region meets the circle only in the arc x >= -cos S; near it the graph
  // comparison below is decided by rounding
  if (p.norm() >= 1.0 - kUnitarityTol) return false;
  double lo = -S, hi = 0.0;
  for (int i = 0; i < 200 && hi - lo > 1e-17; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (frontline_point_scaled(mid, gT).x > px) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return py <= frontline_point_scaled(0.5 * (lo + hi), gT).y;
}

// Nearest point on the upper half, returned as (s, distance) with p.y folded to |p.y|.
std::pair<double, double> nearest_upper(const DiskPoint& p, double gT) {
  const double S = scaled_limit(gT);
  const double px = p.x, py = std::abs(p.y);
  auto dist = [&](double s) {
    const DiskPoint q = frontline_point_scaled(s, gT);
    return std::hypot(q.x - px, q.y - py);
  };
  constexpr int n = 64;
  std::array<double, n> d{};
  for (int i = 0; i < n; ++i) d[i] = dist(-S + S * i / (n - 1));

  // refine the two smallest sampled local minima
  std::array<int, 2> cand{-1, -1};
  for (int i = 0; i < n; ++i) {
    const bool local = (i == 0 || d[i] <= d[i - 1]) && (i == n - 1 || d[i] <= d[i + 1]);
    if (!local) continue;
    if (cand[0] < 0 || d[i] < d[cand[0]]) {
      cand[1] = cand[0];
      cand[0] = i;
    } else if (cand[1] < 0 || d[i] < d[cand[1]]) {
      cand[1] = i;
    }
  }
  double best_s = 0.0, best_d = std::numeric_limits<double>::infinity();
  for (int c : cand) {
    if (c < 0) continue;
    const double lo = -S + S * std::max(c - 1, 0) / (n - 1);
    const double hi = -S + S * std::min(c + 1, n - 1) / (n - 1);
    const auto [s, ds] = detail::golden_minimize(dist, lo, hi, 1e-15);
    if (ds < best_d) best_s = s, best_d = ds;
  }
  return {best_s, best_d};
}

}  // namespace

double frontline_omega_limit(double T, double gamma) {
  check_params(T, gamma);
  if (T == 0) return std::numeric_limits<double>::infinity();
  return scaled_limit(gamma * T) / T;
}

DiskPoint frontline_endpoint(double T, double gamma) {
  check_params(T, gamma);
  const double S = scaled_limit(gamma * T);
  return {-std::cos(S), std::sin(S)};
}

DiskPoint frontline_point(double T, double omega, double gamma) {
  check_params(T, gamma);
  return free_disk_traj(T, omega, gamma);
}

Frontline frontline(double T, double gamma, int n) {
  if (!(T > 0)) throw InvalidInput("frontline requires T > 0");
  if (n < 3) throw InvalidInput("frontline requires at least 3 samples");
  check_params(T, gamma);
  Frontline f{T, gamma, {}};
  const double gT = gamma * T;
  if (gT >= kPi) {
    f.samples.push_back({0.0, {-1.0, 0.0}});
    return f;
  }
  const double S = scaled_limit(gT);
  f.samples.reserve(n);
  for (int i = 0; i < n; ++i) {
    // symmetric grid so that samples i and n-1-i mirror exactly
    const double u = (2.0 * i - (n - 1)) / (n - 1);
    const double s = S * u;
    DiskPoint p = frontline_point_scaled(std::abs(s), gT);
    if (s < 0) p.y = -p.y;
    f.samples.push_back({s / T, p});
  }
  return f;
}

std::vector<FrontlineSample> frontline_extension(double T, double gamma, int n, double max_factor) {
  if (!(T > 0) || n < 1 || !(max_factor > 1)) throw InvalidInput("invalid extension parameters");
  check_params(T, gamma);
  const double gT = gamma * T;
  const double S = scaled_limit(gT);
  std::vector<FrontlineSample> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) {
    const double s = S * (1.0 + (max_factor - 1.0) * i / n);
    out.push_back({s / T, frontline_point_scaled(s, gT)});
  }
  return out;
}

FrontlineNearest nearest_on_frontline(const DiskPoint& p, double T, double gamma) {
  check_params(T, gamma);
  const double gT = gamma * T;
  if (!(T > 0) || gT >= kPi) throw InvalidInput("nearest_on_frontline requires 0 < gamma T < pi");
  const auto [s, d] = nearest_upper(p, gT);
  // lower half mirrors the upper one; on the axis the upper branch is reported
  const double omega = p.y < 0 ? -s / T : s / T;
  return {omega, d};
}

double region_margin(const DiskPoint& p, double T, double gamma) {
  check_params(T, gamma);
  if (T == 0) return -std::hypot(p.x - 1.0, p.y);
  const double gT = gamma * T;
  if (gT >= kPi) return 1.0;
  const double d = nearest_upper(p, gT).second;
  return inside_strict(p, gT) ? d : -d;
}

bool contains(const DiskPoint& p, double T, double gamma) {
  check_params(T, gamma);
  check_in_disk(p);
  if (T == 0) return std::hypot(p.x - 1.0, p.y) <= kGeometryTol;
  const double gT = gamma * T;
  if (gT >= kPi) return true;
  if (inside_strict(p, gT)) return true;
  if (p.norm() >= 1.0 - kUnitarityTol) {
    // F_T is tangent to the circle at its endpoints, so a distance band would admit a
    // long arc; on the circle the tolerance is angular
    return std::abs(std::atan2(p.y, p.x)) <= kPi - scaled_limit(gT) + kGeometryTol;
  }
  return nearest_upper(p, gT).second <= kGeometryTol;
}

bool contains_exact(const DiskPoint& p, double T, double gamma) {
  check_params(T, gamma);
  check_in_disk(p);
  if (T == 0) return p.x == 1.0 && p.y == 0.0;
  const double gT = gamma * T;
  return gT >= kPi || inside_strict(p, gT);
}

bool contains_drift_exact(const DiskPoint& p_f, double T, double gamma) {
  return contains_exact(rotate(p_f, -T), T, gamma);
}

bool contains_drift(const DiskPoint& p_f, double T, double gamma) {
  return contains(rotate(p_f, -T), T, gamma);
}

double drift_margin(const DiskPoint& p_f, double T, double gamma) {
  return region_margin(rotate(p_f, -T), T, gamma);
}

// ---------------------------------------------------------------------------
// RegionSpec

namespace {

std::vector<Eigen::Vector2d> region_vertices(double T, double gamma, int segments) {
  const Frontline f = frontline(T, gamma, segments + 1);
  std::vector<Eigen::Vector2d> v;
  v.reserve(2 * segments + 2);
  for (const auto& s : f.samples) v.push_back(s.point.as_vector());
  // arc from the lower endpoint back to the upper one through (1,0)
  const double theta = std::atan2(f.samples.front().point.y, f.samples.front().point.x);
  for (int i = 1; i < segments; ++i) {
    const double ang = -theta + 2.0 * theta * i / segments;
    v.emplace_back(std::cos(ang), std::sin(ang));
  }
  return v;
}

}  // namespace

RegionSpec RegionSpec::with_samples(double T, double gamma, int samples) {
  if (!(T > 0) || samples < 3) throw InvalidInput("RegionSpec requires T > 0 and at least 3 samples");
  check_params(T, gamma);
  RegionSpec r;
  r.T_ = T;
  r.gamma_ = gamma;
  if (gamma * T >= kPi) {
    r.full_ = true;
    return r;
  }
  r.frontline_samples_ = samples;
  r.vertices_ = region_vertices(T, gamma, samples - 1);
  return r;
}

RegionSpec RegionSpec::build(double T, double gamma, int base_samples, int max_samples, double tol) {
  if (!(T > 0) || base_samples < 3) throw InvalidInput("RegionSpec requires T > 0 and at least 3 samples");
  check_params(T, gamma);
  int segments = base_samples;
  RegionSpec r = with_samples(T, gamma, segments + 1);
  if (r.full_) return r;
  const double gT = gamma * T;
  const double S = scaled_limit(gT);
  while (true) {
    // sagitta of the midpoints inserted by the next doubling against the current chords
    double err = 0.0;
    for (int i = 0; i < segments; ++i) {
      const double s0 = -S + 2.0 * S * i / segments;
      const double s1 = -S + 2.0 * S * (i + 1) / segments;
      const Eigen::Vector2d a = frontline_point_scaled(s0, gT).as_vector();
      const Eigen::Vector2d b = frontline_point_scaled(s1, gT).as_vector();
      const Eigen::Vector2d m = frontline_point_scaled(0.5 * (s0 + s1), gT).as_vector();
      err = std::max(err, point_segment_distance(m, a, b));
    }
    r.refinement_error_ = err;
    if (err < tol || 2 * segments > max_samples) break;
    segments *= 2;
  }
  RegionSpec out = with_samples(T, gamma, segments + 1);
  out.refinement_error_ = r.refinement_error_;
  return out;
}

int RegionSpec::winding_number(const DiskPoint& p) const {
  if (full_) return 1;
  int wn = 0;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Eigen::Vector2d& a = vertices_[i];
    const Eigen::Vector2d& b = vertices_[(i + 1) % n];
    const double cross = (b.x() - a.x()) * (p.y - a.y()) - (p.x - a.x()) * (b.y() - a.y());
    if (a.y() <= p.y) {
      if (b.y() > p.y && cross > 0) ++wn;
    } else if (b.y() <= p.y && cross < 0) {
      --wn;
    }
  }
  return wn;
}

double RegionSpec::boundary_distance(const DiskPoint& p) const {
  if (full_) return std::numeric_limits<double>::infinity();
  double d = std::numeric_limits<double>::infinity();
  const std::size_t n = vertices_.size();
  const Eigen::Vector2d q = p.as_vector();
  for (std::size_t i = 0; i < n; ++i) d = std::min(d, point_segment_distance(q, vertices_[i], vertices_[(i + 1) % n]));
  return d;
}

bool RegionSpec::contains(const DiskPoint& p, double tol) const {
  if (full_) return true;
  return winding_number(p) != 0 || boundary_distance(p) <= tol;
}

// ---------------------------------------------------------------------------
// Drift-picture geometry

CriticalTrajectory critical_trajectory(double gamma, int n) {
  if (!(gamma > 0)) throw InvalidInput("gamma must be positive");
  if (n < 2) throw InvalidInput("critical trajectory needs at least 2 samples");
  CriticalTrajectory c{gamma, 1.0 + gamma * gamma, kPi / (2.0 * gamma * std::sqrt(1.0 + gamma * gamma)), {}};
  c.samples.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double t = c.T_c * i / (n - 1);
    c.samples.push_back({t, drift_disk_traj(t, c.omega_c, gamma)});
  }
  return c;
}

double drift_traj_speed(double t, double omega, double gamma) {
  const double b = 1.0 - omega;
  const double a = std::hypot(gamma, b);
  const double k = (1.0 + gamma * gamma - omega) / a;
  return std::hypot(std::cos(a * t), k * std::sin(a * t));
}

double critical_distance(const DiskPoint& p, double gamma) {
  if (!(gamma > 0)) throw InvalidInput("gamma must be positive");
  const double omega_c = 1.0 + gamma * gamma;
  const double T_c = kPi / (2.0 * gamma * std::sqrt(1.0 + gamma * gamma));
  auto dist = [&](double t) {
    const DiskPoint q = drift_disk_traj(t, omega_c, gamma);
    return std::hypot(q.x - p.x, q.y - p.y);
  };
  constexpr int n = 400;
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) d[i] = dist(T_c * i / (n - 1));
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const bool local = (i == 0 || d[i] <= d[i - 1]) && (i == n - 1 || d[i] <= d[i + 1]);
    if (!local) continue;
    const double lo = T_c * std::max(i - 1, 0) / (n - 1);
    const double hi = T_c * std::min(i + 1, n - 1) / (n - 1);
    best = std::min(best, detail::golden_minimize(dist, lo, hi, 1e-15).second);
  }
  return best;
}

Separatrix separatrix(double gamma) {
  if (!(gamma > 0)) throw InvalidInput("gamma must be positive");
  const double g2 = gamma * gamma;
  return {{g2 / (1.0 + g2), 0.0}, 1.0 / (1.0 + g2), (1.0 + g2) / 2.0};
}

double jacobian_det(double t, double omega, double gamma) {
  const double g2 = gamma * gamma;
  const double b = 1.0 - omega;
  const double a = std::hypot(gamma, b);
  const double at = a * t;
  return g2 * (g2 + 1.0 - omega) / (a * a * a * a) * std::sin(at) * (std::sin(at) - at * std::cos(at));
}

// ---------------------------------------------------------------------------
// Polyline geometry

namespace {

double orient(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c) {
  return (b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x());
}

bool on_segment(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& p) {
  return std::min(a.x(), b.x()) <= p.x() && p.x() <= std::max(a.x(), b.x()) && std::min(a.y(), b.y()) <= p.y() &&
         p.y() <= std::max(a.y(), b.y());
}

// Uniform grid over segment bounding boxes.
class SegmentGrid {
 public:
  SegmentGrid(const std::vector<Eigen::Vector2d>& pts, bool closed) : pts_(pts), closed_(closed) {
    lo_ = Eigen::Vector2d(-1.0 - 1e-9, -1.0 - 1e-9);
    const double span = 2.0 + 2e-9;
    const std::size_t nseg = segment_count();
    dim_ = std::clamp(static_cast<int>(std::sqrt(static_cast<double>(nseg))), 1, 512);
    cell_ = span / dim_;
    cells_.assign(static_cast<std::size_t>(dim_) * dim_, {});
    for (std::size_t i = 0; i < nseg; ++i) {
      const auto [x0, y0, x1, y1] = cell_box(pts_[i], pts_[next(i)]);
      for (int cx = x0; cx <= x1; ++cx)
        for (int cy = y0; cy <= y1; ++cy) cells_[cx * dim_ + cy].push_back(static_cast<int>(i));
    }
  }

  std::size_t segment_count() const {
    if (pts_.size() < 2) return 0;
    return closed_ ? pts_.size() : pts_.size() - 1;
  }
  std::size_t next(std::size_t i) const { return (i + 1) % pts_.size(); }
  const Eigen::Vector2d& point(std::size_t i) const { return pts_[i]; }

  template <typename Visit>
  void candidates(const Eigen::Vector2d& a, const Eigen::Vector2d& b, Visit&& visit) const {
    const auto [x0, y0, x1, y1] = cell_box(a, b);
    for (int cx = x0; cx <= x1; ++cx)
      for (int cy = y0; cy <= y1; ++cy)
        for (int s : cells_[cx * dim_ + cy]) visit(static_cast<std::size_t>(s));
  }

  double nearest(const Eigen::Vector2d& p) const {
    double best = std::numeric_limits<double>::infinity();
    const int px = clampi(static_cast<int>((p.x() - lo_.x()) / cell_));
    const int py = clampi(static_cast<int>((p.y() - lo_.y()) / cell_));
    for (int ring = 0; ring <= dim_; ++ring) {
      for (int cx = px - ring; cx <= px + ring; ++cx) {
        for (int cy = py - ring; cy <= py + ring; ++cy) {
          if (cx < 0 || cy < 0 || cx >= dim_ || cy >= dim_) continue;
          if (std::max(std::abs(cx - px), std::abs(cy - py)) != ring) continue;
          for (int s : cells_[cx * dim_ + cy]) best = std::min(best, point_segment_distance(p, pts_[s], pts_[next(s)]));
        }
      }
      if (best <= ring * cell_) break;
    }
    return best;
  }

 private:
  int clampi(int v) const { return std::clamp(v, 0, dim_ - 1); }

  std::array<int, 4> cell_box(const Eigen::Vector2d& a, const Eigen::Vector2d& b) const {
    return {clampi(static_cast<int>((std::min(a.x(), b.x()) - lo_.x()) / cell_)),
            clampi(static_cast<int>((std::min(a.y(), b.y()) - lo_.y()) / cell_)),
            clampi(static_cast<int>((std::max(a.x(), b.x()) - lo_.x()) / cell_)),
            clampi(static_cast<int>((std::max(a.y(), b.y()) - lo_.y()) / cell_))};
  }

  const std::vector<Eigen::Vector2d>& pts_;
  bool closed_;
  Eigen::Vector2d lo_;
  int dim_ = 1;
  double cell_ = 1.0;
  std::vector<std::vector<int>> cells_;
};

}  // namespace

bool segments_intersect(const Eigen::Vector2d& a0, const Eigen::Vector2d& a1, const Eigen::Vector2d& b0,
                        const Eigen::Vector2d& b1) {
  const double d1 = orient(b0, b1, a0);
  const double d2 = orient(b0, b1, a1);
  const double d3 = orient(a0, a1, b0);
  const double d4 = orient(a0, a1, b1);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) return true;
  if (d1 == 0 && on_segment(b0, b1, a0)) return true;
  if (d2 == 0 && on_segment(b0, b1, a1)) return true;
  if (d3 == 0 && on_segment(a0, a1, b0)) return true;
  if (d4 == 0 && on_segment(a0, a1, b1)) return true;
  return false;
}

double point_segment_distance(const Eigen::Vector2d& p, const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  const Eigen::Vector2d ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 == 0) return (p - a).norm();
  const double u = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + u * ab)).norm();
}

bool polylines_cross(const std::vector<Eigen::Vector2d>& a, const std::vector<Eigen::Vector2d>& b) {
  if (a.size() < 2 || b.size() < 2) return false;
  const SegmentGrid grid(b, false);
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    bool hit = false;
    grid.candidates(a[i], a[i + 1], [&](std::size_t s) {
      if (!hit && segments_intersect(a[i], a[i + 1], grid.point(s), grid.point(grid.next(s)))) hit = true;
    });
    if (hit) return true;
  }
  return false;
}

bool polyline_is_simple(const std::vector<Eigen::Vector2d>& line, bool closed) {
  const SegmentGrid grid(line, closed);
  const std::size_t nseg = grid.segment_count();
  for (std::size_t i = 0; i < nseg; ++i) {
    bool hit = false;
    grid.candidates(line[i], line[grid.next(i)], [&](std::size_t j) {
      if (hit || j <= i) return;
      const bool adjacent = j == i + 1 || (closed && i == 0 && j == nseg - 1);
      if (adjacent) return;
      if (segments_intersect(line[i], line[grid.next(i)], line[j], line[grid.next(j)])) hit = true;
    });
    if (hit) return false;
  }
  return true;
}

double polyline_distance(const std::vector<Eigen::Vector2d>& a, const std::vector<Eigen::Vector2d>& b) {
  if (polylines_cross(a, b)) return 0.0;
  const SegmentGrid ga(a, false), gb(b, false);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : a) best = std::min(best, gb.nearest(p));
  for (const auto& p : b) best = std::min(best, ga.nearest(p));
  return best;
}

std::vector<Eigen::Vector2d> to_polyline(const Frontline& f) {
  std::vector<Eigen::Vector2d> out;
  out.reserve(f.samples.size());
  for (const auto& s : f.samples) out.push_back(s.point.as_vector());
  return out;
}

}  // namespace su2ctl
