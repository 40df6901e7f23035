#include <doctest.h>

#include <numbers>

#include "support.hpp"
#include "su2ctl/errors.hpp"
#include "su2ctl/extremal.hpp"
#include "su2ctl/reachable.hpp"

using namespace su2ctl;
using namespace su2ctl::testing;

namespace {

constexpr double kPi = std::numbers::pi;

double signed_area(const std::vector<Eigen::Vector2d>& v) {
  double a = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& p = v[i];
    const auto& q = v[(i + 1) % v.size()];
    a += p.x() * q.y() - q.x() * p.y();
  }
  return 0.5 * a;
}

}  // namespace

TEST_SUITE("reachable") {

TEST_CASE("frontline examples") {
  const Frontline c = frontline(kPi, 1.0, 101);
  REQUIRE(c.degenerate());
  CHECK(c.samples[0].point.x == -1.0);
  CHECK(c.samples[0].point.y == 0.0);

  const double g = 0.8, T = 1.4;
  const Frontline f = frontline(T, g, 101);
  REQUIRE(f.samples.size() == 101);
  CHECK(f.samples[50].omega == 0.0);
  CHECK(f.samples[50].point.x == doctest::Approx(std::cos(g * T)).epsilon(1e-15));
  CHECK(std::abs(f.samples[50].point.y) < 1e-15);

  const Frontline u = frontline(1.0, 1.0, 11);
  const double S = std::sqrt(kPi * kPi - 1.0);
  CHECK(u.samples.front().point.x == doctest::Approx(-std::cos(S)).epsilon(1e-12));
  CHECK(u.samples.front().point.y == doctest::Approx(std::sin(S)).epsilon(1e-12));
  CHECK(u.samples.back().point.y == doctest::Approx(-std::sin(S)).epsilon(1e-12));
  CHECK(u.samples.front().omega == doctest::Approx(-frontline_omega_limit(1.0, 1.0)).epsilon(1e-15));

  CHECK_THROWS_AS(frontline(0.0, 1.0, 10), InvalidInput);
  CHECK_THROWS_AS(frontline(-1.0, 1.0, 10), InvalidInput);
  CHECK_THROWS_AS(frontline(1.0, 1.0, 2), InvalidInput);
}

TEST_CASE("frontline invariants") {
  for (int k = 0; k < 50; ++k) {
    const double g = uniform(0.1, 3), T = uniform(0.01, 0.999 * kPi / g);
    const Frontline f = frontline(T, g, 257);
    CHECK(std::abs(f.samples.front().point.norm() - 1.0) < kGeometryTol);
    CHECK(std::abs(f.samples.back().point.norm() - 1.0) < kGeometryTol);
    for (std::size_t i = 0; i < f.samples.size(); ++i) {
      const auto& a = f.samples[i];
      const auto& b = f.samples[f.samples.size() - 1 - i];
      CHECK(std::abs(a.point.x - b.point.x) < 1e-12);
      CHECK(std::abs(a.point.y + b.point.y) < 1e-12);
      CHECK(std::abs(a.omega + b.omega) < 1e-12);
      const DiskPoint direct = free_disk_traj(T, a.omega, g);
      CHECK(std::hypot(direct.x - a.point.x, direct.y - a.point.y) < 1e-12);
    }
  }
}

TEST_CASE("endpoint x decreases with t") {
  const double g = 0.9;
  double prev = frontline_endpoint(1e-3, g).x;
  for (int i = 1; i < 400; ++i) {
    const double x = frontline_endpoint(1e-3 + i * (kPi / g - 2e-3) / 400, g).x;
    CHECK(x < prev);
    prev = x;
  }
}

TEST_CASE("contains examples") {
  for (double T : {0.01, 0.5, 2.0, 5.0}) CHECK(contains({1.0, 0.0}, T, 1.0));
  CHECK_FALSE(contains({-1.0, 0.0}, 3.0, 1.0));
  CHECK(contains({-1.0, 0.0}, kPi, 1.0));
  const double g = 1.1, T = 1.2;
  for (double Tp : {0.1, 0.6, 1.1, 1.19}) CHECK(contains({std::cos(g * Tp), 0.0}, T, g));
  for (double Tp : {1.2 + 1e-6, 1.3, 2.0}) CHECK_FALSE(contains({std::cos(g * Tp), 0.0}, T, g));
  // boundary-inclusive
  CHECK(contains({std::cos(g * T), 0.0}, T, g));
  CHECK(contains({std::cos(g * T) - 0.5e-9, 0.0}, T, g));
  CHECK_FALSE(contains({std::cos(g * T) - 1e-8, 0.0}, T, g));
  CHECK_THROWS_AS(contains({1.0, 0.1}, 1.0, 1.0), InvalidInput);
  CHECK_THROWS_AS(contains({0.0, 0.0}, 1.0, -1.0), InvalidInput);
}

TEST_CASE("frontline samples lie on the region boundary") {
  for (int k = 0; k < 20; ++k) {
    const double g = uniform(0.2, 2), T = uniform(0.1, 0.95 * kPi / g);
    for (const auto& s : frontline(T, g, 33).samples) {
      CHECK(contains(s.point, T, g));
      CHECK(std::abs(region_margin(s.point, T, g)) < 1e-9);
      const FrontlineNearest n = nearest_on_frontline(s.point, T, g);
      CHECK(n.distance < 1e-9);
      if (std::abs(s.point.y) > 1e-6) CHECK(n.omega == doctest::Approx(s.omega).epsilon(1e-6));
    }
  }
}

TEST_CASE("contains agrees with the winding-number polyline") {
  int checked = 0;
  for (int k = 0; k < 12; ++k) {
    const double g = uniform(0.2, 2), T = uniform(0.05, 0.98 * kPi / g);
    const RegionSpec spec = RegionSpec::build(T, g);
    for (int i = 0; i < 300; ++i) {
      const DiskPoint p = random_disk_point(1.0);
      // skip the band where the polyline's chord error could decide
      if (spec.boundary_distance(p) < 1e-7) continue;
      CHECK(contains(p, T, g) == spec.contains(p));
      CHECK((region_margin(p, T, g) > 0) == contains(p, T, g));
      ++checked;
    }
  }
  CHECK(checked > 3000);
}

TEST_CASE("RegionSpec geometry") {
  const RegionSpec full = RegionSpec::build(kPi, 1.0);
  CHECK(full.full_disk());
  CHECK(full.contains({-1.0, 0.0}));
  for (double T : {0.05, 0.5, 1.5, 3.0}) {
    const RegionSpec r = RegionSpec::build(T, 1.0);
    CHECK(r.refinement_error() < kGeometryTol);
    CHECK(polyline_is_simple(r.vertices(), true));
    CHECK(signed_area(r.vertices()) > 0);  // counterclockwise
    CHECK(r.winding_number({1.0 - 1e-6, 0.0}) == 1);
  }
  CHECK_THROWS_AS(RegionSpec::build(0.0, 1.0), InvalidInput);
}

TEST_CASE("contains_drift") {
  for (double T : {0.2, 0.9, 1.8}) CHECK(contains_drift({0.0, 0.0}, T, 0.7) == contains({0.0, 0.0}, T, 0.7));
  CHECK(contains_drift({1.0, 0.0}, 0.0, 1.0));
  for (double T : {0.5, 1.0, 1.5, kPi / 2 - 1e-6}) CHECK_FALSE(contains_drift({0.0, 0.0}, T, 1.0));
  for (double T : {kPi / 2, 1.6, 2.5, kPi}) CHECK(contains_drift({0.0, 0.0}, T, 1.0));
  // rotation by e^{-iT}
  const DiskPoint p{0.3, 0.5};
  CHECK(contains_drift(p, 1.3, 0.6) == contains(rotate(p, -1.3), 1.3, 0.6));
}

TEST_CASE("growth in T and nesting in gamma") {
  for (int k = 0; k < 300; ++k) {
    const DiskPoint p = random_disk_point(1.0);
    const double g = uniform(0.2, 2);
    double T1 = uniform(0, kPi / g), T2 = uniform(0, kPi / g);
    if (T1 > T2) std::swap(T1, T2);
    if (contains(p, T1, g)) CHECK(contains(p, T2, g));
    const double g2 = g * uniform(1, 2);
    if (contains(p, T1, g)) CHECK(contains(p, T1, g2));
  }
}

TEST_CASE("frontlines are disjoint, simple and bound their extensions") {
  for (int k = 0; k < 6; ++k) {
    const double g = uniform(0.2, 2);
    double t1 = uniform(0.05, 0.95 * kPi / g), t2 = uniform(0.05, 0.95 * kPi / g);
    if (t1 > t2) std::swap(t1, t2);
    if (t2 - t1 < 1e-3) continue;
    const Frontline f1 = frontline(t1, g, 1024), f2 = frontline(t2, g, 1024);
    CHECK(polyline_is_simple(to_polyline(f1), false));
    CHECK_FALSE(polylines_cross(to_polyline(f1), to_polyline(f2)));
    CHECK(polyline_distance(to_polyline(f1), to_polyline(f2)) > 0);
    for (const auto& s : f1.samples) CHECK(contains(s.point, t2, g));
    for (const auto& s : frontline_extension(t1, g, 500, 20.0)) CHECK(region_margin(s.point, t1, g) > 0);
  }
}

TEST_CASE("critical trajectory") {
  const CriticalTrajectory c = critical_trajectory(1.0 / std::numbers::sqrt2, 101);
  CHECK(c.omega_c == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(c.samples.front().point.x == 1.0);
  CHECK(c.samples.front().point.y == 0.0);
  const CriticalTrajectory u = critical_trajectory(1.0, 11);
  CHECK(u.T_c == doctest::Approx(kPi / (2 * std::numbers::sqrt2)).epsilon(1e-15));
  for (double g : {0.3, 0.7, 1.0, 2.0}) {
    const CriticalTrajectory t = critical_trajectory(g, 3);
    CHECK(drift_traj_speed(t.T_c, t.omega_c, g) < 1e-4);
    CHECK(drift_traj_speed(0.5 * t.T_c, t.omega_c, g) > 1e-2);
    CHECK(critical_distance(t.samples[1].point, g) < 1e-12);
  }
}

TEST_CASE("drift trajectory speed matches differences") {
  for (int i = 0; i < 100; ++i) {
    const double g = uniform(0.2, 2), w = uniform(-3, 3), t = uniform(0.1, 3), h = 1e-6;
    const DiskPoint a = drift_disk_traj(t + h, w, g), b = drift_disk_traj(t - h, w, g);
    CHECK(drift_traj_speed(t, w, g) == doctest::Approx(std::hypot(a.x - b.x, a.y - b.y) / (2 * h)).epsilon(1e-6));
  }
}

TEST_CASE("separatrix") {
  const Separatrix s = separatrix(1.0 / std::numbers::sqrt2);
  CHECK(s.omega_star == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(s.center.x == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(s.center.y == 0.0);
  CHECK(s.radius == doctest::Approx(2.0 / 3).epsilon(1e-15));
  CHECK(separatrix(1e4).radius < 1e-7);
  for (double g : {0.3, 0.7071, 1.5}) {
    const Separatrix c = separatrix(g);
    for (int i = 0; i <= 200; ++i) {
      const DiskPoint p = drift_disk_traj(i * 0.05, c.omega_star, g);
      CHECK(std::abs(std::hypot(p.x - c.center.x, p.y - c.center.y) - c.radius) < 1e-9);
    }
  }
}

TEST_CASE("jacobian_det") {
  CHECK(jacobian_det(0.0, 0.3, 1.2) == 0.0);
  CHECK(std::abs(jacobian_det(0.7, 1.0 + 1.44, 1.2)) < 1e-15);
  // zero at a t = pi
  const double a = std::hypot(1.2, 1 - 0.3);
  CHECK(std::abs(jacobian_det(kPi / a, 0.3, 1.2)) < 1e-12);

  auto fd = [](double t, double w, double g) {
    const double h = 1e-6;
    const DiskPoint pt = drift_disk_traj(t + h, w, g), mt = drift_disk_traj(t - h, w, g);
    const DiskPoint pw = drift_disk_traj(t, w + h, g), mw = drift_disk_traj(t, w - h, g);
    const double xt = (pt.x - mt.x) / (2 * h), yt = (pt.y - mt.y) / (2 * h);
    const double xw = (pw.x - mw.x) / (2 * h), yw = (pw.y - mw.y) / (2 * h);
    return xt * yw - yt * xw;
  };
  const double d = jacobian_det(1.0, 0.0, 1.0);
  CHECK(d != 0.0);
  CHECK(d == doctest::Approx(fd(1.0, 0.0, 1.0)).epsilon(1e-6));
  for (int i = 0; i < 100; ++i) {
    const double g = uniform(0.3, 2), w = uniform(-2, 3), t = uniform(0.1, 3);
    const double ref = fd(t, w, g);
    if (std::abs(ref) < 1e-3) continue;
    CHECK(std::abs(jacobian_det(t, w, g) - ref) <= 1e-6 * std::abs(ref));
  }
}

TEST_CASE("polyline helpers") {
  using V = Eigen::Vector2d;
  CHECK(segments_intersect(V(0, 0), V(1, 1), V(0, 1), V(1, 0)));
  CHECK_FALSE(segments_intersect(V(0, 0), V(1, 0), V(0, 1), V(1, 1)));
  CHECK(point_segment_distance(V(0.5, 1), V(0, 0), V(1, 0)) == doctest::Approx(1.0));
  CHECK(point_segment_distance(V(2, 0), V(0, 0), V(1, 0)) == doctest::Approx(1.0));
  const std::vector<V> bow = {V(0, 0), V(1, 1), V(1, 0), V(0, 1)};
  CHECK_FALSE(polyline_is_simple(bow, true));
  const std::vector<V> square = {V(0, 0), V(1, 0), V(1, 1), V(0, 1)};
  CHECK(polyline_is_simple(square, true));
}

}
