#pragma once

// Reachable sets of the driftless system at time T: the part of the unit disk
// to the right of the frontline F_T, closed by the unit-circle arc through (1,0).
// F_T is the free extremal endpoint at time T for omega in [-W, W],
// W = sqrt(pi^2/T^2 - gamma^2); it collapses to (-1,0) once gamma T >= pi.
// The drift system reaches X_f at time T iff e^{-iT} P_f lies in that region.

#include <vector>

#include <Eigen/Core>

#include "su2ctl/su2.hpp"

namespace su2ctl {

struct FrontlineSample {
  double omega;
  DiskPoint point;
};

struct Frontline {
  double T;
  double gamma;
  std::vector<FrontlineSample> samples;  // ordered by increasing omega

  bool degenerate() const { return samples.size() == 1; }
};

/// Frontline half-range W = sqrt(pi^2/T^2 - gamma^2); 0 once gamma T >= pi.
double frontline_omega_limit(double T, double gamma);

/// Upper endpoint (omega = -W) on the unit circle.
DiskPoint frontline_endpoint(double T, double gamma);

/// Frontline point at parameter omega.
DiskPoint frontline_point(double T, double omega, double gamma);

/// n samples at equispaced omega in [-W, W]; the single point (-1,0) when gamma T >= pi.
Frontline frontline(double T, double gamma, int n);

/// Samples of the extension S_T (|omega| in (W, max_factor W]) on the positive-omega side.
std::vector<FrontlineSample> frontline_extension(double T, double gamma, int n, double max_factor);

struct FrontlineNearest {
  double omega;     // free-convention frequency of the nearest frontline point
  double distance;  // Euclidean distance to it
};

/// Nearest frontline point to P. Requires 0 < gamma T < pi.
FrontlineNearest nearest_on_frontline(const DiskPoint& p, double T, double gamma);

/// Signed distance from P to F_T: positive inside the region, negative outside.
/// T <= 0 gives -|P - (1,0)|; gamma T >= pi gives +1.
double region_margin(const DiskPoint& p, double T, double gamma);

/// Closed, boundary-inclusive (within kGeometryTol) membership in the driftless region.
bool contains(const DiskPoint& p, double T, double gamma);

/// Exact membership of the closed region, without the tolerance band.
bool contains_exact(const DiskPoint& p, double T, double gamma);

/// Membership of X_f's disk point in the drift reachable set at time T.
bool contains_drift(const DiskPoint& p_f, double T, double gamma);

bool contains_drift_exact(const DiskPoint& p_f, double T, double gamma);

/// region_margin of e^{-iT} P_f.
double drift_margin(const DiskPoint& p_f, double T, double gamma);

/// Polyline boundary of the driftless region: frontline samples then the unit-circle
/// arc through (1,0), counterclockwise. Independent of the analytic containment test.
class RegionSpec {
 public:
  /// Adaptive: starts at `base_samples` frontline samples and doubles until successive
  /// refinements agree within `tol` (or `max_samples` is reached).
  static RegionSpec build(double T, double gamma, int base_samples = 512, int max_samples = 1 << 16,
                          double tol = kGeometryTol);

  /// Fixed resolution, no refinement.
  static RegionSpec with_samples(double T, double gamma, int samples);

  double T() const { return T_; }
  double gamma() const { return gamma_; }
  bool full_disk() const { return full_; }
  const std::vector<Eigen::Vector2d>& vertices() const { return vertices_; }
  int frontline_samples() const { return frontline_samples_; }
  double refinement_error() const { return refinement_error_; }

  int winding_number(const DiskPoint& p) const;

  /// Winding-number membership, inclusive within `tol` of the polyline.
  bool contains(const DiskPoint& p, double tol = kGeometryTol) const;

  double boundary_distance(const DiskPoint& p) const;

 private:
  double T_ = 0;
  double gamma_ = 1;
  bool full_ = false;
  int frontline_samples_ = 0;
  double refinement_error_ = 0;
  std::vector<Eigen::Vector2d> vertices_;
};

struct CriticalSample {
  double t;
  DiskPoint point;
};

struct CriticalTrajectory {
  double gamma;
  double omega_c;  // 1 + gamma^2, drift convention
  double T_c;      // pi / (2 gamma sqrt(1 + gamma^2))
  std::vector<CriticalSample> samples;
};

CriticalTrajectory critical_trajectory(double gamma, int n);

/// Speed |d/dt (x, y)| of a drift extremal's disk trajectory.
double drift_traj_speed(double t, double omega, double gamma);

/// Minimum distance from P to the critical trajectory of gamma on t in [0, T_c].
double critical_distance(const DiskPoint& p, double gamma);

struct Separatrix {
  DiskPoint center;
  double radius;
  double omega_star;  // (1 + gamma^2) / 2
};

Separatrix separatrix(double gamma);

/// Determinant of d(x, y)/d(t, omega) for the drift disk trajectory.
double jacobian_det(double t, double omega, double gamma);

/// Polyline utilities used for boundary geometry checks.
bool segments_intersect(const Eigen::Vector2d& a0, const Eigen::Vector2d& a1, const Eigen::Vector2d& b0,
                        const Eigen::Vector2d& b1);
double point_segment_distance(const Eigen::Vector2d& p, const Eigen::Vector2d& a, const Eigen::Vector2d& b);
bool polylines_cross(const std::vector<Eigen::Vector2d>& a, const std::vector<Eigen::Vector2d>& b);
bool polyline_is_simple(const std::vector<Eigen::Vector2d>& line, bool closed);
double polyline_distance(const std::vector<Eigen::Vector2d>& a, const std::vector<Eigen::Vector2d>& b);
std::vector<Eigen::Vector2d> to_polyline(const Frontline& f);

}  // namespace su2ctl
