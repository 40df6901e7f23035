#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "su2ctl/extremal.hpp"
#include "su2ctl/su2.hpp"

namespace su2ctl {

enum class OmegaConvention { Drift, Free };

struct MinTimeResult {
  double t_star = 0;
  double omega_star = 0;  // in `convention`
  OmegaConvention convention = OmegaConvention::Drift;
  std::variant<DriftControlLaw, FreeControlLaw> law;
  SU2 target;
  double residual = 0;  // distance(target, closed-form final state)

  const DriftControlLaw* drift_law() const { return std::get_if<DriftControlLaw>(&law); }
  const FreeControlLaw* free_law() const { return std::get_if<FreeControlLaw>(&law); }

  /// Drift-convention frequency (free omega + 1 for driftless results).
  double omega_drift() const { return convention == OmegaConvention::Drift ? omega_star : omega_star + 1.0; }
  double omega_free() const { return convention == OmegaConvention::Free ? omega_star : omega_star - 1.0; }
};

struct OmegaBounds {
  double lo;
  double hi;
};

/// Admissible drift frequencies [1 - gamma K, 1 + gamma K], K = sqrt(r^2 / (1 - r^2)).
OmegaBounds omega_bounds(const DiskPoint& p, double gamma);

/// Closed-form minimum time to e^{i psi_f} on the circle, valid for 0 < gamma <= 1.
double boundary_min_time(double psi_f, double gamma);

/// Scan step of the drift first-contact search: min(0.01, pi / (100 gamma)).
double drift_scan_step(double gamma);

/// Driftless minimum time: smallest T with the target's disk point in the frontline region.
MinTimeResult min_time_free(const SU2& target, double gamma);

/// As above for the element with (1,1) entry `p` and real non-negative (1,2) entry.
MinTimeResult min_time_free(const DiskPoint& p, double gamma);

/// Minimum time for the drift system: smallest t with e^{-it} P_f in the frontline region at t.
MinTimeResult min_time_drift(const SU2& target, double gamma);

/// First time >= t_begin at which the drift system can sit on X_f's disk point.
/// Resolves narrow and tangential feasibility windows; always <= max(t_begin, pi / gamma).
double first_contact_time(const DiskPoint& p_f, double gamma, double t_begin);

/// Drift extremal with duration T reaching `target`, assuming e^{-iT} P_f lies on F_T.
/// When `polish_time` is set, (omega, t) are refined jointly and t may move by up to 1e-6.
DriftControlLaw synthesize_drift_law(const SU2& target, double T, double gamma, bool polish_time = false);

struct SweepPoint {
  double gamma;
  double t_star;
  bool jump = false;         // jump between this grid point and the next
  bool on_critical = false;  // P_f within 1e-3 of a critical trajectory in the jump cell
};

/// Minimum drift time over an ascending gamma grid, flagging left discontinuities.
std::vector<SweepPoint> min_time_sweep(const DiskPoint& p_f, const std::vector<double>& gamma_grid);

}  // namespace su2ctl
