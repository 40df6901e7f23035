#pragma once

// Fixed-step RK4 integration of the drift and driftless matrix ODEs under arbitrary
// controls. Used as ground truth for the closed forms and for synthesized plans.

#include <functional>
#include <utility>
#include <vector>

#include "su2ctl/extremal.hpp"
#include "su2ctl/mintime.hpp"
#include "su2ctl/su2.hpp"
#include "su2ctl/sync.hpp"
#include "su2ctl/tolerances.hpp"

namespace su2ctl {

/// Control as a function of physical time tau = 2t. Must be side-effect free.
struct ControlWaveform {
  std::function<std::pair<double, double>(double)> u;
  double gamma;
};

ControlWaveform zero_waveform();
ControlWaveform waveform(const DriftControlLaw& law);
ControlWaveform waveform(const FreeControlLaw& law);
/// Drift-system control obtained from a driftless law by the interaction-picture rotation.
ControlWaveform transformed_waveform(const FreeControlLaw& law);

/// X' = (sz + ux sx + uy sy) X in tau, from the identity up to tau = 2 t_final; dt in t-units.
SU2 integrate_drift(const ControlWaveform& w, double t_final, double dt = kDefaultOracleDt);

/// U' = (vx sx + vy sy) U, as above without the drift term.
SU2 integrate_free(const ControlWaveform& w, double t_final, double dt = kDefaultOracleDt);

struct VerifyEntry {
  SU2 target;
  SU2 reached;
  double distance;
  bool pass;
};

struct VerifyReport {
  std::vector<VerifyEntry> entries;
  double tol = kVerifyTol;
  bool pass = true;
  double max_distance() const;
};

VerifyReport verify_plan(const SyncPlan& plan, double dt = kDefaultOracleDt, double tol = kVerifyTol);
VerifyReport verify_plan(const MinTimeResult& result, double dt = kDefaultOracleDt, double tol = kVerifyTol);

}  // namespace su2ctl
