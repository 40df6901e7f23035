#pragma once

// Minimum-time simultaneous steering of N independent qubits: advance a common
// time until every target is reachable, then slow each system down (shrink its
// control bound) so that it lands exactly at the common time.

#include <vector>

#include "su2ctl/extremal.hpp"
#include "su2ctl/su2.hpp"

namespace su2ctl {

struct SyncSystem {
  SU2 target;
  double gamma_max;
};

struct SyncProblem {
  std::vector<SyncSystem> systems;
};

struct SyncPlan {
  double T_common = 0;
  std::vector<SyncSystem> systems;
  std::vector<DriftControlLaw> laws;     // laws[j].gamma is the effective bound of system j
  std::vector<double> individual_times;  // per-system minimum times
  int iterations = 0;                    // passes through the feasibility check
};

bool feasible_at(const SU2& target, double gamma, double T);

/// Smallest T > T0 at which the target becomes reachable. Requires infeasibility at T0.
double next_feasible_time(const SU2& target, double gamma, double T0);

/// Smallest gamma in (0, gamma_max] keeping the target reachable at exactly T.
double slowdown_gamma(const SU2& target, double gamma_max, double T);

SyncPlan synchronize(const SyncProblem& problem);

}  // namespace su2ctl
