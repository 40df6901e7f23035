#include "su2ctl/sync.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "su2ctl/detail/search.hpp"
#include "su2ctl/errors.hpp"
#include "su2ctl/mintime.hpp"
#include "su2ctl/reachable.hpp"

namespace su2ctl {

namespace {

void validate(const SyncProblem& problem) {
  if (problem.systems.empty()) throw InvalidInput("sync problem needs at least one system");
  for (std::size_t j = 0; j < problem.systems.size(); ++j) {
    const double g = problem.systems[j].gamma_max;
    if (!(g > 0) || !std::isfinite(g)) {
      throw InvalidInput("system " + std::to_string(j) + ": gamma_max must be positive");
    }
    if (problem.systems[j].target.unitarity_defect() > kGeometryTol) {
      throw InvalidInput("system " + std::to_string(j) + ": target is not in SU(2)");
    }
  }
}

}  // namespace

bool feasible_at(const SU2& target, double gamma, double T) {
  return contains_drift(disk_point(target), T, gamma);
}

double next_feasible_time(const SU2& target, double gamma, double T0) {
  if (feasible_at(target, gamma, T0)) {
    throw ContractError("next_feasible_time: target already reachable at T0 = " + std::to_string(T0));
  }
  return first_contact_time(disk_point(target), gamma, T0);
}

double slowdown_gamma(const SU2& target, double gamma_max, double T) {
  if (!feasible_at(target, gamma_max, T)) {
    throw Infeasible("slowdown_gamma: target not reachable at T = " + std::to_string(T));
  }
  const DiskPoint p = disk_point(target);
  if (T == 0) return gamma_max;
  // inside only through the tolerance band: already on the boundary
  if (!contains_drift_exact(p, T, gamma_max)) return gamma_max;
  // regions are nested increasing in gamma at fixed T
  return detail::bisect_predicate([&](double g) { return g > 0 && contains_drift_exact(p, T, g); }, 0.0, gamma_max,
                                  1e-12)
      .second;
}

SyncPlan synchronize(const SyncProblem& problem) {
  validate(problem);
  const std::size_t n = problem.systems.size();
  SyncPlan plan;
  plan.systems = problem.systems;

  std::vector<MinTimeResult> solo;
  solo.reserve(n);
  for (const auto& s : problem.systems) {
    solo.push_back(min_time_drift(s.target, s.gamma_max));
    plan.individual_times.push_back(solo.back().t_star);
  }

  std::size_t k_curr = 0;
  for (std::size_t j = 1; j < n; ++j) {
    if (plan.individual_times[j] > plan.individual_times[k_curr]) k_curr = j;
  }
  double T_curr = plan.individual_times[k_curr];

  while (true) {
    ++plan.iterations;
    std::vector<std::size_t> infeasible;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == k_curr) continue;
      if (!feasible_at(problem.systems[j].target, problem.systems[j].gamma_max, T_curr)) infeasible.push_back(j);
    }
    if (infeasible.empty()) break;
    // largest gap first, ties to the lowest index
    std::size_t j_bar = infeasible.front();
    double T_next = -1.0;
    for (std::size_t j : infeasible) {
      const double t = next_feasible_time(problem.systems[j].target, problem.systems[j].gamma_max, T_curr);
      if (t > T_next) T_next = t, j_bar = j;
    }
    if (!(T_next > T_curr)) throw SolverFailure("synchronization did not advance the common time");
    T_curr = T_next;
    k_curr = j_bar;
  }

  plan.T_common = T_curr;
  for (std::size_t j = 0; j < n; ++j) {
    const auto& s = problem.systems[j];
    const DriftControlLaw* own = solo[j].drift_law();
    if (own != nullptr && own->t_final == T_curr) {
      plan.laws.push_back(*own);
      continue;
    }
    const double g = slowdown_gamma(s.target, s.gamma_max, T_curr);
    plan.laws.push_back(synthesize_drift_law(s.target, T_curr, g, false));
  }
  return plan;
}

}  // namespace su2ctl
