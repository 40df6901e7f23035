#pragma once

// JSON form of solved plans, shared by `solve --json`, `sync --json` and `verify`.
//
//   {"T_common": .., "dt": .., "tol": ..,
//    "systems": [{"target": {"alpha_re", "alpha_im", "beta_re", "beta_im"},
//                 "gamma_max": ..,
//                 "law": {"convention": "drift"|"free", "gamma", "omega", "phi", "t_final"},
//                 "omega_free": .., "distance": ..}]}

#include <variant>
#include <vector>

#include <json.hpp>

#include "su2ctl/mintime.hpp"
#include "su2ctl/oracle.hpp"
#include "su2ctl/sync.hpp"

namespace su2ctl::cli {

struct PlanEntry {
  SU2 target;
  double gamma_max;
  std::variant<DriftControlLaw, FreeControlLaw> law;
};

struct StoredPlan {
  double T_common = 0;
  double dt = kDefaultOracleDt;
  double tol = kVerifyTol;
  std::vector<PlanEntry> systems;
};

StoredPlan stored(const SyncPlan& plan, double dt, double tol);
StoredPlan stored(const MinTimeResult& result, double gamma_max, double dt, double tol);

/// Simulates every law with the oracle.
VerifyReport verify(const StoredPlan& plan);

nlohmann::json to_json(const StoredPlan& plan, const VerifyReport& report);

/// Throws std::invalid_argument on schema violations.
StoredPlan plan_from_json(const nlohmann::json& j);

}  // namespace su2ctl::cli
