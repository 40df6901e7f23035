#include "plan_io.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace su2ctl::cli {

using nlohmann::json;

StoredPlan stored(const SyncPlan& plan, double dt, double tol) {
  StoredPlan s{plan.T_common, dt, tol, {}};
  for (std::size_t j = 0; j < plan.systems.size(); ++j) {
    s.systems.push_back({plan.systems[j].target, plan.systems[j].gamma_max, plan.laws[j]});
  }
  return s;
}

StoredPlan stored(const MinTimeResult& result, double gamma_max, double dt, double tol) {
  return {result.t_star, dt, tol, {{result.target, gamma_max, result.law}}};
}

VerifyReport verify(const StoredPlan& plan) {
  VerifyReport r;
  r.tol = plan.tol;
  for (const auto& e : plan.systems) {
    SU2 reached;
    if (const auto* d = std::get_if<DriftControlLaw>(&e.law)) {
      reached = integrate_drift(waveform(*d), d->t_final, plan.dt);
    } else {
      const auto& f = std::get<FreeControlLaw>(e.law);
      reached = integrate_free(waveform(f), f.t_final, plan.dt);
    }
    const double d = distance(e.target, reached);
    r.entries.push_back({e.target, reached, d, d <= plan.tol});
    r.pass = r.pass && r.entries.back().pass;
  }
  return r;
}

json to_json(const StoredPlan& plan, const VerifyReport& report) {
  json systems = json::array();
  for (std::size_t j = 0; j < plan.systems.size(); ++j) {
    const auto& e = plan.systems[j];
    json law;
    double omega_free;
    std::visit(
        [&](const auto& l) {
          law = {{"gamma", l.gamma}, {"omega", l.omega}, {"phi", l.phi}, {"t_final", l.t_final}};
        },
        e.law);
    if (const auto* d = std::get_if<DriftControlLaw>(&e.law)) {
      law["convention"] = "drift";
      omega_free = d->omega - 1.0;
    } else {
      law["convention"] = "free";
      omega_free = std::get<FreeControlLaw>(e.law).omega;
    }
    json entry = {{"target",
                   {{"alpha_re", e.target.alpha().real()},
                    {"alpha_im", e.target.alpha().imag()},
                    {"beta_re", e.target.beta().real()},
                    {"beta_im", e.target.beta().imag()}}},
                  {"gamma_max", e.gamma_max},
                  {"law", law},
                  {"omega_free", omega_free}};
    if (j < report.entries.size()) entry["distance"] = report.entries[j].distance;
    systems.push_back(entry);
  }
  return {{"T_common", plan.T_common},
          {"dt", plan.dt},
          {"tol", plan.tol},
          {"pass", report.pass},
          {"systems", systems}};
}

namespace {

double field(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw std::invalid_argument(where + ": missing numeric field '" + key + "'");
  }
  const double v = j.at(key).get<double>();
  if (!std::isfinite(v)) throw std::invalid_argument(where + ": non-finite '" + key + "'");
  return v;
}

}  // namespace

StoredPlan plan_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("plan must be a JSON object");
  StoredPlan p;
  p.T_common = field(j, "T_common", "plan");
  p.dt = j.contains("dt") ? field(j, "dt", "plan") : kDefaultOracleDt;
  p.tol = j.contains("tol") ? field(j, "tol", "plan") : kVerifyTol;
  if (!(p.dt > 0) || !(p.tol > 0)) throw std::invalid_argument("plan: dt and tol must be positive");
  if (!j.contains("systems") || !j.at("systems").is_array()) {
    throw std::invalid_argument("plan: missing 'systems' array");
  }
  int k = 0;
  for (const auto& s : j.at("systems")) {
    const std::string where = "systems[" + std::to_string(k++) + "]";
    if (!s.is_object() || !s.contains("target") || !s.contains("law")) {
      throw std::invalid_argument(where + ": needs 'target' and 'law'");
    }
    const json& t = s.at("target");
    const json& l = s.at("law");
    const SU2 target({field(t, "alpha_re", where), field(t, "alpha_im", where)},
                     {field(t, "beta_re", where), field(t, "beta_im", where)});
    const double gamma = field(l, "gamma", where), omega = field(l, "omega", where);
    const double phi = field(l, "phi", where), tf = field(l, "t_final", where);
    if (!(gamma > 0) || !(tf >= 0)) throw std::invalid_argument(where + ": invalid law");
    const std::string conv = l.value("convention", "drift");
    PlanEntry e{target, s.contains("gamma_max") ? field(s, "gamma_max", where) : gamma, DriftControlLaw{}};
    if (conv == "drift") {
      e.law = DriftControlLaw{gamma, omega, phi, tf};
    } else if (conv == "free") {
      e.law = FreeControlLaw{gamma, omega, phi, tf};
    } else {
      throw std::invalid_argument(where + ": unknown convention '" + conv + "'");
    }
    p.systems.push_back(e);
  }
  return p;
}

}  // namespace su2ctl::cli
