#include "su2ctl/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "su2ctl/errors.hpp"

namespace su2ctl {

namespace {

const Matrix2c<double>& generator(int k) {
  static const Matrix2c<double> g[3] = {LieCoeffs{1, 0, 0}.matrix(), LieCoeffs{0, 1, 0}.matrix(),
                                        LieCoeffs{0, 0, 1}.matrix()};
  return g[k];
}

SU2 integrate(const ControlWaveform& w, double t_final, double dt, bool drift) {
  if (!(dt > 0)) throw InvalidInput("oracle step dt must be positive");
  if (!(t_final >= 0) || !std::isfinite(t_final)) throw InvalidInput("t_final must be non-negative");
  const double tau_final = 2.0 * t_final;
  if (tau_final == 0) return SU2::identity();
  const long steps = std::max(1L, static_cast<long>(std::ceil(tau_final / (2.0 * dt) - 1e-9)));
  const double h = tau_final / static_cast<double>(steps);
  const double bound = w.gamma + 1e-12;

  auto rhs = [&](double tau, const Matrix2c<double>& X) -> Matrix2c<double> {
    const auto [ux, uy] = w.u ? w.u(tau) : std::pair<double, double>{0.0, 0.0};
    if (std::hypot(ux, uy) > bound) {
      throw NormViolation("control norm " + std::to_string(std::hypot(ux, uy)) + " exceeds bound at tau = " +
                          std::to_string(tau));
    }
    Matrix2c<double> A = ux * generator(0) + uy * generator(1);
    if (drift) A += generator(2);
    return A * X;
  };

  Matrix2c<double> X = Matrix2c<double>::Identity();
  for (long i = 0; i < steps; ++i) {
    const double tau = h * static_cast<double>(i);
    const Matrix2c<double> k1 = rhs(tau, X);
    const Matrix2c<double> k2 = rhs(tau + 0.5 * h, X + (0.5 * h) * k1);
    const Matrix2c<double> k3 = rhs(tau + 0.5 * h, X + (0.5 * h) * k2);
    const Matrix2c<double> k4 = rhs(tau + h, X + h * k3);
    X += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    // project back onto SU(2) through the first row
    X = SU2(X(0, 0), X(0, 1)).matrix();
  }
  return SU2(X(0, 0), X(0, 1));
}

VerifyEntry check(const SU2& target, const SU2& reached, double tol) {
  const double d = distance(target, reached);
  return {target, reached, d, d <= tol};
}

}  // namespace

ControlWaveform zero_waveform() {
  return {[](double) { return std::pair<double, double>{0.0, 0.0}; }, 0.0};
}

ControlWaveform waveform(const DriftControlLaw& law) {
  return {[law](double tau) { return law.control(tau); }, law.gamma};
}

ControlWaveform waveform(const FreeControlLaw& law) {
  return {[law](double tau) { return law.control(tau); }, law.gamma};
}

ControlWaveform transformed_waveform(const FreeControlLaw& law) {
  return {[law](double tau) { return control_transform(law, 0.5 * tau); }, law.gamma};
}

SU2 integrate_drift(const ControlWaveform& w, double t_final, double dt) { return integrate(w, t_final, dt, true); }

SU2 integrate_free(const ControlWaveform& w, double t_final, double dt) { return integrate(w, t_final, dt, false); }

double VerifyReport::max_distance() const {
  double m = 0;
  for (const auto& e : entries) m = std::max(m, e.distance);
  return m;
}

VerifyReport verify_plan(const SyncPlan& plan, double dt, double tol) {
  VerifyReport r;
  r.tol = tol;
  for (std::size_t j = 0; j < plan.laws.size() && j < plan.systems.size(); ++j) {
    const auto& law = plan.laws[j];
    r.entries.push_back(check(plan.systems[j].target, integrate_drift(waveform(law), law.t_final, dt), tol));
    r.pass = r.pass && r.entries.back().pass;
  }
  if (plan.laws.size() != plan.systems.size()) r.pass = false;
  return r;
}

VerifyReport verify_plan(const MinTimeResult& result, double dt, double tol) {
  VerifyReport r;
  r.tol = tol;
  SU2 reached;
  if (const auto* d = result.drift_law()) {
    reached = integrate_drift(waveform(*d), d->t_final, dt);
  } else {
    const auto* f = result.free_law();
    reached = integrate_free(waveform(*f), f->t_final, dt);
  }
  r.entries.push_back(check(result.target, reached, tol));
  r.pass = r.entries.back().pass;
  return r;
}

}  // namespace su2ctl
