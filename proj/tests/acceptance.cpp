// Acceptance checks: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "support.hpp"
#include "su2ctl/extremal.hpp"
#include "su2ctl/mintime.hpp"
#include "su2ctl/oracle.hpp"
#include "su2ctl/reachable.hpp"
#include "su2ctl/sync.hpp"
#include "su2ctl/detail/search.hpp"

using namespace su2ctl;
using namespace su2ctl::testing;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

std::string g17(double v) { return fmt("%.17g", v); }

int run_cli(const std::vector<std::string>& args, std::string& out) {
  std::ostringstream o, e;
  const int code = cli::run(args, o, e);
  out = o.str();
  return code;
}

SU2 random_interior_target(double r_max) {
  const DiskPoint p = random_disk_point(r_max);
  return SU2(p.as_complex(), std::polar(std::sqrt(1 - p.squared_norm()), uniform(-kPi, kPi)));
}

// 1. closed forms against the ODE oracle
Outcome closed_form() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    const double g = uniform(0.2, 5), w = uniform(-10, 10), phi = uniform(-kPi, kPi), t = uniform(0, kPi / g);
    const DriftControlLaw d{g, w, phi, t};
    const FreeControlLaw f{g, w, phi, t};
    worst = std::max(worst, distance(propagate(d), integrate_drift(waveform(d), t, 1e-4)));
    worst = std::max(worst, distance(propagate(f), integrate_free(waveform(f), t, 1e-4)));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst <= 1e-8 && secs < 30.0, fmt("max distance %.3e (<= 1e-8), %.2f s (< 30 s)", worst, secs)};
}

// 2. SWAP golden values
Outcome swap_golden() {
  double dt = 0, dw = 0;
  for (double g : {0.3, 0.5, 1.0}) {
    const MinTimeResult r = min_time_drift(SU2::swap_like(0.0), g);
    dt = std::max(dt, std::abs(r.t_star - kPi / (2 * g)));
    dw = std::max(dw, std::abs(r.omega_drift() - 1.0));
  }
  return {dt <= 1e-6 && dw <= 1e-6, fmt("max |t* - pi/(2g)| %.3e, max |omega - 1| %.3e (<= 1e-6)", dt, dw)};
}

// 3. boundary closed form
Outcome boundary_formula() {
  double worst = 0;
  for (double g : {0.4, 0.7, 1.0}) {
    for (double psi : {0.5, 1.5, kPi, 5.0}) {
      worst = std::max(worst, std::abs(min_time_drift(SU2::phase(psi), g).t_star - boundary_min_time(psi, g)));
    }
  }
  return {worst <= 1e-5, fmt("max deviation %.3e over 12 cases (<= 1e-5)", worst)};
}

// 4. collapse at pi / gamma
Outcome collapse() {
  bool ok = true;
  double worst = 0;
  for (double g : {0.3, 0.5, 1.0, 2.0, 4.0}) {
    const Frontline f = frontline(kPi / g, g, 512);
    for (const auto& s : f.samples) worst = std::max(worst, std::hypot(s.point.x + 1.0, s.point.y));
    ok = ok && !contains({-1.0, 0.0}, kPi / g - 0.01, g) && contains({-1.0, 0.0}, kPi / g, g);
  }
  return {ok && worst <= 1e-9, fmt("frontline offset from (-1,0) %.3e; (-1,0) excluded before and contained at pi/gamma: %s",
                                   worst, ok ? "yes" : "no")};
}

// 5. frontline geometry
Outcome sio_suite() {
  int violations = 0;
  for (int k = 0; k < 50; ++k) {
    const double g = uniform(0.2, 2);
    double t1 = uniform(0.01, 0.99 * kPi / g), t2 = uniform(0.01, 0.99 * kPi / g);
    if (t1 > t2) std::swap(t1, t2);
    const auto p1 = to_polyline(frontline(t1, g, 4096));
    const auto p2 = to_polyline(frontline(t2, g, 4096));
    if (t1 != t2 && polylines_cross(p1, p2)) ++violations;
    if (!polyline_is_simple(p1, false)) ++violations;
    if (!polyline_is_simple(p2, false)) ++violations;
    for (const auto& s : frontline_extension(t1, g, 4096, 20.0)) {
      if (!(region_margin(s.point, t1, g) > 0)) ++violations;
    }
  }
  return {violations == 0, fmt("%d violations over 50 pairs at 4096 samples", violations)};
}

// 6. monotonicity
Outcome monotonicity() {
  int bad_t = 0, bad_g = 0, bad_sweep = 0;
  for (int i = 0; i < 1000; ++i) {
    const DiskPoint p = random_disk_point(1.0);
    double g1 = uniform(0.2, 2), g2 = uniform(0.2, 2);
    if (g1 > g2) std::swap(g1, g2);
    double t1 = uniform(0, kPi / g1), t2 = uniform(0, kPi / g1);
    if (t1 > t2) std::swap(t1, t2);
    if (contains(p, t1, g1) && !contains(p, t2, g1)) ++bad_t;
    if (contains(p, t1, g1) && !contains(p, t1, g2)) ++bad_g;
  }
  for (int k = 0; k < 5; ++k) {
    const SU2 target = random_interior_target(0.95);
    double prev = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 50; ++i) {
      const double t = min_time_drift(target, 0.2 + 1.8 * i / 49).t_star;
      if (t > prev) ++bad_sweep;
      prev = t;
    }
  }
  return {bad_t + bad_g + bad_sweep == 0,
          fmt("violations: growth in T %d, nesting in gamma %d, t* vs gamma %d", bad_t, bad_g, bad_sweep)};
}

// 7. discontinuity on the critical trajectory
Outcome discontinuity() {
  const double g_seed = 0.5;
  const CriticalTrajectory seed = critical_trajectory(g_seed, 2);
  const DiskPoint p = drift_disk_traj(0.6 * seed.T_c, seed.omega_c, g_seed);
  // locate gamma_bar as the gamma whose critical trajectory passes through P
  const auto [g_bar, d_bar] = detail::golden_minimize([&](double g) { return critical_distance(p, g); }, 0.3, 0.7, 1e-15);
  const double h = 0.004;
  const int half = 12;
  std::string out;
  const int code = run_cli({"sweep", "--point", g17(p.x), g17(p.y), "--range", g17(g_bar - half * h),
                            g17(g_bar + half * h), "--n", std::to_string(2 * half + 1)},
                           out);
  if (code != 0) return {false, "sweep exited with " + std::to_string(code)};
  std::istringstream in(out);
  std::string line;
  std::getline(in, line);
  std::vector<double> gs, ts;
  std::vector<int> jumps;
  while (std::getline(in, line)) {
    double g, t;
    int j;
    char c;
    std::istringstream ss(line);
    ss >> g >> c >> t >> c >> j;
    gs.push_back(g), ts.push_back(t), jumps.push_back(j);
  }
  int flagged = -1, count = 0;
  for (std::size_t k = 0; k < jumps.size(); ++k) {
    if (jumps[k]) ++count, flagged = static_cast<int>(k);
  }
  if (count == 0) return {false, "no jump flagged"};
  const bool near = std::abs(gs[flagged] - g_bar) <= h + 1e-9 || std::abs(gs[flagged + 1] - g_bar) <= h + 1e-9;
  const double t_c = kPi / (2 * g_bar * std::sqrt(1 + g_bar * g_bar));
  const double left = ts[half - 1];
  const double right = ts[half];
  const double direct = min_time_drift(SU2::from_disk_point(p), g_bar).t_star;
  const bool ok = count == 1 && near && left >= t_c - 1e-3 && std::abs(right - direct) <= 1e-5;
  return {ok, fmt("gamma_bar %.9f (distance %.1e); jump after gamma %.6f; left %.6f >= T_c - 1e-3 = %.6f; right %.9f vs "
                  "direct %.9f",
                  g_bar, d_bar, gs[flagged], left, t_c - 1e-3, right, direct)};
}

// 8. omega bounds
Outcome omega_compliance() {
  int bad = 0;
  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    const SU2 target = random_interior_target(0.99);
    const double g = uniform(0.2, 3);
    const MinTimeResult r = min_time_drift(target, g);
    const OmegaBounds b = omega_bounds(disk_point(target), g);
    const double excess = std::max(b.lo - r.omega_drift(), r.omega_drift() - b.hi);
    worst = std::max(worst, excess);
    if (excess > 1e-9) ++bad;
  }
  return {bad == 0, fmt("%d of 200 solves outside [1 - gK, 1 + gK] +- 1e-9 (largest excess %.3e)", bad, worst)};
}

// 9. synchronization
Outcome sync_end_to_end() {
  const SyncPlan two = synchronize(SyncProblem{{{SU2::swap_like(0.0), 1.0}, {SU2::swap_like(0.0), 0.5}}});
  const VerifyReport r2 = verify_plan(two);
  const double dT = std::abs(two.T_common - kPi);
  const double dg = std::max(std::abs(two.laws[0].gamma - 0.5), std::abs(two.laws[1].gamma - 0.5));
  bool ok = dT <= 1e-6 && dg <= 1e-6 && r2.max_distance() <= 1e-6;

  SyncProblem three;
  for (int j = 0; j < 3; ++j) three.systems.push_back({random_interior_target(0.9), uniform(0.3, 1.5)});
  const SyncPlan p3 = synchronize(three);
  const VerifyReport r3 = verify_plan(p3);
  double t_max = 0, step = 1.0;
  for (std::size_t j = 0; j < 3; ++j) {
    t_max = std::max(t_max, p3.individual_times[j]);
    step = std::min(step, drift_scan_step(three.systems[j].gamma_max));
  }
  int early = 0;
  for (double T = t_max; T < p3.T_common - 1e-9; T += step) {
    bool all = true;
    for (const auto& s : three.systems) all = all && feasible_at(s.target, s.gamma_max, T);
    if (all) ++early;
  }
  ok = ok && r3.max_distance() <= 1e-6 && early == 0;
  return {ok, fmt("two-SWAP |T - pi| %.2e, max |gamma_eff - 0.5| %.2e, oracle %.2e; N=3 T_common %.6f, oracle %.2e, "
                  "earlier feasible grid times %d",
                  dT, dg, r2.max_distance(), p3.T_common, r3.max_distance(), early)};
}

// 10. Jacobian determinant
Outcome jacobian() {
  double worst = 0;
  int n = 0;
  while (n < 100) {
    const double g = uniform(0.2, 2), w = uniform(-3, 4), t = uniform(0.05, 4);
    const double a = std::hypot(g, 1 - w);
    // stay clear of the zero set t = k pi / a, omega = 1 + g^2
    const double frac = std::fmod(a * t, kPi);
    if (frac < 0.05 || frac > kPi - 0.05 || std::abs(w - 1 - g * g) < 0.05) continue;
    const double h = 1e-5;
    const DiskPoint pt = drift_disk_traj(t + h, w, g), mt = drift_disk_traj(t - h, w, g);
    const DiskPoint pw = drift_disk_traj(t, w + h, g), mw = drift_disk_traj(t, w - h, g);
    const double fd = (pt.x - mt.x) / (2 * h) * (pw.y - mw.y) / (2 * h) - (pt.y - mt.y) / (2 * h) * (pw.x - mw.x) / (2 * h);
    worst = std::max(worst, std::abs(jacobian_det(t, w, g) - fd) / std::abs(fd));
    ++n;
  }
  double zero = 0;
  for (double g : {0.3, 0.7, 1.0, 2.5}) {
    zero = std::max(zero, std::abs(jacobian_det(0.0, uniform(-3, 3), g)));
    zero = std::max(zero, std::abs(jacobian_det(uniform(0.1, 3), 1 + g * g, g)));
  }
  return {worst <= 1e-6 && zero < 1e-10, fmt("max relative error %.3e (<= 1e-6), max |det| on zero set %.1e", worst, zero)};
}

// curve export smoke test
Outcome curves_smoke() {
  const fs::path dir = fs::temp_directory_path() / "su2ctl_acceptance_curves";
  fs::remove_all(dir);
  std::string out;
  if (run_cli({"--out", dir.string(), "curves", "frontline"}, out) != 0) return {false, "frontline export failed"};
  if (run_cli({"--out", dir.string(), "curves", "synthesis"}, out) != 0) return {false, "synthesis export failed"};
  int files = 0;
  double worst = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    const std::string name = e.path().filename().string();
    if (e.path().extension() != ".csv") continue;
    std::ifstream in(e.path());
    std::string line;
    std::getline(in, line);
    if (line != "omega,t,x,y") return {false, name + ": bad header"};
    std::vector<std::array<double, 4>> rows;
    while (std::getline(in, line)) {
      std::array<double, 4> r{};
      char c;
      std::istringstream ss(line);
      ss >> r[0] >> c >> r[1] >> c >> r[2] >> c >> r[3];
      if (ss.fail()) return {false, name + ": unparsable row"};
      rows.push_back(r);
    }
    ++files;
    if (name == "critical.csv" || name == "separatrix.csv") continue;  // closed or cusped, not circle-to-circle
    for (const auto* r : {&rows.front(), &rows.back()}) worst = std::max(worst, std::abs(std::hypot((*r)[2], (*r)[3]) - 1));
  }
  return {files == 17 && worst <= 1e-9, fmt("%d CSV files parsed, endpoint offset from the unit circle %.2e", files, worst)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 closed-form propagators vs ODE oracle", closed_form},
      {"2 SWAP minimum time and resonant frequency", swap_golden},
      {"3 boundary targets vs closed-form time", boundary_formula},
      {"4 reachable-set collapse at pi/gamma", collapse},
      {"5 frontline disjointness, simplicity, extension", sio_suite},
      {"6 monotonicity in T and gamma", monotonicity},
      {"7 discontinuity on the critical trajectory", discontinuity},
      {"8 omega-bound compliance", omega_compliance},
      {"9 end-to-end synchronization", sync_end_to_end},
      {"10 Jacobian determinant", jacobian},
      {"curves export smoke test", curves_smoke},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
