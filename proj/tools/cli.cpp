#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "curves.hpp"
#include "plan_io.hpp"
#include "problem_file.hpp"
#include "su2ctl/errors.hpp"
#include "su2ctl/mintime.hpp"
#include "su2ctl/oracle.hpp"
#include "su2ctl/reachable.hpp"
#include "su2ctl/sync.hpp"

namespace su2ctl::cli {

namespace fs = std::filesystem;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9e", v);
  return buf;
}

struct Globals {
  double gamma = 1.0;
  bool json = false;
  std::string out_dir;
  double dt = kDefaultOracleDt;
  double tol = kVerifyTol;
  CLI::Option* gamma_opt = nullptr;
  CLI::Option* dt_opt = nullptr;
  CLI::Option* tol_opt = nullptr;

  bool gamma_set() const { return gamma_opt->count() > 0; }
};

struct TargetArgs {
  bool swap = false;
  bool identity = false;
  std::optional<double> psi;
  std::vector<double> alpha, beta, point;

  void add_to(CLI::App* app) {
    app->add_flag("--swap", swap, "SWAP-like target (alpha = 0, beta = 1)");
    app->add_flag("--identity", identity, "identity target");
    app->add_option("--psi", psi, "boundary target e^{i psi}");
    app->add_option("--alpha", alpha, "(1,1) entry: re im")->expected(2);
    app->add_option("--beta", beta, "(1,2) entry: re im")->expected(2);
    app->add_option("--point", point, "disk point x y; beta taken real and non-negative")->expected(2);
  }

  SU2 target() const {
    const int kinds = int(swap) + int(identity) + int(psi.has_value()) + int(!alpha.empty() || !beta.empty()) +
                      int(!point.empty());
    if (kinds != 1) throw InputError("give exactly one of --swap, --identity, --psi, --alpha/--beta, --point");
    if (swap) return SU2::swap_like(0.0);
    if (identity) return SU2::identity();
    if (psi) {
      if (!std::isfinite(*psi)) throw InputError("--psi must be finite");
      return SU2::phase(*psi);
    }
    if (!point.empty()) {
      const DiskPoint p{point[0], point[1]};
      if (!std::isfinite(p.x) || !std::isfinite(p.y) || p.norm() > 1.0 + kGeometryTol) {
        throw InputError("--point must lie in the closed unit disk");
      }
      return SU2::from_disk_point(p);
    }
    if (alpha.size() != 2 || beta.size() != 2) throw InputError("--alpha and --beta must be given together");
    const double n2 = alpha[0] * alpha[0] + alpha[1] * alpha[1] + beta[0] * beta[0] + beta[1] * beta[1];
    if (!std::isfinite(n2) || std::abs(n2 - 1.0) > 1e-9) {
      throw InputError("|alpha|^2 + |beta|^2 must equal 1, got " + std::to_string(n2));
    }
    return SU2({alpha[0], alpha[1]}, {beta[0], beta[1]});
  }
};

void check_positive(double v, const char* name) {
  if (!(v > 0) || !std::isfinite(v)) throw InputError(std::string(name) + " must be positive");
}

void write_file(const Globals& g, const std::string& name, const std::string& content) {
  if (g.out_dir.empty()) return;
  fs::create_directories(g.out_dir);
  std::ofstream f(fs::path(g.out_dir) / name);
  if (!f) throw InputError("cannot write " + (fs::path(g.out_dir) / name).string());
  f << content;
}

void print_plan_text(std::ostream& out, const StoredPlan& plan, const VerifyReport& rep) {
  out << "T_common      " << num(plan.T_common) << "\n";
  for (std::size_t j = 0; j < plan.systems.size(); ++j) {
    const auto& e = plan.systems[j];
    std::visit(
        [&](const auto& law) {
          out << "system " << j << "  gamma_eff " << num(law.gamma) << "  omega " << num(law.omega) << "  phi "
              << num(law.phi) << "  t_final " << num(law.t_final);
        },
        e.law);
    if (j < rep.entries.size()) out << "  distance " << sci(rep.entries[j].distance);
    out << "\n";
  }
  out << "verification  " << (rep.pass ? "pass" : "FAIL") << " (tol " << sci(rep.tol) << ")\n";
}

int cmd_solve(const Globals& g, const TargetArgs& t, bool driftless, std::ostream& out) {
  check_positive(g.gamma, "--gamma");
  const SU2 target = t.target();
  const MinTimeResult r = driftless ? min_time_free(target, g.gamma) : min_time_drift(target, g.gamma);
  const StoredPlan plan = stored(r, g.gamma, g.dt, g.tol);
  const VerifyReport rep = verify(plan);
  const nlohmann::json j = to_json(plan, rep);
  write_file(g, "solve.json", j.dump(2) + "\n");
  if (g.json) {
    out << j.dump(2) << "\n";
  } else {
    const double phi = std::visit([](const auto& l) { return l.phi; }, r.law);
    out << "system        " << (driftless ? "driftless" : "drift") << "\n"
        << "gamma         " << num(g.gamma) << "\n"
        << "t_star        " << num(r.t_star) << "\n"
        << "omega_drift   " << num(r.omega_drift()) << "\n"
        << "omega_free    " << num(r.omega_free()) << "\n"
        << "phi           " << num(phi) << "\n"
        << "residual      " << sci(r.residual) << "\n"
        << "oracle        " << sci(rep.entries.front().distance) << "\n";
  }
  return rep.pass ? kOk : kNumericalFailure;
}

int cmd_sync(const Globals& g, const std::string& file, std::ostream& out) {
  ProblemFile pf = load_problem(file);
  const double dt = g.dt_opt->count() ? g.dt : pf.dt.value_or(kDefaultOracleDt);
  const double tol = g.tol_opt->count() ? g.tol : pf.tol.value_or(kVerifyTol);
  check_positive(dt, "dt");
  check_positive(tol, "tol");
  const SyncPlan sp = synchronize(pf.problem);
  const StoredPlan plan = stored(sp, dt, tol);
  const VerifyReport rep = verify(plan);
  const nlohmann::json j = to_json(plan, rep);
  write_file(g, "plan.json", j.dump(2) + "\n");
  if (g.json) {
    out << j.dump(2) << "\n";
  } else {
    print_plan_text(out, plan, rep);
  }
  return rep.pass ? kOk : kNumericalFailure;
}

int cmd_verify(const Globals& g, const std::string& file, std::ostream& out) {
  std::ifstream in(file);
  if (!in) throw InputError(file + ": cannot open");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(file + ": " + e.what());
  }
  StoredPlan plan = plan_from_json(j);
  if (g.dt_opt->count()) plan.dt = g.dt;
  if (g.tol_opt->count()) plan.tol = g.tol;
  const VerifyReport rep = verify(plan);
  if (g.json) {
    out << to_json(plan, rep).dump(2) << "\n";
  } else {
    print_plan_text(out, plan, rep);
  }
  return rep.pass ? kOk : kNumericalFailure;
}

int cmd_curves(const Globals& g, const std::string& kind, std::vector<double> Ts, std::vector<double> omegas, int n,
               bool svg, std::ostream& out) {
  std::vector<Curve> curves;
  double gamma = g.gamma;
  if (kind == "frontline") {
    if (!g.gamma_set()) gamma = 1.0;
    if (Ts.empty()) Ts = {1.0, 1.1, 2.0, 3.0};
    curves = frontline_curves(gamma, Ts, n);
  } else if (kind == "critical" || kind == "separatrix" || kind == "synthesis") {
    if (!g.gamma_set()) gamma = 1.0 / std::numbers::sqrt2;
    check_positive(gamma, "--gamma");
    if (kind == "critical") {
      curves.push_back(critical_curve(gamma, n));
    } else if (kind == "separatrix") {
      curves.push_back(separatrix_curve(gamma, n));
    } else {
      if (omegas.empty()) omegas = default_synthesis_omegas(gamma);
      curves = synthesis_curves(gamma, omegas, n);
      curves.push_back(separatrix_curve(gamma, n));
      curves.push_back(critical_curve(gamma, n));
    }
  } else {
    throw InputError("unknown curve kind '" + kind + "' (frontline, critical, separatrix, synthesis)");
  }

  out << "kind " << kind << "  gamma " << num(gamma) << "\n";
  if (kind == "critical" || kind == "synthesis") {
    const CriticalTrajectory ct = critical_trajectory(gamma, 2);
    out << "critical omega_c " << num(ct.omega_c) << "  T_c " << num(ct.T_c) << "\n";
  }
  if (kind == "separatrix" || kind == "synthesis") {
    const Separatrix s = separatrix(gamma);
    out << "separatrix omega_star " << num(s.omega_star) << "  center " << num(s.center.x) << " " << num(s.center.y)
        << "  radius " << num(s.radius) << "\n";
  }
  for (const auto& c : curves) {
    std::ostringstream csv;
    write_csv(csv, c);
    if (g.out_dir.empty()) {
      out << "# " << c.name << "\n" << csv.str();
    } else {
      write_file(g, c.name + ".csv", csv.str());
      out << "wrote " << (fs::path(g.out_dir) / (c.name + ".csv")).string() << "\n";
    }
  }
  if (svg) {
    if (g.out_dir.empty()) throw InputError("--svg needs --out");
    std::ostringstream s;
    write_svg(s, curves);
    write_file(g, kind + ".svg", s.str());
    out << "wrote " << (fs::path(g.out_dir) / (kind + ".svg")).string() << "\n";
  }
  return kOk;
}

int cmd_sweep(const Globals& g, const TargetArgs& t, const std::vector<double>& range, int n, std::ostream& out) {
  if (range.size() != 2) throw InputError("--range takes two values");
  const double lo = range[0], hi = range[1];
  if (!(lo > 0) || !std::isfinite(hi) || !(hi > lo)) throw InputError("--range needs 0 < lo < hi");
  if (n < 2) throw InputError("--n must be at least 2");
  const SU2 target = t.target();
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i) grid[i] = i == n - 1 ? hi : lo + (hi - lo) * i / (n - 1);
  const auto pts = min_time_sweep(disk_point(target), grid);
  std::ostringstream csv;
  csv << "gamma,t_star,jump\n";
  for (const auto& p : pts) csv << num(p.gamma) << "," << num(p.t_star) << "," << (p.jump ? 1 : 0) << "\n";
  write_file(g, "sweep.csv", csv.str());
  out << csv.str();
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum-time control of single-qubit unitaries", "su2ctl"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  g.gamma_opt = app.add_option("--gamma", g.gamma, "control bound (default 1; curves pick per kind)");
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--out", g.out_dir, "directory for exported files");
  g.dt_opt = app.add_option("--dt", g.dt, "oracle step in t-units");
  g.tol_opt = app.add_option("--tol", g.tol, "verification tolerance");

  TargetArgs solve_target, sweep_target;
  bool driftless = false;
  auto* solve = app.add_subcommand("solve", "minimum-time control for one target");
  solve_target.add_to(solve);
  solve->add_flag("--driftless", driftless, "solve the driftless (interaction-picture) problem");

  std::string problem_file;
  auto* sync = app.add_subcommand("sync", "simultaneous steering of several systems");
  sync->add_option("file", problem_file, "YAML problem file")->required();

  std::string kind;
  std::vector<double> Ts, omegas;
  int n_samples = 401;
  bool svg = false;
  auto* curves = app.add_subcommand("curves", "emit frontline, critical, separatrix or synthesis curves");
  curves->add_option("kind", kind, "frontline | critical | separatrix | synthesis")->required();
  curves->add_option("--T", Ts, "frontline times");
  curves->add_option("--omega", omegas, "synthesis frequencies (drift convention)");
  curves->add_option("--n", n_samples, "samples per curve");
  curves->add_flag("--svg", svg, "also write an SVG rendering");

  std::vector<double> range;
  int n_sweep = 50;
  auto* sweep = app.add_subcommand("sweep", "minimum time over a gamma grid");
  sweep_target.add_to(sweep);
  sweep->add_option("--range", range, "gamma range lo hi")->expected(2)->required();
  sweep->add_option("--n", n_sweep, "grid points");

  std::string plan_file;
  auto* verify_cmd = app.add_subcommand("verify", "re-simulate a JSON plan");
  verify_cmd->add_option("plan", plan_file, "plan JSON written by solve/sync --json")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (g.dt_opt->count()) check_positive(g.dt, "--dt");
    if (g.tol_opt->count()) check_positive(g.tol, "--tol");
    if (*solve) return cmd_solve(g, solve_target, driftless, out);
    if (*sync) return cmd_sync(g, problem_file, out);
    if (*curves) return cmd_curves(g, kind, Ts, omegas, n_samples, svg, out);
    if (*sweep) return cmd_sweep(g, sweep_target, range, n_sweep, out);
    if (*verify_cmd) return cmd_verify(g, plan_file, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ProblemFileError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const BoundaryPoint& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const OutOfValidity& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace su2ctl::cli
