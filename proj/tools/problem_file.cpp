#include "problem_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <yaml-cpp/yaml.h>

namespace su2ctl::cli {

namespace {

[[noreturn]] void fail(const std::string& source, const YAML::Mark& mark, const std::string& msg) {
  // yaml-cpp marks are zero-based
  const int line = mark.line >= 0 ? mark.line + 1 : 0;
  throw ProblemFileError(source + ":" + std::to_string(line) + ": " + msg);
}

double number(const std::string& source, const YAML::Node& node, const std::string& key) {
  if (!node.IsScalar()) fail(source, node.Mark(), "'" + key + "' must be a number");
  double v;
  if (!YAML::convert<double>::decode(node, v) || !std::isfinite(v)) {
    fail(source, node.Mark(), "'" + key + "' must be a finite number, got '" + node.Scalar() + "'");
  }
  return v;
}

double required(const std::string& source, const YAML::Node& map, const std::string& key) {
  const YAML::Node n = map[key];
  if (!n) fail(source, map.Mark(), "missing '" + key + "'");
  return number(source, n, key);
}

SU2 parse_target(const std::string& source, const YAML::Node& node) {
  if (!node.IsMap()) fail(source, node.Mark(), "target must be a mapping");
  if (node["psi_f"]) {
    if (node.size() != 1) fail(source, node.Mark(), "psi_f targets take no other fields");
    return SU2::phase(number(source, node["psi_f"], "psi_f"));
  }
  const double ar = required(source, node, "alpha_re"), ai = required(source, node, "alpha_im");
  const double br = required(source, node, "beta_re"), bi = required(source, node, "beta_im");
  const double n2 = ar * ar + ai * ai + br * br + bi * bi;
  if (std::abs(n2 - 1.0) > 1e-9) {
    fail(source, node.Mark(), "target is not unitary: |alpha|^2 + |beta|^2 = " + std::to_string(n2));
  }
  return SU2({ar, ai}, {br, bi});
}

}  // namespace

ProblemFile parse_problem(const std::string& text, const std::string& source) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    fail(source, e.mark, e.msg);
  }
  if (!root.IsMap()) fail(source, root.Mark(), "top level must be a mapping with a 'systems' list");
  for (const auto& kv : root) {
    const auto key = kv.first.as<std::string>();
    if (key != "systems" && key != "options") fail(source, kv.first.Mark(), "unknown key '" + key + "'");
  }

  ProblemFile pf;
  if (const YAML::Node opts = root["options"]) {
    if (!opts.IsMap()) fail(source, opts.Mark(), "'options' must be a mapping");
    for (const auto& kv : opts) {
      const auto key = kv.first.as<std::string>();
      const double v = number(source, kv.second, key);
      if (!(v > 0)) fail(source, kv.second.Mark(), "'" + key + "' must be positive");
      if (key == "dt") {
        pf.dt = v;
      } else if (key == "tol") {
        pf.tol = v;
      } else {
        fail(source, kv.first.Mark(), "unknown option '" + key + "'");
      }
    }
  }

  const YAML::Node systems = root["systems"];
  if (!systems) fail(source, root.Mark(), "missing 'systems'");
  if (!systems.IsSequence()) fail(source, systems.Mark(), "'systems' must be a list");
  for (const auto& s : systems) {
    if (!s.IsMap()) fail(source, s.Mark(), "each system must be a mapping");
    if (!s["target"]) fail(source, s.Mark(), "system without 'target'");
    const SU2 target = parse_target(source, s["target"]);
    const double g = required(source, s, "gamma_max");
    if (!(g > 0)) fail(source, s["gamma_max"].Mark(), "gamma_max must be positive, got " + s["gamma_max"].Scalar());
    pf.problem.systems.push_back({target, g});
  }
  if (pf.problem.systems.empty()) fail(source, systems.Mark(), "'systems' is empty");
  return pf;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProblemFileError(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str(), path);
}

}  // namespace su2ctl::cli
