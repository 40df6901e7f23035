#pragma once

#include <array>
#include <ostream>
#include <string>
#include <vector>

namespace su2ctl::cli {

/// Sampled disk curve; rows are (omega, t, x, y).
struct Curve {
  std::string name;
  std::vector<std::array<double, 4>> rows;
};

/// Frontlines F_T (free omega column) for each T.
std::vector<Curve> frontline_curves(double gamma, const std::vector<double>& Ts, int n);

/// Drift extremal with omega_c = 1 + gamma^2 on [0, T_c].
Curve critical_curve(double gamma, int n);

/// The circular omega* = (1 + gamma^2)/2 trajectory, one full turn.
Curve separatrix_curve(double gamma, int n);

/// Drift extremals for each omega, from (1,0) until they return to the unit circle.
std::vector<Curve> synthesis_curves(double gamma, const std::vector<double>& omegas, int n);

/// Default synthesis frequencies: -3, -1, 0 and fixed multiples of omega*.
std::vector<double> default_synthesis_omegas(double gamma);

void write_csv(std::ostream& os, const Curve& c);
void write_svg(std::ostream& os, const std::vector<Curve>& curves);

}  // namespace su2ctl::cli
