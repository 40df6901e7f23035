#pragma once

// YAML problem files for the sync command. Grammar:
//
//   options:            # optional
//     dt: 1.0e-4        # oracle step, t-units
//     tol: 1.0e-6       # verification threshold
//   systems:
//     - target: {alpha_re: 0, alpha_im: 0, beta_re: 1, beta_im: 0}
//       gamma_max: 1.0
//     - target: {psi_f: 3.14159}   # e^{i psi_f} on the unit circle
//       gamma_max: 0.5

#include <optional>
#include <stdexcept>
#include <string>

#include "su2ctl/sync.hpp"

namespace su2ctl::cli {

struct ProblemFile {
  SyncProblem problem;
  std::optional<double> dt;
  std::optional<double> tol;
};

/// Thrown for unreadable or malformed files; what() carries "file:line: message".
class ProblemFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ProblemFile parse_problem(const std::string& text, const std::string& source = "<input>");
ProblemFile load_problem(const std::string& path);

}  // namespace su2ctl::cli
