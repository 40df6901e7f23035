#pragma once

#include <cmath>
#include <utility>

namespace su2ctl::detail {

/// Golden-section search for a minimum of f on [lo, hi]. Returns (argmin, f(argmin)).
template <typename F>
std::pair<double, double> golden_minimize(F&& f, double lo, double hi, double xtol = 1e-14, int max_iter = 200) {
  constexpr double inv_phi = 0.6180339887498949;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < max_iter && (hi - lo) > xtol * (1.0 + std::abs(lo) + std::abs(hi)); ++i) {
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  const double flo = f(lo), fhi = f(hi);
  double best = c, fbest = fc;
  if (fd < fbest) best = d, fbest = fd;
  if (flo < fbest) best = lo, fbest = flo;
  if (fhi < fbest) best = hi, fbest = fhi;
  return {best, fbest};
}

/// Bisection for the transition of a predicate that is false at lo and true at hi.
/// Returns the final bracket (lo false, hi true).
template <typename Pred>
std::pair<double, double> bisect_predicate(Pred&& pred, double lo, double hi, double width) {
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {lo, hi};
}

}  // namespace su2ctl::detail
