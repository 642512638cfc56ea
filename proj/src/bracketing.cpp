#include "quintell/bracketing.hpp"

#include <cmath>

#include "quintell/errors.hpp"

namespace quintell {

double bisect(const std::function<double(double)>& g, double lo, double hi, double width,
              int max_iterations) {
  double g_lo = g(lo);
  if (g_lo == 0.0) return lo;
  const double g_hi = g(hi);
  if (g_hi == 0.0) return hi;
  if ((g_lo < 0.0) == (g_hi < 0.0)) throw DomainError("bisect: no sign change on the bracket");
  for (int i = 0; i < max_iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo < width || mid == lo || mid == hi) return mid;
    const double g_mid = g(mid);
    if (g_mid == 0.0) return mid;
    if ((g_mid < 0.0) == (g_lo < 0.0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  throw ConvergenceError("bisect: iteration cap reached");
}

std::vector<double> scan_roots(const std::function<double(double)>& g, double lo, double hi,
                               int grid_points, double width) {
  std::vector<double> roots;
  if (!(hi > lo) || grid_points < 2) return roots;
  const double step = (hi - lo) / (grid_points - 1);
  double prev_t = lo;
  double prev_g = g(lo);
  for (int i = 1; i < grid_points; ++i) {
    const double t = i + 1 == grid_points ? hi : lo + step * i;
    const double value = g(t);
    if (std::isfinite(prev_g) && prev_g == 0.0) {
      roots.push_back(prev_t);
    } else if (std::isfinite(prev_g) && std::isfinite(value) && value != 0.0 &&
               (prev_g < 0.0) != (value < 0.0)) {
      roots.push_back(bisect(g, prev_t, t, width));
    }
    prev_t = t;
    prev_g = value;
  }
  if (std::isfinite(prev_g) && prev_g == 0.0) roots.push_back(prev_t);
  return roots;
}

}  // namespace quintell
