#pragma once

#include <functional>
#include <vector>

namespace quintell {

/// Sign-change roots of g on [lo, hi]: g is sampled on `grid_points`
/// equispaced points and every sign change (or exact zero) is bisected until
/// the bracket is narrower than `width`.  Samples where g is not finite are
/// skipped.  Deterministic for a fixed g.
std::vector<double> scan_roots(const std::function<double(double)>& g, double lo, double hi,
                               int grid_points, double width);

/// Bisection of a bracketed sign change; at most `max_iterations` halvings,
/// then ConvergenceError.  DomainError when g(lo) and g(hi) share a sign.
double bisect(const std::function<double(double)>& g, double lo, double hi, double width,
              int max_iterations = 200);

}  // namespace quintell
