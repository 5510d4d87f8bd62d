#pragma once

// Sample grids for residual checks.  Endpoints are included exactly; a
// refinement with 2n-1 points reproduces the n-point grid bitwise, which the
// grid-refinement properties rely on.

#include <cmath>
#include <functional>
#include <vector>

#include "pairable/errors.hpp"

namespace pairable::grid {

struct Grid1 {
  double lo = -3.0;
  double hi = 3.0;
  int n = 25;

  std::vector<double> points() const;
};

// Cartesian grid over [lo, hi]^2 with an optional exclusion predicate for
// singular loci (e.g. |x + y| below a margin for the additive period).
struct Grid2 {
  double lo = -3.0;
  double hi = 3.0;
  int n = 25;
  std::function<bool(double, double)> exclude;  // true => skip the point

  std::vector<double> axis() const { return Grid1{lo, hi, n}.points(); }
};

inline std::vector<double> Grid1::points() const {
  if (n < 2 || !(hi > lo)) throw DomainError("grid needs n >= 2 and hi > lo");
  std::vector<double> pts(static_cast<size_t>(n));
  const double step = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) pts[static_cast<size_t>(i)] = lo + i * step;
  pts.front() = lo;
  pts.back() = hi;
  return pts;
}

// Excludes points with |x + y| < margin (the sine-period singular locus).
inline std::function<bool(double, double)> exclude_sum_below(double margin) {
  return [margin](double x, double y) { return std::abs(x + y) < margin; };
}

}  // namespace pairable::grid
