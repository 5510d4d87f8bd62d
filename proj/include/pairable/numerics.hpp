#pragma once

// Low-level numerical kernels shared by the rest of the library: adaptive
// quadrature on the open unit interval, bracketed root finding, central
// finite differences, and a small amount of complex-number plumbing.

#include <complex>
#include <functional>

#include "pairable/errors.hpp"

namespace pairable::numerics {

// Complex arithmetic is std::complex<double>.  std::sqrt on it already uses
// the principal branch (non-negative real part, +i sqrt(|x|) on the negative
// real axis), which is the convention assumed everywhere below.
using Complex = std::complex<double>;

// e^{i theta} without going through std::exp(Complex).
inline Complex exp_i(double theta) { return {std::cos(theta), std::sin(theta)}; }

// Branch selector for quadratic roots and square-root branches.
enum class Sign { Plus, Minus };

inline double sign_factor(Sign s) { return s == Sign::Plus ? 1.0 : -1.0; }

// Default tolerances used across the library.  All three must be positive.
//   quad_abs      absolute quadrature error target
//   residual_pass pass threshold for functional-equation residuals
//   root_abs      root finder stopping tolerance
struct Tolerances {
  double quad_abs = 1e-10;
  double residual_pass = 1e-9;
  double root_abs = 1e-12;

  Tolerances() = default;
  Tolerances(double quad, double residual, double root);
};

// Integrates f over (0, 1) to an estimated absolute error <= tol.
//
// The rule is an open one: f is never evaluated at 0 or 1, so integrable
// endpoint singularities (log blow-ups, t^{x-1} with x in (0,1)) are fine.
// Globally adaptive bisection of the worst panel, 15-point Gauss-Kronrod per
// panel.  Throws NonConvergence once the subdivision limit (2^20 panel
// evaluations) is reached and NonFinite if f returns NaN or +-inf at an
// interior node.
double integrate_01(const std::function<double(double)>& f, double tol);

// Finds a root of f in [lo, hi] given f(lo) * f(hi) <= 0 (else NoBracket).
// Brent's method; the bisection fallback guarantees convergence.  Stops when
// |f(x)| <= tol or the bracket width shrinks below tol.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double tol);

// Central difference (f(x+h) - f(x-h)) / (2h).  Used as the independent
// cross-check for closed-form derivatives.
double derivative_fd(const std::function<double(double)>& f, double x,
                     double h = 1e-5);

}  // namespace pairable::numerics
