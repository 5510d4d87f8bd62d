#pragma once

// Period functions of sine- and cosine-addition pairs built from the regular
// Cauchy families, together with the scaleability function of the power
// family and the bridge between translation periods and scaling factors.
//
// A pair (f, g) with g(x) = f(x + T) satisfies the sine addition law
//
//     (S)  f(x+y) = f(x) g(y) + f(y) g(x)
//
// or the cosine addition law (with the roles of g and f as stated per
// operation)
//
//     (C)  g(x+y) = g(x) g(y) - f(x) f(y)
//
// for the period (function) T computed here.  Every closed form is
// re-verified at construction by substituting it back into its defining
// equation; a disagreement beyond a scaled 1e-6 threshold raises
// InternalConsistency.  That residual check is the mechanism that separates
// the correct closed forms from the published variants collected in the
// errata table.

#include <functional>
#include <vector>

#include "pairable/families.hpp"
#include "pairable/numerics.hpp"

namespace pairable::pairing {

using numerics::Complex;
using numerics::Sign;

struct PeriodValue {
  Complex value{0.0, 0.0};
  bool finite = true;    // false encodes "no finite period"
  double residual = 0.0; // defining-equation residual at the query point
};

struct PeriodResult {
  // Branches in deterministic order; quadratic roots list the minus branch
  // first.  Empty with any_period = true for the degenerate zero-slope case
  // in which every T works.
  std::vector<PeriodValue> values;
  bool any_period = false;
};

// Sine-addition period of the additive pair f(x) = c x, g = f(. + T):
//     T_c(x, y) = 1/c - 2xy / (x+y),
// i.e. 1/c minus the harmonic mean.  SingularLocus on x + y = 0; the
// degenerate slope c = 0 returns the any-period marker.
PeriodResult period_additive_S(double c, double x, double y);

// Period of the swapped additive pair f = g(. + T), g(x) = c x:
//     T(x, y) = (x + y - c x y) / (c (x+y) - 1),
// verified against the equation x + y + T = c (xy + T (x+y)) it was stated
// with.  SingularLocus on c (x+y) = 1.  See the errata table for how this
// equation relates to a direct expansion of the sine addition law.
PeriodResult period_additive_S_dual(double c, double x, double y);

// |T - T_dual| at (x, y); the direct-difference probe for period equality.
double period_equality_residual(double c, double x, double y);

// Cosine-addition period of g(x) = c x, f = g(. + T): both roots of
//     T^2 + (x+y) T + (x+y)/c = 0,
// complex when the discriminant is negative.  T = 0 appears exactly when
// y = -x.
PeriodResult period_additive_C(double c, double x, double y);

// Same quadratic constrained to a fixed sum d = x + y:
//     T_c(d) = (-d +- sqrt(d^2 - 4 d / c)) / 2.
PeriodResult period_additive_C_sum_constrained(double c, double d);

// The d = c slice T(c) = (-c +- sqrt(c^2 - 4)) / 2 continued to complex c,
// with its derivative
//     dT/dc = (-1 +- c / sqrt(c^2 - 4)) / 2.
// The derivative has no zero on either branch (the would-be critical point
// at c^2 = -4/3 comes from dropping the factor 1/2 on the radical term; see
// the errata table).  BranchPole at c = +-2.
struct BranchDerivative {
  Complex period;
  Complex derivative;
};
BranchDerivative extremum_probe(Complex c, Sign branch);

// Sine-addition period of f(x) = a^x: the constant T = -log_a 2.
// DegenerateBase at a = 1.
PeriodResult period_exponential_S(double a);

// The swapped exponential sine pair has no period: a^T = 0 has no solution.
// Always reports false; the certificate is the infimum of a^T over
// T in [-50, 50], the quantity that would need to vanish.
struct DualExistence {
  bool exists = false;
  double certificate_infimum = 0.0;
};
DualExistence dual_exponential_S_exists(double a);

// Cosine-addition periods of f(x) = a^x, g = f(. + T): q = a^T solves
// q^2 - q - 1 = 0, so the real branch is the golden ratio,
//     T = log_a((1 + sqrt 5)/2),
// and the second branch is complex (principal logarithm of (1 - sqrt 5)/2).
// Reported real branch first.
PeriodResult period_exponential_C(double a);

// The swapped form g(x) = a^x, f = g(. + T) admits no finite period
// (formally T = log_a 0 = -inf); encoded as a single non-finite entry.
PeriodResult period_exponential_C_gf(double a);

// Sine-addition period of the power pair f(x) = x^p on (0, inf).
//   p = 1: delegates to the additive case with c = 1.
//   p = 2: both roots of the quadratic obtained by expanding
//          (x+y)^2 = x^2 (y+T)^2 + y^2 (x+T)^2, namely
//          (x^2+y^2) T^2 + 2xy(x+y) T + 2x^2y^2 - (x+y)^2 = 0.
// UnsupportedError for other p; NoRealRoot if the discriminant is negative.
PeriodResult period_power_S(double p, double x, double y);

// Scaleability factor of the power pair: g(x) = f(t x) with
//     t(x, y) = (x + y) / (2^{1/p} x y),
// the multiplicative-domain counterpart of a translation period.
double scaleability_power(double p, double x, double y);

// Checks the equivalence "T is a period for (f, g) on the addition law iff
// t = exp . T is a scaleability function for (f o log, g o log) on the
// multiplicative-argument law".  Returns the per-side verdicts; equivalent
// means both sides agree (both pass or both fail).
struct BridgeReport {
  bool equivalent = false;
  bool translation_pass = false;
  bool scaling_pass = false;
  double translation_residual = 0.0;
  double scaling_residual = 0.0;
};
BridgeReport scaling_translation_bridge_check(
    const std::function<double(double)>& f,
    const std::function<double(double)>& g,
    const std::function<double(double, double)>& T,
    families::AdditionLaw law, const grid::Grid2& grid, double tol);

}  // namespace pairable::pairing
