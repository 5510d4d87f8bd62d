#pragma once

// Representers attached to a single function.
//
// Given f, its sine representer is
//     f_S(x) = f(2x) / (2 f(x)),
// obtained from the sine addition law at y = x.  Given g, the cosine
// representer solves g(2x) = g(x)^2 - f(x)^2 for the companion f:
//     f_C(x) = +-sqrt(g(x)^2 - g(2x)),
// which may be complex when the radicand is negative.  Both carry a sign
// ambiguity when derived from a square root, so every cosine-side result is
// branch-tagged.
//
// For the four standard families both representers admit closed forms, and
// setting f_S(x) = f(x + T) (resp. the cosine analogue) yields a period
// T(x); those period formulas are exposed as per-branch callables.  The
// exponential family's cosine representer vanishes identically, so there the
// period equation f(x + T) = 0 has no finite solution and the period op
// throws NoFinitePeriod.  Printed variants of some of these formulas that
// disagree with the defining equations are collected in the errata table.

#include <functional>
#include <vector>

#include "pairable/errors.hpp"
#include "pairable/families.hpp"
#include "pairable/numerics.hpp"

namespace pairable::representers {

using numerics::Complex;
using numerics::Sign;

enum class Base { Sine, Cosine };

// Which representer, and for Cosine which square-root branch.
struct RepresenterKind {
  Base base = Base::Sine;
  Sign sign = Sign::Plus;
};

// f_S(x) = f(2x) / (2 f(x)).  Throws ZeroDenominator when f(x) underflows.
double sine_representer(const std::function<double(double)>& f, double x);

// f_C(x) = sign * sqrt(g(x)^2 - g(2x)), principal branch of the complex
// square root.  With real_only set, a negative radicand is a DomainError
// instead of a complex value.
Complex cosine_representer(const std::function<double(double)>& g, double x,
                           Sign sign, bool real_only = false);

// Closed form of the requested representer for one of the four families.
// Matches the generic definition above; where a published variant differs,
// see the errata table.
Complex closed_form_representer(const families::CauchyFamily& family,
                                RepresenterKind kind, double x);

// Per-branch period functions T(x) solving f_S(x) = f(x + T) (Sine) or the
// cosine analogue.  Families whose period is constant still expose it as a
// callable of x.  Throws NoFinitePeriod when no finite T exists
// (exponential family, Cosine base) and NoRealRoot pointwise when a branch
// needs a negative radicand.
struct RepresenterPeriod {
  std::vector<std::function<double(double)>> branches;
};

RepresenterPeriod representer_period(const families::CauchyFamily& family,
                                     RepresenterKind kind);

// Residual of the periodicity relation at x for a candidate period T:
//   Sine:   | f(2x) / (2 f(x)) - f(x + 2T) |
//   Cosine: | companion(x) - g(x + 2T) |, minimised over the sign of the
//           companion value since the representer is branch-ambiguous.
double periodicity_residual(const families::CauchyFamily& family,
                            RepresenterKind kind, double T, double x);

// Parity of a function and of its representers on a symmetric probe grid.
// An even or odd f has an even sine representer, and an even f has an even
// cosine representer; the report states the classifications and whether
// those implications held on the grid.
enum class Parity { Even, Odd, Neither };

struct ParityReport {
  Parity function = Parity::Neither;
  Parity sine_representer = Parity::Neither;
  Parity cosine_representer = Parity::Neither;  // plus branch, complex-aware
  bool implications_hold = false;
};

// Classification is by max |h(x) - h(-x)| (Even) or max |h(x) + h(-x)|
// (Odd) within tol scaled by the size of h; Neither otherwise.  The grid
// must be symmetric about 0 and avoid zeros of f (the sine representer is
// undefined there).
ParityReport parity_check(const std::function<double(double)>& f,
                          const grid::Grid1& grid, double tol);

}  // namespace pairable::representers
