#pragma once

// Regular solution families of the four classical Cauchy functional
// equations and a residual check that a sampled function satisfies one of
// them:
//
//   additive        f(x+y) = f(x) + f(y)    f(x) = c x        on R
//   exponential     f(x+y) = f(x) f(y)      f(x) = a^x        on R
//   logarithmic     f(xy)  = f(x) + f(y)    f(x) = c log x    on (0, inf)
//   multiplicative  f(xy)  = f(x) f(y)      f(x) = x^p        on (0, inf)
//
// The two-function sine/cosine addition laws are listed in EquationKind for
// classification purposes but are handled by the verification layer, not by
// satisfies_cauchy.

#include <functional>

#include "pairable/grid.hpp"

namespace pairable::families {

enum class Domain { AllReals, PositiveReals, NonZeroReals };

bool contains(Domain d, double x);

enum class EquationKind {
  Additive,
  Exponential,
  Logarithmic,
  Multiplicative,
  SineAddition,
  CosineAddition
};

// The sine/cosine addition laws relate a pair (f, g); everything else is a
// single-function equation.
bool is_single_function(EquationKind eq);

enum class AdditionLaw { Sine, Cosine };

class CauchyFamily {
 public:
  enum class Kind { Additive, Exponential, Logarithmic, Multiplicative };

  static CauchyFamily additive(double c);
  static CauchyFamily exponential(double a);  // a > 0
  static CauchyFamily logarithmic(double c);
  static CauchyFamily multiplicative(double p);

  Kind kind() const { return kind_; }
  double parameter() const { return param_; }
  Domain domain() const;
  EquationKind equation() const;

  double eval(double x) const;  // DomainError outside the family domain
  std::function<double(double)> fn() const;

 private:
  CauchyFamily(Kind kind, double param) : kind_(kind), param_(param) {}

  Kind kind_;
  double param_;
};

struct CauchyCheck {
  bool satisfied = false;
  double max_residual = 0.0;
  double worst_x = 0.0;
  double worst_y = 0.0;
};

// Max residual of the named single-function equation over all ordered pairs
// from the grid.  The grid must lie inside the function's domain and be
// closed under the equation's combination (x+y or x*y); evaluation errors
// propagate.  UnsupportedError for the two-function equation kinds.
CauchyCheck satisfies_cauchy(const std::function<double(double)>& f,
                             EquationKind eq, const grid::Grid1& g, double tol);
CauchyCheck satisfies_cauchy(const CauchyFamily& fam, const grid::Grid1& g,
                             double tol);

}  // namespace pairable::families
