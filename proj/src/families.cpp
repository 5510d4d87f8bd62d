#include "pairable/families.hpp"

#include <cmath>

namespace pairable::families {

bool contains(Domain d, double x) {
  switch (d) {
    case Domain::AllReals: return std::isfinite(x);
    case Domain::PositiveReals: return std::isfinite(x) && x > 0.0;
    case Domain::NonZeroReals: return std::isfinite(x) && x != 0.0;
  }
  return false;
}

bool is_single_function(EquationKind eq) {
  return eq != EquationKind::SineAddition && eq != EquationKind::CosineAddition;
}

CauchyFamily CauchyFamily::additive(double c) {
  return CauchyFamily(Kind::Additive, c);
}

CauchyFamily CauchyFamily::exponential(double a) {
  if (!(a > 0.0)) throw DomainError("exponential family requires a > 0");
  return CauchyFamily(Kind::Exponential, a);
}

CauchyFamily CauchyFamily::logarithmic(double c) {
  return CauchyFamily(Kind::Logarithmic, c);
}

CauchyFamily CauchyFamily::multiplicative(double p) {
  return CauchyFamily(Kind::Multiplicative, p);
}

Domain CauchyFamily::domain() const {
  switch (kind_) {
    case Kind::Additive:
    case Kind::Exponential:
      return Domain::AllReals;
    case Kind::Logarithmic:
    case Kind::Multiplicative:
      return Domain::PositiveReals;
  }
  return Domain::AllReals;
}

EquationKind CauchyFamily::equation() const {
  switch (kind_) {
    case Kind::Additive: return EquationKind::Additive;
    case Kind::Exponential: return EquationKind::Exponential;
    case Kind::Logarithmic: return EquationKind::Logarithmic;
    case Kind::Multiplicative: return EquationKind::Multiplicative;
  }
  return EquationKind::Additive;
}

double CauchyFamily::eval(double x) const {
  if (!contains(domain(), x))
    throw DomainError("argument outside the family domain");
  switch (kind_) {
    case Kind::Additive: return param_ * x;
    case Kind::Exponential: return std::pow(param_, x);
    case Kind::Logarithmic: return param_ * std::log(x);
    case Kind::Multiplicative: return std::pow(x, param_);
  }
  throw Error("unreachable family kind");
}

std::function<double(double)> CauchyFamily::fn() const {
  return [fam = *this](double x) { return fam.eval(x); };
}

CauchyCheck satisfies_cauchy(const std::function<double(double)>& f,
                             EquationKind eq, const grid::Grid1& g,
                             double tol) {
  if (!is_single_function(eq))
    throw UnsupportedError("addition laws relate a pair; use the pair verifier");
  const bool multiplicative_argument =
      eq == EquationKind::Logarithmic || eq == EquationKind::Multiplicative;
  const bool multiplicative_value =
      eq == EquationKind::Exponential || eq == EquationKind::Multiplicative;

  CauchyCheck check;
  const auto pts = g.points();
  for (double x : pts) {
    for (double y : pts) {
      const double combined = multiplicative_argument ? x * y : x + y;
      const double lhs = f(combined);
      const double rhs =
          multiplicative_value ? f(x) * f(y) : f(x) + f(y);
      const double r = std::abs(lhs - rhs);
      if (r > check.max_residual) {
        check.max_residual = r;
        check.worst_x = x;
        check.worst_y = y;
      }
    }
  }
  check.satisfied = check.max_residual <= tol;
  return check;
}

CauchyCheck satisfies_cauchy(const CauchyFamily& fam, const grid::Grid1& g,
                             double tol) {
  return satisfies_cauchy(fam.fn(), fam.equation(), g, tol);
}

}  // namespace pairable::families
