#pragma once

// Gamma functions of arbitrary generators and the Gamma-only trigonometry
// built on the reflection formula.
//
// The generalized Gamma function of a generator phi : (0,1) -> (0, +inf) is
//
//     Gamma_phi(x) = integral_0^1 phi(t)^(x-1) dt,
//
// which recovers the Euler Gamma function for phi(t) = -log t.  Four named
// generator families have closed forms that the quadrature is checked
// against:
//
//     exponential  phi(t) = a^t,      Gamma_phi(x) = (a^(x-1) - 1) / ((x-1) log a)
//     additive     phi(t) = c t,      Gamma_phi(x) = c^(x-1) / x          (c > 0)
//     logarithmic  phi(t) = c log t,  Gamma_phi(x) = (-c)^(x-1) Gamma(x)  (c < 0)
//     power        phi(t) = t^p,      Gamma_phi(x) = 1 / (p (x-1) + 1)
//
// The trigonometric layer expresses sin, cos, tan, the Euler identity and the
// Pythagorean identity purely through reciprocal Gamma values via
// Gamma(z) Gamma(1-z) = pi / sin(pi z).  Working with 1/Gamma keeps every
// identity pole-free: the reciprocal is entire and exactly zero at
// non-positive integers.

#include <functional>
#include <string>

#include "pairable/numerics.hpp"

namespace pairable::gamma {

using numerics::Complex;

// Euler Gamma for real non-pole arguments.  Lanczos rational approximation
// plus the recurrence Gamma(x+1) = x Gamma(x) for argument reduction; no
// reflection is used, so products like Gamma(x) Gamma(1-x) are computed from
// two independent evaluations.  Relative error <= 1e-12 on [0.5, 20].
// Throws PoleError at non-positive integers.
double euler_gamma(double x);

// 1 / Gamma as an entire function: exactly 0 at non-positive integers.
double reciprocal_gamma(double x);
Complex reciprocal_gamma(Complex z);

// A generator for the generalized Gamma integral.  Factory constructors
// validate the family parameter ranges; custom generators are probed for
// positivity on t = 0.01, 0.02, ..., 0.99 at construction.
class Generator {
 public:
  enum class Kind { NegLog, Exponential, Additive, Logarithmic, Multiplicative, Custom };

  static Generator neg_log();
  static Generator exponential(double a);     // a > 0
  static Generator additive(double c);        // c > 0
  static Generator logarithmic(double c);     // c < 0
  static Generator multiplicative(double p);  // any real p
  static Generator custom(std::function<double(double)> phi,
                          std::string label = "custom");

  Kind kind() const { return kind_; }
  double parameter() const { return param_; }
  const std::string& label() const { return label_; }

  double value(double t) const;  // phi(t)

 private:
  Generator(Kind kind, double param, std::string label)
      : kind_(kind), param_(param), label_(std::move(label)) {}

  Kind kind_;
  double param_ = 0.0;
  std::function<double(double)> custom_;
  std::string label_;
};

// Gamma_phi(x) by adaptive quadrature.  Integrability on (0,1) is the
// caller's responsibility; a divergent integrand surfaces as NonConvergence
// or NonFinite.  DomainError if phi(t)^(x-1) would take a fractional power of
// a negative base.
double gamma_phi(const Generator& gen, double x, double tol = 1e-10);

// Closed form of Gamma_phi for the named families (UnsupportedError for
// custom generators, DomainError at genuine poles).
double closed_form(const Generator& gen, double x);

// Trigonometry through reciprocal Gamma values:
//   sin z = pi / (Gamma(z/pi) Gamma(1 - z/pi))
//   cos z = pi / (Gamma(1/2 - z/pi) Gamma(1/2 + z/pi))
double sin_via_gamma(double z);
double cos_via_gamma(double z);
double tan_via_gamma(double z);  // DivisionByZero where cos vanishes

// | e^{iz} - (cos z + i sin z) | with the right-hand side in Gamma form.
double euler_identity_residual(double z);

// Residual of 1/(Gamma(z/pi) Gamma(1-z/pi))^2
//          + 1/(Gamma(1/2-z/pi) Gamma(1/2+z/pi))^2 = 1/pi^2.
double pythagoras_gamma_residual(double z);

// Residuals of the expanded product e^{iz} e^{-iz} = 1 in Gamma form: the
// real part ("1 = cos^2 - sin(z) sin(-z)") and the imaginary part
// ("0 = cos(z) sin(-z) + sin(z) cos(z)").  The zero side is handled exactly
// by the reciprocal-Gamma zeros at z = 0.
struct ProductIdentityResiduals {
  double one_part;
  double zero_part;
};
ProductIdentityResiduals product_identity_residuals(double z);

}  // namespace pairable::gamma
