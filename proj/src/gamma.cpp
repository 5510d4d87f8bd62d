#include "pairable/gamma.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace pairable::gamma {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos series, g = 671/128, 14-term coefficient set; relative error around
// 1e-15 for arguments with real part >= 0.5.
constexpr double kLanczosG = 5.24218750000000000;
constexpr double kSqrt2Pi = 2.5066282746310005;
constexpr double kLanczosC0 = 0.999999999999997092;
constexpr double kLanczosCoef[14] = {
    57.1562356658629235,     -59.5979603554754912,
    14.1360979747417471,     -0.491913816097620199,
    0.339946499848118887e-4, 0.465236289270485756e-4,
    -0.983744753048795646e-4, 0.158088703224912494e-3,
    -0.210264441724104883e-3, 0.217439618115212643e-3,
    -0.164318106536763890e-3, 0.844182239838527433e-4,
    -0.261908384015814087e-4, 0.368991826595316234e-5};

// Core approximation, valid for Re(z) >= 0.5.
template <typename T>
T lanczos_gamma(T z) {
  T ser = T(kLanczosC0);
  T y = z;
  for (double c : kLanczosCoef) {
    y += 1.0;
    ser += c / y;
  }
  const T t = z + kLanczosG;
  return kSqrt2Pi * ser / z * std::pow(t, z + 0.5) * std::exp(-t);
}

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

}  // namespace

double euler_gamma(double x) {
  if (is_nonpositive_integer(x))
    throw PoleError("Gamma pole at non-positive integer argument");
  if (x < -1e6) throw UnsupportedError("argument reduction would not terminate");
  double shift = 1.0;
  double z = x;
  while (z < 0.5) {
    shift *= z;
    z += 1.0;
  }
  return lanczos_gamma(z) / shift;
}

double reciprocal_gamma(double x) {
  // The recurrence product hits an exact zero factor at the poles, so the
  // reciprocal is exactly 0 there without a special case.
  if (x < -1e6) throw UnsupportedError("argument reduction would not terminate");
  double prod = 1.0;
  double z = x;
  while (z < 0.5) {
    prod *= z;
    z += 1.0;
  }
  return prod / lanczos_gamma(z);
}

Complex reciprocal_gamma(Complex z) {
  if (z.real() < -1e6)
    throw UnsupportedError("argument reduction would not terminate");
  Complex prod = 1.0;
  while (z.real() < 0.5) {
    prod *= z;
    z += 1.0;
  }
  return prod / lanczos_gamma(z);
}

Generator Generator::neg_log() { return Generator(Kind::NegLog, 0.0, "neglog"); }

Generator Generator::exponential(double a) {
  if (!(a > 0.0)) throw DomainError("exponential generator requires a > 0");
  return Generator(Kind::Exponential, a, "exp");
}

Generator Generator::additive(double c) {
  if (!(c > 0.0)) throw DomainError("additive generator requires c > 0");
  return Generator(Kind::Additive, c, "add");
}

Generator Generator::logarithmic(double c) {
  if (!(c < 0.0)) throw DomainError("logarithmic generator requires c < 0");
  return Generator(Kind::Logarithmic, c, "log");
}

Generator Generator::multiplicative(double p) {
  if (!std::isfinite(p)) throw DomainError("generator exponent must be finite");
  return Generator(Kind::Multiplicative, p, "pow");
}

Generator Generator::custom(std::function<double(double)> phi,
                            std::string label) {
  Generator g(Kind::Custom, 0.0, std::move(label));
  for (int i = 1; i <= 99; ++i) {
    const double t = 0.01 * i;
    const double v = phi(t);
    if (!(v > 0.0))
      throw DomainError("custom generator must be positive on (0, 1)");
  }
  g.custom_ = std::move(phi);
  return g;
}

double Generator::value(double t) const {
  switch (kind_) {
    case Kind::NegLog: return -std::log(t);
    case Kind::Exponential: return std::pow(param_, t);
    case Kind::Additive: return param_ * t;
    case Kind::Logarithmic: return param_ * std::log(t);
    case Kind::Multiplicative: return std::pow(t, param_);
    case Kind::Custom: return custom_(t);
  }
  throw Error("unreachable generator kind");
}

double gamma_phi(const Generator& gen, double x, double tol) {
  const double e = x - 1.0;
  const bool integer_exponent = (e == std::floor(e));
  auto integrand = [&](double t) {
    const double phi = gen.value(t);
    if (std::isnan(phi)) throw NonFinite("generator returned NaN");
    if (phi < 0.0 && !integer_exponent)
      throw DomainError("fractional power of a negative generator value");
    return std::pow(phi, e);
  };
  return numerics::integrate_01(integrand, tol);
}

double closed_form(const Generator& gen, double x) {
  switch (gen.kind()) {
    case Generator::Kind::NegLog:
      return euler_gamma(x);
    case Generator::Kind::Exponential: {
      const double a = gen.parameter();
      if (a == 1.0 || x == 1.0) return 1.0;  // removable limits
      return (std::pow(a, x - 1.0) - 1.0) / ((x - 1.0) * std::log(a));
    }
    case Generator::Kind::Additive: {
      if (x == 0.0) throw DomainError("additive closed form has a pole at x = 0");
      return std::pow(gen.parameter(), x - 1.0) / x;
    }
    case Generator::Kind::Logarithmic:
      return std::pow(-gen.parameter(), x - 1.0) * euler_gamma(x);
    case Generator::Kind::Multiplicative: {
      const double p = gen.parameter();
      if (p == 0.0) return 1.0;
      const double denom = p * (x - 1.0) + 1.0;
      if (denom == 0.0)
        throw DomainError("power closed form has a pole at x = 1 - 1/p");
      return 1.0 / denom;
    }
    case Generator::Kind::Custom:
      throw UnsupportedError("no closed form for a custom generator");
  }
  throw Error("unreachable generator kind");
}

double sin_via_gamma(double z) {
  const double w = z / kPi;
  return kPi * reciprocal_gamma(w) * reciprocal_gamma(1.0 - w);
}

double cos_via_gamma(double z) {
  const double w = z / kPi;
  return kPi * reciprocal_gamma(0.5 - w) * reciprocal_gamma(0.5 + w);
}

double tan_via_gamma(double z) {
  const double c = cos_via_gamma(z);
  if (c == 0.0) throw DivisionByZero("cosine vanishes at this argument");
  return sin_via_gamma(z) / c;
}

double euler_identity_residual(double z) {
  const Complex lhs = numerics::exp_i(z);
  const Complex rhs(cos_via_gamma(z), sin_via_gamma(z));
  return std::abs(lhs - rhs);
}

double pythagoras_gamma_residual(double z) {
  const double w = z / kPi;
  const double inv_sin = reciprocal_gamma(w) * reciprocal_gamma(1.0 - w);
  const double inv_cos = reciprocal_gamma(0.5 - w) * reciprocal_gamma(0.5 + w);
  return std::abs(inv_sin * inv_sin + inv_cos * inv_cos - 1.0 / (kPi * kPi));
}

ProductIdentityResiduals product_identity_residuals(double z) {
  const double w = z / kPi;
  const double cos_z = kPi * reciprocal_gamma(0.5 - w) * reciprocal_gamma(0.5 + w);
  const double sin_z = kPi * reciprocal_gamma(w) * reciprocal_gamma(1.0 - w);
  const double sin_neg = kPi * reciprocal_gamma(-w) * reciprocal_gamma(1.0 + w);
  const double one_part = std::abs(1.0 - (cos_z * cos_z - sin_z * sin_neg));
  const double zero_part = std::abs(cos_z * sin_neg + sin_z * cos_z);
  return {one_part, zero_part};
}

}  // namespace pairable::gamma
