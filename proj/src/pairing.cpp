#include "pairable/pairing.hpp"

#include <algorithm>
#include <cmath>

namespace pairable::pairing {

namespace {

// Closed forms are re-checked against their defining equations when the
// result is constructed; anything beyond this scaled threshold is a bug in
// the formula, not noise.
void internal_check(double residual, double scale) {
  if (!(residual <= 1e-6 * std::max(1.0, scale)))
    throw InternalConsistency("closed-form period failed its residual check");
}

double sine_residual_linear(double c, double x, double y, double T) {
  // f(u) = c u, g = f(. + T), residual of (S) at (x, y).
  const double lhs = c * (x + y);
  const double rhs = (c * x) * (c * (y + T)) + (c * y) * (c * (x + T));
  return std::abs(lhs - rhs);
}

double scale_linear(double c, double x, double y, double T) {
  return std::abs(c * c) * (std::abs(x * (y + T)) + std::abs(y * (x + T))) +
         std::abs(c * (x + y));
}

}  // namespace

PeriodResult period_additive_S(double c, double x, double y) {
  PeriodResult result;
  if (c == 0.0) {
    // f vanishes identically, so (S) holds for every T.
    result.any_period = true;
    return result;
  }
  const double s = x + y;
  if (s == 0.0) throw SingularLocus("additive sine period undefined on x + y = 0");
  // Harmonic-mean term; the y = x case is simplified algebraically so that
  // T(x, x) = 1/c - x is bitwise exact, not just exact up to rounding.
  const double harmonic = (y == x) ? x : (2.0 * x * y) / s;
  const double T = 1.0 / c - harmonic;
  const double residual = sine_residual_linear(c, x, y, T);
  internal_check(residual, scale_linear(c, x, y, T));
  result.values.push_back({Complex(T, 0.0), true, residual});
  return result;
}

PeriodResult period_additive_S_dual(double c, double x, double y) {
  if (c == 0.0) throw DomainError("dual additive period needs c != 0");
  const double s = x + y;
  const double denom = c * s - 1.0;
  if (denom == 0.0)
    throw SingularLocus("dual additive period undefined on c (x + y) = 1");
  const double T = (s - c * x * y) / denom;
  // Residual of the equation this formula was stated with.
  const double residual = std::abs(s + T - c * (x * y + T * s));
  internal_check(residual, std::abs(s + T) + std::abs(c * (x * y + T * s)));
  PeriodResult result;
  result.values.push_back({Complex(T, 0.0), true, residual});
  return result;
}

double period_equality_residual(double c, double x, double y) {
  if (c == 0.0) throw DomainError("period equality needs c != 0");
  const PeriodResult primal = period_additive_S(c, x, y);
  const PeriodResult dual = period_additive_S_dual(c, x, y);
  return std::abs(primal.values[0].value.real() - dual.values[0].value.real());
}

namespace {

double cosine_residual_linear(double c, double x, double y, Complex T) {
  // g(u) = c u, f = g(. + T), residual of (C) at (x, y) in complex
  // arithmetic so that complex branches are checked on equal terms.
  const Complex lhs = c * (x + y);
  const Complex rhs =
      (c * x) * (c * y) - (c * (x + T)) * (c * (y + T));
  return std::abs(lhs - rhs);
}

}  // namespace

PeriodResult period_additive_C(double c, double x, double y) {
  PeriodResult result;
  if (c == 0.0) {
    result.any_period = true;
    return result;
  }
  const double s = x + y;
  const double disc = s * (s - 4.0 / c);
  const Complex root = std::sqrt(Complex(disc, 0.0));
  const Complex half_s(0.5 * s, 0.0);
  for (Complex T : {-half_s - 0.5 * root, -half_s + 0.5 * root}) {
    const double residual = cosine_residual_linear(c, x, y, T);
    internal_check(residual, std::abs(c * c) * (1.0 + std::norm(T) +
                                                x * x + y * y));
    result.values.push_back({T, true, residual});
  }
  return result;
}

PeriodResult period_additive_C_sum_constrained(double c, double d) {
  if (c == 0.0) throw DomainError("sum-constrained period needs c != 0");
  const double disc = d * d - 4.0 * d / c;
  const Complex root = std::sqrt(Complex(disc, 0.0));
  PeriodResult result;
  for (Complex T : {0.5 * (-d - root), 0.5 * (-d + root)}) {
    const double residual = std::abs(T * T + d * T + d / c);
    internal_check(residual, std::norm(T) + std::abs(d * T) + std::abs(d / c));
    result.values.push_back({T, true, residual});
  }
  return result;
}

BranchDerivative extremum_probe(Complex c, Sign branch) {
  const Complex disc = c * c - 4.0;
  if (disc == Complex(0.0, 0.0))
    throw BranchPole("branch point of sqrt(c^2 - 4) at c = +-2");
  const Complex root = std::sqrt(disc);
  const double s = numerics::sign_factor(branch);
  BranchDerivative out;
  out.period = 0.5 * (-c + s * root);
  out.derivative = 0.5 * (-1.0 + s * c / root);
  return out;
}

PeriodResult period_exponential_S(double a) {
  if (!(a > 0.0)) throw DomainError("exponential pair requires a > 0");
  if (a == 1.0) throw DegenerateBase("a = 1 gives the constant pair");
  const double T = -std::log(2.0) / std::log(a);
  // Constant period: the defining residual is checked relative to the size
  // of f(x + y) over a probe grid, and the maximum is reported.
  double max_rel = 0.0;
  for (double x : {-2.0, -0.5, 0.0, 1.0, 2.0}) {
    for (double y : {-2.0, -1.0, 0.5, 1.5, 2.0}) {
      const double lhs = std::pow(a, x + y);
      const double rhs = std::pow(a, x) * std::pow(a, y + T) +
                         std::pow(a, y) * std::pow(a, x + T);
      max_rel = std::max(max_rel, std::abs(lhs - rhs) / std::abs(lhs));
    }
  }
  internal_check(max_rel, 1.0);
  PeriodResult result;
  result.values.push_back({Complex(T, 0.0), true, max_rel});
  return result;
}

DualExistence dual_exponential_S_exists(double a) {
  if (!(a > 0.0)) throw DomainError("exponential pair requires a > 0");
  if (a == 1.0) throw DegenerateBase("a = 1 gives the constant pair");
  // The swapped pair would need a^T = 0; a^T is bounded away from zero on
  // any bounded T range, and the infimum over [-50, 50] is the certificate.
  DualExistence out;
  out.exists = false;
  out.certificate_infimum = std::min(std::pow(a, -50.0), std::pow(a, 50.0));
  return out;
}

PeriodResult period_exponential_C(double a) {
  if (!(a > 0.0)) throw DomainError("exponential pair requires a > 0");
  if (a == 1.0) throw DegenerateBase("a = 1 gives the constant pair");
  const double sqrt5 = std::sqrt(5.0);
  const double log_a = std::log(a);
  PeriodResult result;

  const double q1 = 0.5 * (1.0 + sqrt5);  // golden ratio
  const double T1 = std::log(q1) / log_a;
  const double r1 = std::abs(std::pow(a, 2.0 * T1) - std::pow(a, T1) - 1.0);
  internal_check(r1, 1.0);
  result.values.push_back({Complex(T1, 0.0), true, r1});

  const double q2 = 0.5 * (1.0 - sqrt5);  // negative companion root
  const Complex T2 = std::log(Complex(q2, 0.0)) / log_a;
  const Complex a_T2 = std::exp(T2 * log_a);
  const double r2 = std::abs(a_T2 * a_T2 - a_T2 - 1.0);
  internal_check(r2, 1.0);
  result.values.push_back({T2, true, r2});
  return result;
}

PeriodResult period_exponential_C_gf(double a) {
  if (!(a > 0.0)) throw DomainError("exponential pair requires a > 0");
  if (a == 1.0) throw DegenerateBase("a = 1 gives the constant pair");
  // a^T = 0 has no finite solution; formally T = log_a 0 = -inf.
  PeriodResult result;
  result.values.push_back({Complex(0.0, 0.0), false, 0.0});
  return result;
}

namespace {

double power2_residual(double x, double y, double T) {
  const double s = x + y;
  return std::abs(s * s - x * x * (y + T) * (y + T) -
                  y * y * (x + T) * (x + T));
}

}  // namespace

PeriodResult period_power_S(double p, double x, double y) {
  if (!(x > 0.0) || !(y > 0.0))
    throw DomainError("power pair lives on (0, inf)");
  if (p == 1.0) return period_additive_S(1.0, x, y);
  if (p != 2.0)
    throw UnsupportedError("power-pair period implemented for p in {1, 2}");

  const double A = x * x + y * y;
  const double B = 2.0 * x * y * (x + y);
  const double C = 2.0 * x * x * y * y - (x + y) * (x + y);
  const double disc = B * B - 4.0 * A * C;
  if (disc < 0.0) throw NoRealRoot("negative discriminant for the p = 2 period");
  const double root = std::sqrt(disc);
  // Stable quadratic roots; ordered minus branch first.
  const double q = -0.5 * (B + std::copysign(root, B));
  double t_minus, t_plus;
  if (B >= 0.0) {
    t_minus = q / A;
    t_plus = C / q;
  } else {
    t_plus = q / A;
    t_minus = C / q;
  }
  PeriodResult result;
  for (double T : {t_minus, t_plus}) {
    const double residual = power2_residual(x, y, T);
    const double scale = (x + y) * (x + y) + x * x * (y + T) * (y + T) +
                         y * y * (x + T) * (x + T);
    internal_check(residual, scale);
    result.values.push_back({Complex(T, 0.0), true, residual});
  }
  return result;
}

double scaleability_power(double p, double x, double y) {
  if (p == 0.0) throw DomainError("scaleability needs p != 0");
  if (!(x > 0.0) || !(y > 0.0))
    throw DomainError("power pair lives on (0, inf)");
  const double t = (x + y) / (std::pow(2.0, 1.0 / p) * x * y);
  const double residual =
      std::abs(std::pow(x + y, p) - 2.0 * std::pow(t * x * y, p));
  internal_check(residual, std::abs(std::pow(x + y, p)));
  return t;
}

BridgeReport scaling_translation_bridge_check(
    const std::function<double(double)>& f,
    const std::function<double(double)>& g,
    const std::function<double(double, double)>& T,
    families::AdditionLaw law, const grid::Grid2& grid, double tol) {
  const auto axis = grid.axis();
  BridgeReport report;
  // Scaled-side functions live on (0, inf) via u = e^x.
  auto F = [&](double u) { return f(std::log(u)); };
  auto G = [&](double u) { return g(std::log(u)); };

  for (double x : axis) {
    for (double y : axis) {
      if (grid.exclude && grid.exclude(x, y)) continue;
      const double Tv = T(x, y);
      const double u = std::exp(x);
      const double v = std::exp(y);
      const double tv = std::exp(Tv);
      double rA, rB;
      if (law == families::AdditionLaw::Sine) {
        rA = std::abs(f(x + y) - f(x) * f(y + Tv) - f(y) * f(x + Tv));
        rB = std::abs(F(u * v) - F(u) * F(tv * v) - F(v) * F(tv * u));
      } else {
        rA = std::abs(g(x + y) - g(x) * g(y) + g(x + Tv) * g(y + Tv));
        rB = std::abs(G(u * v) - G(u) * G(v) + G(tv * u) * G(tv * v));
      }
      report.translation_residual = std::max(report.translation_residual, rA);
      report.scaling_residual = std::max(report.scaling_residual, rB);
    }
  }
  report.translation_pass = report.translation_residual <= tol;
  report.scaling_pass = report.scaling_residual <= tol;
  report.equivalent = report.translation_pass == report.scaling_pass;
  return report;
}

}  // namespace pairable::pairing
