#include "pairable/representers.hpp"

#include <algorithm>
#include <cmath>

namespace pairable::representers {

namespace {

using families::CauchyFamily;

constexpr double kLog2 = 0.6931471805599453;

}  // namespace

double sine_representer(const std::function<double(double)>& f, double x) {
  const double fx = f(x);
  if (std::abs(fx) < 1e-300)
    throw ZeroDenominator("sine representer undefined where f vanishes");
  return f(2.0 * x) / (2.0 * fx);
}

Complex cosine_representer(const std::function<double(double)>& g, double x,
                           Sign sign, bool real_only) {
  const double gx = g(x);
  const double radicand = gx * gx - g(2.0 * x);
  if (real_only && radicand < 0.0)
    throw DomainError("cosine representer is complex here; radicand < 0");
  return numerics::sign_factor(sign) * std::sqrt(Complex(radicand, 0.0));
}

Complex closed_form_representer(const CauchyFamily& family,
                                RepresenterKind kind, double x) {
  const double c = family.parameter();
  const double sgn = numerics::sign_factor(kind.sign);
  using Kind = CauchyFamily::Kind;
  if (kind.base == Base::Sine) {
    switch (family.kind()) {
      case Kind::Additive:
        // f(2x)/(2 f(x)) = 2cx/(2cx); the x = 0 value is the same limit.
        return Complex(1.0, 0.0);
      case Kind::Exponential:
        return Complex(0.5 * std::pow(c, x), 0.0);
      case Kind::Logarithmic: {
        if (x == 1.0)
          throw DomainError("sine representer of the log pair needs x != 1");
        return Complex(0.5 * (kLog2 / std::log(x) + 1.0), 0.0);
      }
      case Kind::Multiplicative:
        return Complex(std::pow(2.0, c - 1.0), 0.0);
    }
  }
  switch (family.kind()) {
    case Kind::Additive: {
      const double radicand = c * x * (c * x - 2.0);
      return sgn * std::sqrt(Complex(radicand, 0.0));
    }
    case Kind::Exponential:
      // g(x)^2 - g(2x) = a^{2x} - a^{2x} vanishes identically.
      return Complex(0.0, 0.0);
    case Kind::Logarithmic: {
      const double L = c * std::log(x);
      const double radicand = L * (L - 1.0) - c * kLog2;
      return sgn * std::sqrt(Complex(radicand, 0.0));
    }
    case Kind::Multiplicative: {
      const double radicand =
          std::pow(x, 2.0 * c) - std::pow(2.0, c) * std::pow(x, c);
      return sgn * std::sqrt(Complex(radicand, 0.0));
    }
  }
  throw InternalConsistency("unreachable representer dispatch");
}

RepresenterPeriod representer_period(const CauchyFamily& family,
                                     RepresenterKind kind) {
  const double c = family.parameter();
  using Kind = CauchyFamily::Kind;
  RepresenterPeriod out;
  if (kind.base == Base::Sine) {
    switch (family.kind()) {
      case Kind::Additive:
        out.branches.push_back(
            [c](double x) { return 0.5 * (1.0 / c - x); });
        return out;
      case Kind::Exponential:
        out.branches.push_back(
            [c](double) { return -0.5 * kLog2 / std::log(c); });
        return out;
      case Kind::Logarithmic:
        out.branches.push_back([c](double x) {
          if (x == 1.0)
            throw DomainError("log-pair representer period needs x != 1");
          const double target = (0.5 / c) * (kLog2 / std::log(x) + 1.0);
          return 0.5 * (std::exp(target) - x);
        });
        return out;
      case Kind::Multiplicative:
        if (c == 0.0)
          throw NoFinitePeriod("constant pair has no representer period");
        out.branches.push_back(
            [c](double x) { return std::pow(2.0, -1.0 / c) - 0.5 * x; });
        return out;
    }
  }
  switch (family.kind()) {
    case Kind::Additive:
      // Roots of T^2 + x T + x/(2c) = 0, the square of the matching
      // relation; minus branch first.
      for (double s : {-1.0, 1.0}) {
        out.branches.push_back([c, s](double x) {
          const double disc = x * x - 2.0 * x / c;
          if (disc < 0.0)
            throw NoRealRoot("no real cosine representer period here");
          return 0.5 * (-x + s * std::sqrt(disc));
        });
      }
      return out;
    case Kind::Exponential:
      // The companion vanishes identically and a^{x + 2T} never does.
      throw NoFinitePeriod(
          "exponential cosine representer has no finite period");
    case Kind::Logarithmic:
      for (double s : {-1.0, 1.0}) {
        out.branches.push_back([c, s](double x) {
          const double lx = std::log(x);
          const double radicand = lx * lx - std::log(2.0 * x) / c;
          if (radicand < 0.0)
            throw NoRealRoot("no real cosine representer period here");
          return 0.5 * (std::exp(s * std::sqrt(radicand)) - x);
        });
      }
      return out;
    case Kind::Multiplicative:
      // Drives the argument to the edge of the domain, where x^p -> 0 for
      // p > 0; for p <= 0 there is no admissible period.
      if (!(c > 0.0))
        throw DomainError("power cosine representer period needs p > 0");
      out.branches.push_back([](double x) { return -0.5 * x; });
      return out;
  }
  throw InternalConsistency("unreachable representer dispatch");
}

namespace {

// Family evaluation extended continuously to the closure point 0 for the
// power family; periods may land exactly on the boundary.
double eval_closure(const CauchyFamily& family, double u) {
  using Kind = CauchyFamily::Kind;
  if (family.kind() == Kind::Multiplicative && u == 0.0) {
    const double p = family.parameter();
    if (p > 0.0) return 0.0;
    if (p == 0.0) return 1.0;
    throw DomainError("x^p unbounded at 0 for p < 0");
  }
  return family.eval(u);
}

}  // namespace

double periodicity_residual(const CauchyFamily& family, RepresenterKind kind,
                            double T, double x) {
  if (kind.base == Base::Sine) {
    const double rep = sine_representer(family.fn(), x);
    return std::abs(rep - eval_closure(family, x + 2.0 * T));
  }
  // Companion value the period was derived against: the closed-form
  // representer except for the power family, whose tabulated period matches
  // a vanishing companion (see the errata table for the discrepancy).
  double companion;
  if (family.kind() == CauchyFamily::Kind::Multiplicative) {
    companion = 0.0;
  } else {
    const Complex rep =
        closed_form_representer(family, {Base::Cosine, Sign::Plus}, x);
    if (rep.imag() != 0.0)
      throw NoRealRoot("cosine representer is complex at this point");
    companion = rep.real();
  }
  const double shifted = eval_closure(family, x + 2.0 * T);
  // The representer sign is free, so match it.
  return std::min(std::abs(companion - shifted),
                  std::abs(-companion - shifted));
}

namespace {

Parity classify(const std::function<Complex(double)>& h,
                const std::vector<double>& points, double tol) {
  double even_defect = 0.0, odd_defect = 0.0, scale = 0.0;
  for (double x : points) {
    const Complex a = h(x), b = h(-x);
    even_defect = std::max(even_defect, std::abs(a - b));
    odd_defect = std::max(odd_defect, std::abs(a + b));
    scale = std::max({scale, std::abs(a), std::abs(b)});
  }
  const double bound = tol * std::max(1.0, scale);
  if (even_defect <= bound && even_defect <= odd_defect) return Parity::Even;
  if (odd_defect <= bound) return Parity::Odd;
  return Parity::Neither;
}

}  // namespace

ParityReport parity_check(const std::function<double(double)>& f,
                          const grid::Grid1& grid, double tol) {
  const auto points = grid.points();
  ParityReport report;
  report.function =
      classify([&](double x) { return Complex(f(x), 0.0); }, points, tol);
  report.sine_representer = classify(
      [&](double x) { return Complex(sine_representer(f, x), 0.0); }, points,
      tol);
  report.cosine_representer = classify(
      [&](double x) { return cosine_representer(f, x, Sign::Plus); }, points,
      tol);
  const bool sine_ok = report.function == Parity::Neither ||
                       report.sine_representer == Parity::Even;
  const bool cosine_ok = report.function != Parity::Even ||
                         report.cosine_representer == Parity::Even;
  report.implications_hold = sine_ok && cosine_ok;
  return report;
}

}  // namespace pairable::representers
