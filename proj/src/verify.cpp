#include "pairable/verify.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace pairable::verify {

namespace {

using families::AdditionLaw;
using families::EquationKind;

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw NonFinite(what);
}

}  // namespace

double pair_residual(const std::function<double(double)>& f,
                     const std::function<double(double)>& g,
                     AdditionLaw law, double x, double y) {
  double r;
  if (law == AdditionLaw::Sine) {
    r = f(x + y) - f(x) * g(y) - f(y) * g(x);
  } else {
    r = g(x + y) - g(x) * g(y) + f(x) * f(y);
  }
  require_finite(r, "non-finite residual");
  return std::abs(r);
}

namespace {

// Shared grid sweep; the evaluator returns the absolute residual at (x, y)
// or nothing when the point must be skipped.
template <typename Eval>
VerificationReport sweep(AdditionLaw law, const grid::Grid2& grid, double tol,
                         Eval eval) {
  VerificationReport report;
  report.equation = law;
  report.grid_lo = grid.lo;
  report.grid_hi = grid.hi;
  report.grid_n = grid.n;
  const auto axis = grid.axis();
  bool have_worst = false;
  for (double x : axis) {
    for (double y : axis) {
      if (grid.exclude && grid.exclude(x, y)) {
        ++report.excluded_points;
        continue;
      }
      std::optional<double> r = eval(x, y);
      if (!r) {
        ++report.excluded_points;
        continue;
      }
      // Strict > keeps the lexicographically first argmax.
      if (!have_worst || *r > report.max_residual) {
        report.max_residual = *r;
        report.worst_x = x;
        report.worst_y = y;
        have_worst = true;
      }
    }
  }
  report.pass = have_worst && report.max_residual <= tol;
  return report;
}

}  // namespace

VerificationReport verify_pair(const std::function<double(double)>& f,
                               const std::function<double(double)>& g,
                               AdditionLaw law, const grid::Grid2& grid,
                               double tol) {
  return sweep(law, grid, tol, [&](double x, double y) {
    return std::optional<double>(pair_residual(f, g, law, x, y));
  });
}

VerificationReport verify_pair_with_period(
    const std::function<double(double)>& f,
    const std::function<double(double, double)>& period, AdditionLaw law,
    const grid::Grid2& grid, double tol) {
  return sweep(law, grid, tol, [&](double x, double y) -> std::optional<double> {
    double T;
    try {
      T = period(x, y);
    } catch (const SingularLocus&) {
      return std::nullopt;
    }
    require_finite(T, "non-finite period value");
    double r;
    if (law == AdditionLaw::Sine) {
      r = f(x + y) - f(x) * f(y + T) - f(y) * f(x + T);
    } else {
      r = f(x + y) - f(x) * f(y) + f(x + T) * f(y + T);
    }
    require_finite(r, "non-finite residual");
    return std::abs(r);
  });
}

namespace {

// Whether h satisfies the given classical equation on the grid; the two
// multiplicative-argument equations are probed on the positive part only.
bool satisfies_on(const std::function<double(double)>& h, EquationKind kind,
                  double lo, double hi, int n, double tol) {
  const bool needs_positive =
      kind == EquationKind::Logarithmic || kind == EquationKind::Multiplicative;
  grid::Grid1 probe;
  if (needs_positive) {
    probe.lo = std::max(lo, 0.1);
    probe.hi = std::max(hi, probe.lo + 1.0);
  } else {
    probe.lo = lo;
    probe.hi = hi;
  }
  probe.n = std::max(5, n / 2);
  try {
    return families::satisfies_cauchy(h, kind, probe, tol).satisfied;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

Classification classify_pair(const std::function<double(double)>& f,
                             const std::function<double(double)>& g,
                             const VerificationReport& report, double tol) {
  Classification out;
  auto doubled = [&f](double x) { return 2.0 * f(x); };
  out.doubled_f_exponential = satisfies_on(
      doubled, EquationKind::Exponential, report.grid_lo, report.grid_hi,
      report.grid_n, tol);

  if (!report.pass) {
    out.label = Label::NotCauchyPair;
    return out;
  }
  const EquationKind order[] = {
      EquationKind::Additive, EquationKind::Exponential,
      EquationKind::Logarithmic, EquationKind::Multiplicative};
  for (EquationKind kind : order) {
    if (!satisfies_on(f, kind, report.grid_lo, report.grid_hi, report.grid_n,
                      tol))
      continue;
    out.family = kind;
    const bool g_too = satisfies_on(g, kind, report.grid_lo, report.grid_hi,
                                    report.grid_n, tol);
    out.label = g_too ? Label::TrueCauchyPair : Label::CauchyPair;
    return out;
  }
  out.label = Label::Unclassified;
  return out;
}

GeneralizedPeriodicity generalized_periodicity_check(
    const std::function<double(double)>& f, double T, AdditionLaw law,
    const grid::Grid1& grid, double tol) {
  GeneralizedPeriodicity out;
  if (law == AdditionLaw::Sine) {
    const double f0 = f(0.0);
    if (f0 == 0.0)
      throw ZeroDenominator("generalized periodicity needs f(0) != 0");
    out.c = (1.0 - f(T)) / f0;
  } else {
    const double gT = f(T);
    if (gT == 0.0)
      throw ZeroDenominator("generalized periodicity needs g(T) != 0");
    out.c = (1.0 - f(0.0)) / gT;
  }
  for (double x : grid.points()) {
    const double r = std::abs(f(x + T) - out.c * f(x));
    require_finite(r, "non-finite periodicity residual");
    out.max_residual = std::max(out.max_residual, r);
  }
  out.usual_periodic = std::abs(out.c - 1.0) <= tol;
  return out;
}

TrivialPairability trivial_pairability_consequence(
    const std::function<double(double)>& f, AdditionLaw law,
    const grid::Grid1& grid, double tol) {
  TrivialPairability out;
  if (law == AdditionLaw::Sine) {
    auto doubled = [&f](double x) { return 2.0 * f(x); };
    const auto check = families::satisfies_cauchy(
        doubled, EquationKind::Exponential, grid, tol);
    out.max_residual = check.max_residual;
    out.consistent = check.satisfied;
  } else {
    for (double x : grid.points())
      out.max_residual = std::max(out.max_residual, std::abs(f(x)));
    out.consistent = out.max_residual <= tol;
  }
  return out;
}

SymmetryProbe symmetry_probe(const std::function<double(double)>& f,
                             const std::function<double(double)>& g,
                             std::optional<double> T, const grid::Grid2& grid,
                             double tol) {
  SymmetryProbe probe;
  if (!T) {
    probe.note = "non-constant period; constant-shift scan not applicable";
    return probe;
  }
  std::vector<double> candidates;
  candidates.push_back(-*T);
  for (int i = 0; i < 41; ++i) candidates.push_back(-5.0 + 0.25 * i);

  const auto axis = grid.axis();
  bool first = true;
  for (double shift : candidates) {
    double worst = 0.0;
    for (double x : axis) {
      for (double y : axis) {
        if (grid.exclude && grid.exclude(x, y)) continue;
        // Reversed roles: g leads, with companion g(. + shift).
        const double law = std::abs(g(x + y) - g(x) * g(y + shift) -
                                    g(y) * g(x + shift));
        // The companion must also BE f, otherwise the equation may hold
        // with an unrelated companion and prove nothing about reversal.
        const double match = std::max(std::abs(f(x) - g(x + shift)),
                                      std::abs(f(y) - g(y + shift)));
        worst = std::max({worst, law, match});
      }
    }
    if (first || worst < probe.best_residual) {
      probe.best_residual = worst;
      probe.best_shift = shift;
      first = false;
    }
  }
  probe.symmetric = probe.best_residual <= tol;
  return probe;
}

}  // namespace pairable::verify
