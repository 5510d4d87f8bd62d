#pragma once

// Grid verification of the two addition laws
//
//   (S)  f(x + y) = f(x) g(y) + f(y) g(x)
//   (C)  g(x + y) = g(x) g(y) - f(x) f(y)
//
// for an explicit companion g or for a period function T, in which case the
// companion is materialized pointwise as g(x) := f(x + T(x, y)) for each
// evaluated pair (x, y).  Residuals are absolute; the maximum over the grid
// and its (lexicographically first) location are reported.  Points where the
// period function is singular are skipped and counted.
//
// On top of verification sit the structural checks: classification of a
// verified pair against the four classical Cauchy equations, the
// generalized-periodicity constant, the consequences of pairing a function
// with itself at zero shift, and a probe for symmetry of the pairing
// relation.

#include <functional>
#include <optional>
#include <string>

#include "pairable/errors.hpp"
#include "pairable/families.hpp"
#include "pairable/grid.hpp"

namespace pairable::verify {

enum class Label { NotCauchyPair, CauchyPair, TrueCauchyPair, Unclassified };

struct Classification {
  Label label = Label::Unclassified;
  // The first classical equation f satisfies, when any.
  std::optional<families::EquationKind> family;
  // Set when 2f satisfies the exponential equation on the grid, the
  // signature of a pair trivially paired with itself.
  bool doubled_f_exponential = false;
};

struct VerificationReport {
  families::AdditionLaw equation = families::AdditionLaw::Sine;
  double grid_lo = 0.0, grid_hi = 0.0;
  int grid_n = 0;
  int excluded_points = 0;
  double max_residual = 0.0;
  double worst_x = 0.0, worst_y = 0.0;
  bool pass = false;
  Classification classification;
};

// Residual of the selected law at a single point, companion explicit.
double pair_residual(const std::function<double(double)>& f,
                     const std::function<double(double)>& g,
                     families::AdditionLaw law, double x, double y);

// Explicit-companion verification over the grid.
VerificationReport verify_pair(const std::function<double(double)>& f,
                               const std::function<double(double)>& g,
                               families::AdditionLaw law,
                               const grid::Grid2& grid, double tol);

// Period-function verification; the companion is f shifted by T(x, y),
// recomputed for every evaluated pair.  SingularLocus thrown by the period
// function excludes the point.
VerificationReport verify_pair_with_period(
    const std::function<double(double)>& f,
    const std::function<double(double, double)>& period,
    families::AdditionLaw law, const grid::Grid2& grid, double tol);

// Tests f, then g, against the four classical Cauchy equations on the
// report's grid (log/multiplicative equations on its positive part) and
// returns the strongest label the evidence supports.  Requires a report
// from one of the verify operations above.
Classification classify_pair(const std::function<double(double)>& f,
                             const std::function<double(double)>& g,
                             const VerificationReport& report, double tol);

// f(x + T) = c f(x) with a constant multiplier; usual periodicity is c = 1.
struct GeneralizedPeriodicity {
  double c = 0.0;
  double max_residual = 0.0;
  bool usual_periodic = false;
};

// Derives c from the y = 0 slice of the law: c = (1 - f(T)) / f(0) for the
// sine law, c = (1 - g(0)) / g(T) for the cosine law (the stated
// convention), then measures max |f(x + T) - c f(x)| over the grid.
GeneralizedPeriodicity generalized_periodicity_check(
    const std::function<double(double)>& f, double T,
    families::AdditionLaw law, const grid::Grid1& grid, double tol);

// Consequences of a function paired with itself at zero shift: for the sine
// law 2f must satisfy the exponential equation; for the cosine law the
// function must vanish identically on the grid.
struct TrivialPairability {
  bool consistent = false;
  double max_residual = 0.0;
};

TrivialPairability trivial_pairability_consequence(
    const std::function<double(double)>& f, families::AdditionLaw law,
    const grid::Grid1& grid, double tol);

// Whether the reversed pair (g, f) also satisfies the sine law for some
// constant shift, scanned over a fixed range of candidates.  A candidate
// passes only if the law holds with the companion g(. + shift) AND that
// companion actually reproduces f, so the reversal is exact, not a
// coincidence of the equation alone.  Pass T = nullopt when the forward
// pair had a non-constant period; the probe then
// reports non-applicability instead of scanning.
struct SymmetryProbe {
  bool symmetric = false;
  double best_residual = 0.0;
  double best_shift = 0.0;
  std::string note;
};

SymmetryProbe symmetry_probe(const std::function<double(double)>& f,
                             const std::function<double(double)>& g,
                             std::optional<double> T, const grid::Grid2& grid,
                             double tol);

}  // namespace pairable::verify
