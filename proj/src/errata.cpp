#include "pairable/errata.hpp"

#include <cmath>

#include "pairable/families.hpp"
#include "pairable/pairing.hpp"
#include "pairable/representers.hpp"

namespace pairable::errata {

namespace {

using families::CauchyFamily;
using numerics::Complex;
using numerics::Sign;

ErratumRow power2_radicand() {
  ErratumRow row;
  row.id = "power2-period-radicand";
  row.printed_form = "radicand 2(xy)^3 + (x+y)^2 (x^2+y^2)";
  row.corrected_form =
      "quarter discriminant (xy(x+y))^2 - (x^2+y^2)(2x^2y^2 - (x+y)^2) of "
      "(x^2+y^2) T^2 + 2xy(x+y) T + 2x^2y^2 - (x+y)^2 = 0";
  row.counterexample = "x = 1, y = 1";
  const double x = 1.0, y = 1.0;
  row.printed_value =
      2.0 * std::pow(x * y, 3.0) + (x + y) * (x + y) * (x * x + y * y);
  const double half_b = x * y * (x + y);
  const double a = x * x + y * y;
  const double cc = 2.0 * x * x * y * y - (x + y) * (x + y);
  row.oracle_value = half_b * half_b - a * cc;
  return row;
}

ErratumRow extremum_derivative() {
  ErratumRow row;
  row.id = "period-derivative-extremum";
  row.printed_form =
      "T'(c) = -1/2 +- c/sqrt(c^2-4), vanishing at c^2 = -4/3 with period "
      "value +-(sqrt(3)/3) i";
  row.corrected_form =
      "T'(c) = (-1 +- c/sqrt(c^2-4))/2, which never vanishes";
  row.counterexample = "c = 2i/sqrt(3), plus branch";
  row.printed_value = 0.0;  // the stated claim: a critical point
  const Complex c(0.0, 2.0 / std::sqrt(3.0));
  row.oracle_value =
      std::abs(pairing::extremum_probe(c, Sign::Plus).derivative);
  return row;
}

ErratumRow additive_cosine_rep_period() {
  ErratumRow row;
  row.id = "additive-cosine-representer-period";
  row.printed_form = "T = (-x +- |x| sqrt(1 - 1/c))/2";
  row.corrected_form = "roots of T^2 + x T + x/(2c) = 0";
  row.counterexample = "c = 2, x = 1 (periodicity residual of each T)";
  const double c = 2.0, x = 1.0;
  const CauchyFamily family = CauchyFamily::additive(c);
  const representers::RepresenterKind kind{representers::Base::Cosine,
                                           Sign::Plus};
  const double printed_T =
      0.5 * (-x + std::abs(x) * std::sqrt(1.0 - 1.0 / c));
  row.printed_value =
      representers::periodicity_residual(family, kind, printed_T, x);
  const double oracle_T =
      representers::representer_period(family, kind).branches[0](x);
  row.oracle_value =
      representers::periodicity_residual(family, kind, oracle_T, x);
  return row;
}

ErratumRow dual_additive_expansion() {
  ErratumRow row;
  row.id = "dual-additive-period-expansion";
  row.printed_form =
      "f(x)g(y) + f(y)g(x) = c^2 (xy + T(x+y)) for g = cx, f = g(.+T)";
  row.corrected_form = "the expansion is c^2 (2xy + T(x+y))";
  row.counterexample = "c = 1, x = 2, y = 1, T = 1/2";
  const double c = 1.0, x = 2.0, y = 1.0;
  const double T =
      pairing::period_additive_S_dual(c, x, y).values[0].value.real();
  row.printed_value = c * c * (x * y + T * (x + y));
  row.oracle_value =
      c * (x + T) * (c * y) + c * (y + T) * (c * x);
  return row;
}

ErratumRow power_cosine_representer() {
  ErratumRow row;
  row.id = "power-cosine-representer";
  row.printed_form = "cosine representer of x^p vanishes identically";
  row.corrected_form =
      "+-sqrt(x^{2p} - 2^p x^p) from the defining radicand; zero only at "
      "x = 2";
  row.counterexample = "p = 1, x = 3";
  row.printed_value = 0.0;
  row.oracle_value = std::abs(representers::closed_form_representer(
      CauchyFamily::multiplicative(1.0),
      {representers::Base::Cosine, Sign::Plus}, 3.0));
  return row;
}

ErratumRow log_representer_at_one() {
  ErratumRow row;
  row.id = "log-representer-at-one";
  row.printed_form =
      "f_C(1) = log(y+1)/log(y) for every y > 0, y != 1";
  row.corrected_form =
      "not constant in y, so it defines no value; the defining radicand "
      "gives f_C(1) = +-sqrt(-c log 2), and the sine representer has no "
      "value at x = 1 at all";
  row.counterexample = "stated form at y = 2 versus y = 4";
  row.printed_value = std::log(3.0) / std::log(2.0);
  row.oracle_value = std::log(5.0) / std::log(4.0);
  return row;
}

}  // namespace

std::vector<ErratumRow> errata_table() {
  return {power2_radicand(),          extremum_derivative(),
          additive_cosine_rep_period(), dual_additive_expansion(),
          power_cosine_representer(), log_representer_at_one()};
}

}  // namespace pairable::errata
