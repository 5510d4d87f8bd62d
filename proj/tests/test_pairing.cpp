#include <cmath>

#include "doctest.h"
#include "pairable/pairing.hpp"

using namespace pairable;
using numerics::Complex;
using numerics::Sign;
using pairing::PeriodResult;

TEST_CASE("additive sine period: harmonic-mean closed form") {
  // T_2(1, 2) = 1/2 - 4/3 = -5/6.
  const PeriodResult r = pairing::period_additive_S(2.0, 1.0, 2.0);
  REQUIRE(r.values.size() == 1);
  CHECK(std::abs(r.values[0].value.real() + 5.0 / 6.0) <= 1e-15);
  CHECK(r.values[0].value.imag() == 0.0);
  CHECK(r.values[0].finite);
  CHECK(r.values[0].residual <= 1e-12);
}

TEST_CASE("additive sine period is exact on the diagonal and the axis") {
  for (double c : {-2.0, 0.5, 1.0, 3.0}) {
    for (double x : {0.7, 1.25, -2.5, 0.04461439913652132}) {
      // The last x is a regression value where the unsimplified harmonic
      // mean rounds away from x.
      CHECK(pairing::period_additive_S(c, x, x).values[0].value.real() ==
            1.0 / c - x);
      CHECK(pairing::period_additive_S(c, x, 0.0).values[0].value.real() ==
            1.0 / c);
    }
  }
}

TEST_CASE("additive sine period degenerate and singular cases") {
  const PeriodResult zero_slope = pairing::period_additive_S(0.0, 1.0, 2.0);
  CHECK(zero_slope.any_period);
  CHECK(zero_slope.values.empty());
  CHECK_THROWS_AS(pairing::period_additive_S(2.0, 1.5, -1.5), SingularLocus);
}

TEST_CASE("swapped additive sine period and its stated equation") {
  // c = 1, (x, y) = (1, 2): T = (3 - 2) / (3 - 1) = 1/2.
  const PeriodResult r = pairing::period_additive_S_dual(1.0, 1.0, 2.0);
  CHECK(std::abs(r.values[0].value.real() - 0.5) <= 1e-15);
  CHECK(r.values[0].residual <= 1e-12);
  CHECK_THROWS_AS(pairing::period_additive_S_dual(0.5, 1.0, 1.0), SingularLocus);
  CHECK_THROWS_AS(pairing::period_additive_S_dual(0.0, 1.0, 2.0), DomainError);
}

TEST_CASE("the two additive sine conventions give different periods") {
  // Primal T = 1 - 4/3 = -1/3 vs dual 1/2; the difference probe reports it.
  CHECK(std::abs(pairing::period_equality_residual(1.0, 1.0, 2.0) - 5.0 / 6.0) <=
        1e-12);
}

TEST_CASE("additive cosine period: real, repeated, and complex roots") {
  // c = 2, s = 2: discriminant 0, double root T = -1.
  const PeriodResult repeated = pairing::period_additive_C(2.0, 1.5, 0.5);
  REQUIRE(repeated.values.size() == 2);
  CHECK(std::abs(repeated.values[0].value - Complex(-1.0, 0.0)) <= 1e-15);
  CHECK(std::abs(repeated.values[1].value - Complex(-1.0, 0.0)) <= 1e-15);
  CHECK(repeated.values[0].residual <= 1e-12);

  // c = 1, s = 3: discriminant -3, roots (-3 -+ i sqrt 3) / 2, minus branch
  // first.
  const PeriodResult complex_pair = pairing::period_additive_C(1.0, 2.0, 1.0);
  CHECK(std::abs(complex_pair.values[0].value -
                 Complex(-1.5, -0.8660254037844386)) <= 1e-14);
  CHECK(std::abs(complex_pair.values[1].value -
                 Complex(-1.5, 0.8660254037844386)) <= 1e-14);
  CHECK(complex_pair.values[0].residual <= 1e-9);
  CHECK(complex_pair.values[1].residual <= 1e-9);
}

TEST_CASE("additive cosine period has the exact zero root on y = -x") {
  const PeriodResult r = pairing::period_additive_C(3.0, 1.2, -1.2);
  CHECK(r.values[0].value == Complex(0.0, 0.0));
  CHECK(r.values[1].value == Complex(0.0, 0.0));
  CHECK(r.values[0].residual == 0.0);
  const PeriodResult zero_slope = pairing::period_additive_C(0.0, 1.0, 1.0);
  CHECK(zero_slope.any_period);
}

TEST_CASE("sum-constrained cosine period matches the explicit quadratic") {
  // c = 2, d = 3: roots (-3 -+ sqrt 3) / 2.
  const PeriodResult r = pairing::period_additive_C_sum_constrained(2.0, 3.0);
  CHECK(std::abs(r.values[0].value.real() + 2.3660254037844386) <= 1e-14);
  CHECK(std::abs(r.values[1].value.real() + 0.6339745962155614) <= 1e-14);
  CHECK(r.values[0].residual <= 1e-12);
  CHECK_THROWS_AS(pairing::period_additive_C_sum_constrained(0.0, 3.0),
                  DomainError);
}

TEST_CASE("extremum probe: periods, derivatives, branch points") {
  const auto plus = pairing::extremum_probe(Complex(3.0, 0.0), Sign::Plus);
  CHECK(std::abs(plus.period - Complex(-0.3819660112501051, 0.0)) <= 1e-14);
  CHECK(std::abs(plus.derivative - Complex(0.17082039324993692, 0.0)) <= 1e-14);
  const auto minus = pairing::extremum_probe(Complex(3.0, 0.0), Sign::Minus);
  CHECK(std::abs(minus.derivative - Complex(-1.170820393249937, 0.0)) <= 1e-14);

  CHECK_THROWS_AS(pairing::extremum_probe(Complex(2.0, 0.0), Sign::Plus),
                  BranchPole);
  CHECK_THROWS_AS(pairing::extremum_probe(Complex(-2.0, 0.0), Sign::Minus),
                  BranchPole);
}

TEST_CASE("extremum probe derivative agrees with finite differences") {
  for (Sign branch : {Sign::Plus, Sign::Minus}) {
    auto T_of_c = [branch](double c) {
      return pairing::extremum_probe(Complex(c, 0.0), branch).period.real();
    };
    for (double c : {2.6, 3.5, -4.0, 5.0}) {
      const double analytic =
          pairing::extremum_probe(Complex(c, 0.0), branch).derivative.real();
      CHECK(std::abs(analytic - numerics::derivative_fd(T_of_c, c)) <= 1e-6);
    }
  }
}

TEST_CASE("extremum probe derivative does not vanish at c = 2i/sqrt(3)") {
  const Complex c(0.0, 2.0 / std::sqrt(3.0));
  const auto plus = pairing::extremum_probe(c, Sign::Plus);
  const auto minus = pairing::extremum_probe(c, Sign::Minus);
  CHECK(std::abs(std::abs(plus.derivative) - 0.25) <= 1e-12);
  CHECK(std::abs(std::abs(minus.derivative) - 0.75) <= 1e-12);
}

TEST_CASE("exponential sine period is the constant -log_a 2") {
  const PeriodResult r2 = pairing::period_exponential_S(2.0);
  CHECK(r2.values[0].value.real() == -1.0);
  CHECK(r2.values[0].residual <= 1e-13);
  const PeriodResult re = pairing::period_exponential_S(std::exp(1.0));
  CHECK(std::abs(re.values[0].value.real() + 0.6931471805599453) <= 1e-15);
  CHECK_THROWS_AS(pairing::period_exponential_S(1.0), DegenerateBase);
  CHECK_THROWS_AS(pairing::period_exponential_S(-2.0), DomainError);
  CHECK_THROWS_AS(pairing::period_exponential_S(0.0), DomainError);
}

TEST_CASE("swapped exponential sine pair has no period, with certificate") {
  const auto d = pairing::dual_exponential_S_exists(2.0);
  CHECK_FALSE(d.exists);
  CHECK(d.certificate_infimum > 0.0);
  CHECK(std::abs(d.certificate_infimum - std::pow(2.0, -50.0)) <= 1e-30);
}

TEST_CASE("exponential cosine period: golden real branch plus complex branch") {
  const PeriodResult r = pairing::period_exponential_C(2.0);
  REQUIRE(r.values.size() == 2);
  CHECK(std::abs(r.values[0].value - Complex(0.6942419136306173, 0.0)) <= 1e-14);
  CHECK(std::abs(r.values[1].value -
                 Complex(-0.6942419136306173, 4.532360141827194)) <= 1e-13);
  CHECK(r.values[0].residual <= 1e-12);
  CHECK(r.values[1].residual <= 1e-12);
  // a^T on the real branch is the golden ratio.
  CHECK(std::abs(std::pow(2.0, r.values[0].value.real()) -
                 1.618033988749895) <= 1e-12);
}

TEST_CASE("swapped exponential cosine pair reports no finite period") {
  const PeriodResult r = pairing::period_exponential_C_gf(2.0);
  REQUIRE(r.values.size() == 1);
  CHECK_FALSE(r.values[0].finite);
}

TEST_CASE("power sine period: p = 2 quadratic roots") {
  // x = y = 1: T^2 + 2T - 1 = 0, roots -1 -+ sqrt 2, minus branch first.
  const PeriodResult r1 = pairing::period_power_S(2.0, 1.0, 1.0);
  REQUIRE(r1.values.size() == 2);
  CHECK(std::abs(r1.values[0].value.real() + 2.414213562373095) <= 1e-14);
  CHECK(std::abs(r1.values[1].value.real() - 0.4142135623730951) <= 1e-14);
  CHECK(r1.values[0].residual <= 1e-12);
  CHECK(r1.values[1].residual <= 1e-12);

  // (x, y) = (2, 1): roots (-6 -+ sqrt 41) / 5.
  const PeriodResult r2 = pairing::period_power_S(2.0, 2.0, 1.0);
  CHECK(std::abs(r2.values[0].value.real() + 2.4806248474865697) <= 1e-13);
  CHECK(std::abs(r2.values[1].value.real() - 0.08062484748656974) <= 1e-13);
}

TEST_CASE("power sine period: p = 1 delegates to the additive case") {
  const PeriodResult pow1 = pairing::period_power_S(1.0, 2.0, 3.0);
  const PeriodResult add1 = pairing::period_additive_S(1.0, 2.0, 3.0);
  CHECK(pow1.values[0].value == add1.values[0].value);
}

TEST_CASE("power sine period error modes") {
  CHECK_THROWS_AS(pairing::period_power_S(3.0, 1.0, 1.0), UnsupportedError);
  CHECK_THROWS_AS(pairing::period_power_S(2.0, -1.0, 1.0), DomainError);
  CHECK_THROWS_AS(pairing::period_power_S(2.0, 1.0, 0.0), DomainError);
  // (10, 5) pushes the discriminant negative: 1500^2 < 4 * 125 * 4775.
  CHECK_THROWS_AS(pairing::period_power_S(2.0, 10.0, 5.0), NoRealRoot);
}

TEST_CASE("scaleability factor satisfies its defining identity") {
  CHECK(std::abs(pairing::scaleability_power(2.0, 1.0, 1.0) -
                 1.4142135623730951) <= 1e-15);
  for (double p : {1.0, 2.0, 3.0, -1.0}) {
    const double t = pairing::scaleability_power(p, 2.0, 3.0);
    const double residual =
        std::abs(std::pow(5.0, p) - 2.0 * std::pow(t * 6.0, p));
    CHECK(residual <= 1e-10);
  }
  CHECK_THROWS_AS(pairing::scaleability_power(0.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(pairing::scaleability_power(2.0, -1.0, 1.0), DomainError);
}

TEST_CASE("translation-scaling bridge agrees on both sides") {
  auto f = [](double x) { return std::pow(2.0, x); };
  auto T = [](double, double) { return -1.0; };
  const grid::Grid2 g{-2.0, 2.0, 10, nullptr};
  const auto ok = pairing::scaling_translation_bridge_check(
      f, f, T, families::AdditionLaw::Sine, g, 1e-9);
  CHECK(ok.equivalent);
  CHECK(ok.translation_pass);
  CHECK(ok.scaling_pass);
  CHECK(ok.translation_residual <= 1e-12);
  CHECK(ok.scaling_residual <= 1e-12);

  // A wrong period fails identically on both sides; the bridge still holds.
  auto bad_T = [](double, double) { return 1.0; };
  const auto bad = pairing::scaling_translation_bridge_check(
      f, f, bad_T, families::AdditionLaw::Sine, g, 1e-9);
  CHECK(bad.equivalent);
  CHECK_FALSE(bad.translation_pass);
  CHECK_FALSE(bad.scaling_pass);
  CHECK(bad.translation_residual >= 1e-3);
}
