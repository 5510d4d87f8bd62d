#include <cmath>

#include "doctest.h"
#include "pairable/representers.hpp"

using namespace pairable;
using families::CauchyFamily;
using numerics::Complex;
using numerics::Sign;
using representers::Base;
using representers::Parity;
using representers::RepresenterKind;

namespace {

constexpr RepresenterKind kSine{Base::Sine, Sign::Plus};
constexpr RepresenterKind kCosPlus{Base::Cosine, Sign::Plus};
constexpr RepresenterKind kCosMinus{Base::Cosine, Sign::Minus};

}  // namespace

TEST_CASE("sine representer of sin is cos") {
  auto f = [](double x) { return std::sin(x); };
  CHECK(std::abs(representers::sine_representer(f, 0.7) - std::cos(0.7)) <= 1e-15);
  CHECK(std::abs(representers::sine_representer(f, 1.3) - std::cos(1.3)) <= 1e-15);
  CHECK_THROWS_AS(representers::sine_representer(f, 0.0), ZeroDenominator);
}

TEST_CASE("cosine representer of cos is sin, of cosh is i sinh") {
  auto g = [](double x) { return std::cos(x); };
  const Complex plus = representers::cosine_representer(g, 0.7, Sign::Plus);
  CHECK(std::abs(plus - Complex(std::sin(0.7), 0.0)) <= 1e-12);
  const Complex minus = representers::cosine_representer(g, 0.7, Sign::Minus);
  CHECK(std::abs(minus + Complex(std::sin(0.7), 0.0)) <= 1e-12);

  auto ch = [](double x) { return std::cosh(x); };
  const Complex hyper = representers::cosine_representer(ch, 1.0, Sign::Plus);
  CHECK(std::abs(hyper - Complex(0.0, std::sinh(1.0))) <= 1e-12);
  CHECK_THROWS_AS(representers::cosine_representer(ch, 1.0, Sign::Plus, true),
                  DomainError);
}

TEST_CASE("closed-form sine representers match the generic definition") {
  const auto add = CauchyFamily::additive(2.0);
  CHECK(representers::closed_form_representer(add, kSine, 0.7) == Complex(1.0, 0.0));
  CHECK(std::abs(representers::closed_form_representer(add, kSine, 0.7) -
                 Complex(representers::sine_representer(add.fn(), 0.7), 0.0)) <= 1e-14);

  const auto exp2 = CauchyFamily::exponential(2.0);
  for (double x : {-1.5, 0.0, 0.8, 2.3}) {
    CHECK(std::abs(representers::closed_form_representer(exp2, kSine, x) -
                   Complex(representers::sine_representer(exp2.fn(), x), 0.0)) <= 1e-13);
  }

  const auto lg = CauchyFamily::logarithmic(1.5);
  for (double x : {0.3, 2.0, 4.7}) {
    CHECK(std::abs(representers::closed_form_representer(lg, kSine, x) -
                   Complex(representers::sine_representer(lg.fn(), x), 0.0)) <= 1e-13);
  }
  CHECK_THROWS_AS(representers::closed_form_representer(lg, kSine, 1.0), DomainError);

  const auto pw = CauchyFamily::multiplicative(2.0);
  for (double x : {0.4, 1.0, 3.1}) {
    CHECK(std::abs(representers::closed_form_representer(pw, kSine, x) -
                   Complex(representers::sine_representer(pw.fn(), x), 0.0)) <= 1e-13);
  }
  CHECK(representers::closed_form_representer(pw, kSine, 1.7) == Complex(2.0, 0.0));
}

TEST_CASE("closed-form cosine representers match the generic definition") {
  const auto add = CauchyFamily::additive(2.0);
  for (double x : {0.3, 1.0, 3.0}) {
    for (auto kind : {kCosPlus, kCosMinus}) {
      CHECK(std::abs(representers::closed_form_representer(add, kind, x) -
                     representers::cosine_representer(add.fn(), x, kind.sign)) <= 1e-12);
    }
  }

  const auto exp2 = CauchyFamily::exponential(2.0);
  CHECK(representers::closed_form_representer(exp2, kCosPlus, 1.3) == Complex(0.0, 0.0));
  CHECK(std::abs(representers::cosine_representer(exp2.fn(), 1.3, Sign::Plus)) <= 1e-12);

  const auto lg = CauchyFamily::logarithmic(2.0);
  for (double x : {0.5, 3.0, 6.0}) {
    CHECK(std::abs(representers::closed_form_representer(lg, kCosPlus, x) -
                   representers::cosine_representer(lg.fn(), x, Sign::Plus)) <= 1e-12);
  }

  const auto pw = CauchyFamily::multiplicative(1.0);
  // x^2 - 2x is 3 at x = 3: the companion is sqrt(3), not identically zero.
  CHECK(std::abs(representers::closed_form_representer(pw, kCosPlus, 3.0) -
                 Complex(1.7320508075688772, 0.0)) <= 1e-14);
  CHECK(std::abs(representers::closed_form_representer(pw, kCosPlus, 3.0) -
                 representers::cosine_representer(pw.fn(), 3.0, Sign::Plus)) <= 1e-12);
  // ... and exactly zero at x = 2, the only zero.
  CHECK(representers::closed_form_representer(pw, kCosPlus, 2.0) == Complex(0.0, 0.0));
}

TEST_CASE("sine-side representer periods satisfy the periodicity relation") {
  const auto add = CauchyFamily::additive(2.0);
  const auto add_period = representers::representer_period(add, kSine);
  REQUIRE(add_period.branches.size() == 1);
  for (double x : {0.4, 1.0, 2.6}) {
    const double T = add_period.branches[0](x);
    CHECK(std::abs(T - 0.5 * (0.5 - x)) <= 1e-15);
    CHECK(representers::periodicity_residual(add, kSine, T, x) <= 1e-12);
  }

  const auto exp2 = CauchyFamily::exponential(2.0);
  const auto exp_period = representers::representer_period(exp2, kSine);
  CHECK(exp_period.branches[0](0.3) == -0.5);  // -log_2(2)/2, independent of x
  CHECK(representers::periodicity_residual(exp2, kSine, -0.5, 1.7) <= 1e-13);

  const auto lg = CauchyFamily::logarithmic(0.5);
  const auto lg_period = representers::representer_period(lg, kSine);
  const double T2 = lg_period.branches[0](2.0);
  CHECK(std::abs(T2 - 2.694528049465325) <= 1e-12);  // (e^2 - 2) / 2
  CHECK(representers::periodicity_residual(lg, kSine, T2, 2.0) <= 1e-12);
  CHECK_THROWS_AS(lg_period.branches[0](1.0), DomainError);

  const auto pw = CauchyFamily::multiplicative(2.0);
  const auto pw_period = representers::representer_period(pw, kSine);
  const double T1 = pw_period.branches[0](1.0);
  CHECK(std::abs(T1 - 0.20710678118654752) <= 1e-15);  // 2^{-1/2} - 1/2
  CHECK(representers::periodicity_residual(pw, kSine, T1, 1.0) <= 1e-12);
  CHECK_THROWS_AS(
      representers::representer_period(CauchyFamily::multiplicative(0.0), kSine),
      NoFinitePeriod);
}

TEST_CASE("cosine-side representer periods satisfy the periodicity relation") {
  const auto add = CauchyFamily::additive(2.0);
  const auto add_period = representers::representer_period(add, kCosPlus);
  REQUIRE(add_period.branches.size() == 2);
  // x = 1: double root T = -1/2 of T^2 + T + 1/4.
  CHECK(std::abs(add_period.branches[0](1.0) + 0.5) <= 1e-15);
  CHECK(std::abs(add_period.branches[1](1.0) + 0.5) <= 1e-15);
  for (double x : {1.0, 3.0, 4.5}) {
    for (const auto& branch : add_period.branches) {
      CHECK(representers::periodicity_residual(add, kCosPlus, branch(x), x) <= 1e-9);
    }
  }
  // Discriminant x^2 - 2x/c < 0 inside (0, 2/c).
  CHECK_THROWS_AS(add_period.branches[0](0.5), NoRealRoot);

  const auto lg = CauchyFamily::logarithmic(2.0);
  const auto lg_period = representers::representer_period(lg, kCosPlus);
  REQUIRE(lg_period.branches.size() == 2);
  CHECK(std::abs(lg_period.branches[1](3.0) + 0.6266434413156838) <= 1e-12);
  CHECK(std::abs(lg_period.branches[0](3.0) + 1.2137480705742715) <= 1e-12);
  for (const auto& branch : lg_period.branches) {
    CHECK(representers::periodicity_residual(lg, kCosPlus, branch(3.0), 3.0) <= 1e-9);
  }

  const auto pw = CauchyFamily::multiplicative(2.0);
  const auto pw_period = representers::representer_period(pw, kCosPlus);
  REQUIRE(pw_period.branches.size() == 1);
  CHECK(pw_period.branches[0](1.8) == -0.9);
  CHECK(representers::periodicity_residual(pw, kCosPlus, -0.9, 1.8) == 0.0);
  CHECK_THROWS_AS(
      representers::representer_period(CauchyFamily::multiplicative(-1.0), kCosPlus),
      DomainError);

  CHECK_THROWS_AS(
      representers::representer_period(CauchyFamily::exponential(2.0), kCosPlus),
      NoFinitePeriod);
}

TEST_CASE("parity: sin is odd with an even sine representer") {
  // Even point count keeps 0 (a zero of sin) off the grid.
  const grid::Grid1 g{-2.4, 2.4, 8};
  const auto report = representers::parity_check(
      [](double x) { return std::sin(x); }, g, 1e-9);
  CHECK(report.function == Parity::Odd);
  CHECK(report.sine_representer == Parity::Even);
  CHECK(report.implications_hold);
}

TEST_CASE("parity: cosh is even with even representers") {
  const grid::Grid1 g{-2.4, 2.4, 8};
  const auto report = representers::parity_check(
      [](double x) { return std::cosh(x); }, g, 1e-9);
  CHECK(report.function == Parity::Even);
  CHECK(report.sine_representer == Parity::Even);
  CHECK(report.cosine_representer == Parity::Even);
  CHECK(report.implications_hold);
}

TEST_CASE("parity: an affine function is neither, vacuously consistent") {
  const grid::Grid1 g{-2.4, 2.4, 8};
  const auto report = representers::parity_check(
      [](double x) { return x + 1.0; }, g, 1e-9);
  CHECK(report.function == Parity::Neither);
  CHECK(report.implications_hold);
}
