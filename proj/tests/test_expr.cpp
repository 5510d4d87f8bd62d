#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "pairable/expr.hpp"

using namespace pairable;
using dsl::EvalError;
using dsl::Expr;
using dsl::Node;

TEST_CASE("basic parse shapes") {
  const Expr e = Expr::parse("2*x + 1");
  REQUIRE(e.root().type == Node::Type::Binary);
  CHECK(e.root().op == '+');
  CHECK(e.root().a->op == '*');
  CHECK(e.root().b->type == Node::Type::Number);
  CHECK(e.eval({{"x", 3.0}}) == 7.0);
}

TEST_CASE("power is right-associative, unary binds below it") {
  CHECK(Expr::parse("x^2^3").eval({{"x", 2.0}}) == 256.0);  // 2^(2^3)
  CHECK(Expr::parse("(x^2)^3").eval({{"x", 2.0}}) == 64.0);
  CHECK(Expr::parse("-x^2").eval({{"x", 3.0}}) == -9.0);  // -(x^2)
  CHECK(Expr::parse("2^-3").eval() == 0.125);
  CHECK(Expr::parse("--x").eval({{"x", 5.0}}) == 5.0);
}

TEST_CASE("whitespace is insignificant") {
  CHECK(Expr::parse(" 2 * ( x + 1 ) ").equals(Expr::parse("2*(x+1)")));
}

TEST_CASE("extra names extend the known-name set") {
  const Expr e = Expr::parse("c * x + y", {"c", "y"});
  CHECK(e.eval({{"c", 2.0}, {"x", 3.0}, {"y", 1.0}}) == 7.0);
  CHECK_THROWS_AS(Expr::parse("c * x"), dsl::SyntaxError);
}

TEST_CASE("syntax errors carry the offset and the expectation") {
  try {
    Expr::parse("log(");
    FAIL("expected a syntax error");
  } catch (const dsl::SyntaxError& err) {
    CHECK(err.offset == 4);
    CHECK(err.expected == "a number, name, or '('");
  }
  try {
    Expr::parse("sin x");
    FAIL("expected a syntax error");
  } catch (const dsl::SyntaxError& err) {
    CHECK(err.offset == 0);
    CHECK(err.expected == "'(' after function name");
  }
  try {
    Expr::parse("y + 1");
    FAIL("expected a syntax error");
  } catch (const dsl::SyntaxError& err) {
    CHECK(err.offset == 0);
    CHECK(err.expected == "a known name");
  }
  try {
    Expr::parse("(x");
    FAIL("expected a syntax error");
  } catch (const dsl::SyntaxError& err) {
    CHECK(err.offset == 2);
    CHECK(err.expected == "')'");
  }
  try {
    Expr::parse("x 5");
    FAIL("expected a syntax error");
  } catch (const dsl::SyntaxError& err) {
    CHECK(err.offset == 2);
    CHECK(err.expected == "end of input");
  }
}

TEST_CASE("evaluation: built-in constants and functions") {
  CHECK(std::abs(Expr::parse("pi").eval() - 3.141592653589793) == 0.0);
  CHECK(std::abs(Expr::parse("e").eval() - 2.718281828459045) == 0.0);
  CHECK(Expr::parse("abs(0-3)").eval() == 3.0);
  CHECK(Expr::parse("exp(0)").eval() == 1.0);
  CHECK(Expr::parse("sqrt(9)").eval() == 3.0);
  CHECK(std::abs(Expr::parse("c*log(x)", {"c"}).eval(
                     {{"c", 2.0}, {"x", 2.718281828459045}}) -
                 2.0) <= 1e-15);
  CHECK(Expr::parse("x^2").eval({{"x", -3.0}}) == 9.0);  // integer exponent
}

TEST_CASE("evaluation errors are tagged with kind and subexpression") {
  try {
    Expr::parse("x^0.5").eval({{"x", -1.0}});
    FAIL("expected an evaluation error");
  } catch (const EvalError& err) {
    CHECK(err.kind == EvalError::Kind::NegativeBaseFractionalPower);
    CHECK(err.subexpr == "x ^ 0.5");
  }
  try {
    Expr::parse("1/x").eval({{"x", 0.0}});
    FAIL("expected an evaluation error");
  } catch (const EvalError& err) {
    CHECK(err.kind == EvalError::Kind::DivisionByZero);
    CHECK(err.subexpr == "1 / x");
  }
  try {
    Expr::parse("log(x)").eval({{"x", 0.0}});
    FAIL("expected an evaluation error");
  } catch (const EvalError& err) {
    CHECK(err.kind == EvalError::Kind::LogNonPositive);
  }
  try {
    Expr::parse("sqrt(x)").eval({{"x", -4.0}});
    FAIL("expected an evaluation error");
  } catch (const EvalError& err) {
    CHECK(err.kind == EvalError::Kind::SqrtNegative);
  }
  try {
    Expr::parse("x + 1").eval();
    FAIL("expected an evaluation error");
  } catch (const EvalError& err) {
    CHECK(err.kind == EvalError::Kind::UnknownName);
    CHECK(err.subexpr == "x");
  }
}

TEST_CASE("printer uses minimal parentheses") {
  CHECK(Expr::parse("2*x+1").str() == "2 * x + 1");
  CHECK(Expr::parse("(x+1)*2").str() == "(x + 1) * 2");
  CHECK(Expr::parse("x^(2+1)").str() == "x ^ (2 + 1)");
  CHECK(Expr::parse("(x^2)^3").str() == "(x ^ 2) ^ 3");
  CHECK(Expr::parse("x^2^3").str() == "x ^ 2 ^ 3");
  CHECK(Expr::parse("-(x+1)").str() == "-(x + 1)");
  CHECK(Expr::parse("x-(t-1)").str() == "x - (t - 1)");
  CHECK(Expr::parse("x-t-1").str() == "x - t - 1");
  CHECK(Expr::parse("sin(x)*cos(t)").str() == "sin(x) * cos(t)");
}

TEST_CASE("printing and reparsing is the identity on the tree") {
  const std::vector<std::string> sources = {
      "2*x + 1",       "x^2^3",          "-x^2",
      "--x",           "0.1 * x",        "(x+1)/(t-2)",
      "sin(cos(x))",   "2^-3 + pi",      "abs(x - e)",
      "sqrt(x*x + 1)", "-(x + 1) * -t",  "x/(2*(t+1))",
  };
  for (const auto& src : sources) {
    const Expr first = Expr::parse(src);
    const Expr second = Expr::parse(first.str());
    CHECK(first.equals(second));
    CHECK(first.str() == second.str());
  }
}

namespace {

// Grammar-directed random source generator; children are parenthesized, so
// every generated string is valid by construction.
std::string gen_source(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 5);
  switch (pick(rng)) {
    case 0: {
      const double values[] = {0.0, 0.5, 1.0, 2.0, 3.25, 0.1, 7.0, 0.3333333333333333};
      std::uniform_int_distribution<int> v(0, 7);
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", values[v(rng)]);
      return buf;
    }
    case 1: {
      const char* names[] = {"x", "t", "pi", "e"};
      std::uniform_int_distribution<int> v(0, 3);
      return names[v(rng)];
    }
    case 2: {
      const char ops[] = {'+', '-', '*', '/', '^'};
      std::uniform_int_distribution<int> v(0, 4);
      return "(" + gen_source(rng, depth - 1) + ") " + ops[v(rng)] + " (" +
             gen_source(rng, depth - 1) + ")";
    }
    case 3:
      return "-(" + gen_source(rng, depth - 1) + ")";
    case 4: {
      const char* funcs[] = {"log", "exp", "sqrt", "sin", "cos", "abs"};
      std::uniform_int_distribution<int> v(0, 5);
      return std::string(funcs[v(rng)]) + "(" + gen_source(rng, depth - 1) + ")";
    }
    default:
      return "(" + gen_source(rng, depth - 1) + ")";
  }
}

}  // namespace

TEST_CASE("round-trip holds on randomly generated expressions") {
  std::mt19937 rng(20240817u);
  for (int i = 0; i < 200; ++i) {
    const std::string src = gen_source(rng, 4);
    CAPTURE(src);
    const Expr first = Expr::parse(src);
    const Expr second = Expr::parse(first.str());
    CHECK(first.equals(second));
    CHECK(first.str() == second.str());
  }
}
