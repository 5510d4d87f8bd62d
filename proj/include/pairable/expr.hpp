#pragma once

// Small expression language for user-supplied functions and generators.
//
// Grammar (EBNF), whitespace insignificant:
//   expr  := term (("+" | "-") term)*
//   term  := unary (("*" | "/") unary)*
//   unary := "-" unary | power
//   power := atom ("^" unary)?
//   atom  := NUMBER | IDENT | IDENT "(" expr ")" | "(" expr ")"
// "^" is right-associative.  Built-in names: variables x and t, constants
// pi and e, functions log (natural), exp, sqrt, sin, cos, abs.  Additional
// variable names can be allowed at parse time.
//
// str() prints a canonical form with minimal parentheses; parsing the
// printed form reproduces the same tree.  Evaluation is plain IEEE double
// arithmetic with tagged errors on domain violations.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pairable/errors.hpp"

namespace pairable::dsl {

struct SyntaxError : Error {
  SyntaxError(std::size_t offset, std::string expected);
  std::size_t offset;    // byte offset into the source
  std::string expected;  // what the parser was looking for
};

struct EvalError : Error {
  enum class Kind {
    LogNonPositive,
    DivisionByZero,
    NegativeBaseFractionalPower,
    SqrtNegative,
    UnknownName,
  };
  EvalError(Kind kind, std::string subexpr);
  Kind kind;
  std::string subexpr;  // printed form of the offending subexpression
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  enum class Type { Number, Name, Unary, Binary, Call };
  Type type = Type::Number;
  double number = 0.0;  // Number only; always >= 0, negation is a Unary node
  std::string name;     // Name and Call
  char op = 0;          // Binary: one of + - * / ^; Unary is always -
  NodePtr a, b;         // Binary: both; Unary/Call: a only
};

class Expr {
 public:
  // extra_names lists variables legal beyond the built-ins (parameter
  // bindings, the second grid variable, ...).
  static Expr parse(const std::string& src,
                    const std::vector<std::string>& extra_names = {});

  // Evaluates with the given variable bindings; built-in constants need no
  // binding.  Unbound names throw EvalError(UnknownName).
  double eval(const std::map<std::string, double>& bindings = {}) const;

  // Canonical printed form; parse(str()) is structurally equal to *this.
  std::string str() const;

  bool equals(const Expr& other) const;

  const Node& root() const { return *root_; }

 private:
  explicit Expr(NodePtr root) : root_(std::move(root)) {}
  NodePtr root_;
};

}  // namespace pairable::dsl
