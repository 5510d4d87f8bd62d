#include "pairable/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

namespace pairable::dsl {

namespace {

const char* eval_error_label(EvalError::Kind kind) {
  switch (kind) {
    case EvalError::Kind::LogNonPositive: return "log of non-positive value";
    case EvalError::Kind::DivisionByZero: return "division by zero";
    case EvalError::Kind::NegativeBaseFractionalPower:
      return "negative base with fractional exponent";
    case EvalError::Kind::SqrtNegative: return "sqrt of negative value";
    case EvalError::Kind::UnknownName: return "unknown name";
  }
  return "evaluation error";
}

const std::vector<std::string> kFunctions = {"log", "exp", "sqrt",
                                             "sin", "cos", "abs"};

bool is_function(const std::string& name) {
  return std::find(kFunctions.begin(), kFunctions.end(), name) !=
         kFunctions.end();
}

class Parser {
 public:
  Parser(const std::string& src, const std::vector<std::string>& extra)
      : src_(src), extra_(extra) {}

  NodePtr run() {
    NodePtr e = parse_expr();
    skip_space();
    if (pos_ != src_.size()) fail("end of input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) {
    throw SyntaxError(pos_, expected);
  }

  void skip_space() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    while (true) {
      const char c = peek();
      if (c != '+' && c != '-') return lhs;
      ++pos_;
      lhs = binary(c, lhs, parse_term());
    }
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_unary();
    while (true) {
      const char c = peek();
      if (c != '*' && c != '/') return lhs;
      ++pos_;
      lhs = binary(c, lhs, parse_unary());
    }
  }

  NodePtr parse_unary() {
    if (eat('-')) {
      auto node = std::make_shared<Node>();
      node->type = Node::Type::Unary;
      node->op = '-';
      node->a = parse_unary();
      return node;
    }
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_atom();
    if (eat('^')) return binary('^', base, parse_unary());
    return base;
  }

  NodePtr parse_atom() {
    skip_space();
    if (pos_ >= src_.size()) fail("a number, name, or '('");
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
      return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
      return parse_ident();
    if (c == '(') {
      ++pos_;
      NodePtr inner = parse_expr();
      if (!eat(')')) fail("')'");
      return inner;
    }
    fail("a number, name, or '('");
  }

  NodePtr parse_number() {
    const std::size_t start = pos_;
    std::size_t consumed = 0;
    double value;
    try {
      value = std::stod(src_.substr(start), &consumed);
    } catch (const std::exception&) {
      fail("a number");
    }
    // stod accepts a leading sign; the grammar routes '-' through unary,
    // so a sign can never start the substring here.
    pos_ = start + consumed;
    auto node = std::make_shared<Node>();
    node->type = Node::Type::Number;
    node->number = value;
    return node;
  }

  NodePtr parse_ident() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
            src_[pos_] == '_'))
      ++pos_;
    const std::string name = src_.substr(start, pos_ - start);
    if (is_function(name)) {
      if (!eat('(')) {
        pos_ = start;
        fail("'(' after function name");
      }
      NodePtr arg = parse_expr();
      if (!eat(')')) fail("')'");
      auto node = std::make_shared<Node>();
      node->type = Node::Type::Call;
      node->name = name;
      node->a = arg;
      return node;
    }
    const bool known =
        name == "x" || name == "t" || name == "pi" || name == "e" ||
        std::find(extra_.begin(), extra_.end(), name) != extra_.end();
    if (!known) {
      pos_ = start;
      fail("a known name");
    }
    auto node = std::make_shared<Node>();
    node->type = Node::Type::Name;
    node->name = name;
    return node;
  }

  static NodePtr binary(char op, NodePtr a, NodePtr b) {
    auto node = std::make_shared<Node>();
    node->type = Node::Type::Binary;
    node->op = op;
    node->a = std::move(a);
    node->b = std::move(b);
    return node;
  }

  const std::string& src_;
  const std::vector<std::string>& extra_;
  std::size_t pos_ = 0;
};

// Precedence levels used by the printer: the printed child is
// parenthesized when its level is below what its position requires.
int level_of(const Node& n) {
  switch (n.type) {
    case Node::Type::Number:
    case Node::Type::Name:
    case Node::Type::Call: return 5;
    case Node::Type::Unary: return 3;
    case Node::Type::Binary:
      switch (n.op) {
        case '+': case '-': return 1;
        case '*': case '/': return 2;
        case '^': return 4;
      }
  }
  return 0;
}

void print(const Node& n, int min_level, std::ostream& os) {
  const int level = level_of(n);
  const bool wrap = level < min_level;
  if (wrap) os << '(';
  switch (n.type) {
    case Node::Type::Number: {
      std::ostringstream tmp;
      tmp.precision(17);
      tmp << n.number;
      os << tmp.str();
      break;
    }
    case Node::Type::Name:
      os << n.name;
      break;
    case Node::Type::Unary:
      os << '-';
      print(*n.a, 4, os);
      break;
    case Node::Type::Call:
      os << n.name << '(';
      print(*n.a, 0, os);
      os << ')';
      break;
    case Node::Type::Binary: {
      // Left-associative ops need a strictly tighter right child; '^' is
      // the mirror case, and its left operand must be atomic.
      int left_min = level, right_min = level + 1;
      if (n.op == '^') {
        left_min = 5;
        right_min = 3;
      }
      print(*n.a, left_min, os);
      os << ' ' << n.op << ' ';
      print(*n.b, right_min, os);
      break;
    }
  }
  if (wrap) os << ')';
}

double eval_node(const Node& n, const std::map<std::string, double>& bindings);

std::string printed(const Node& n) {
  std::ostringstream os;
  print(n, 0, os);
  return os.str();
}

double eval_call(const Node& n, double arg) {
  if (n.name == "log") {
    if (!(arg > 0.0)) throw EvalError(EvalError::Kind::LogNonPositive, printed(n));
    return std::log(arg);
  }
  if (n.name == "exp") return std::exp(arg);
  if (n.name == "sqrt") {
    if (arg < 0.0) throw EvalError(EvalError::Kind::SqrtNegative, printed(n));
    return std::sqrt(arg);
  }
  if (n.name == "sin") return std::sin(arg);
  if (n.name == "cos") return std::cos(arg);
  if (n.name == "abs") return std::abs(arg);
  throw EvalError(EvalError::Kind::UnknownName, printed(n));
}

double eval_node(const Node& n, const std::map<std::string, double>& bindings) {
  switch (n.type) {
    case Node::Type::Number:
      return n.number;
    case Node::Type::Name: {
      if (n.name == "pi") return std::numbers::pi;
      if (n.name == "e") return std::numbers::e;
      auto it = bindings.find(n.name);
      if (it == bindings.end())
        throw EvalError(EvalError::Kind::UnknownName, n.name);
      return it->second;
    }
    case Node::Type::Unary:
      return -eval_node(*n.a, bindings);
    case Node::Type::Call:
      return eval_call(n, eval_node(*n.a, bindings));
    case Node::Type::Binary: {
      const double a = eval_node(*n.a, bindings);
      const double b = eval_node(*n.b, bindings);
      switch (n.op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        case '/':
          if (b == 0.0)
            throw EvalError(EvalError::Kind::DivisionByZero, printed(n));
          return a / b;
        case '^':
          if (a < 0.0 && b != std::floor(b))
            throw EvalError(EvalError::Kind::NegativeBaseFractionalPower,
                            printed(n));
          return std::pow(a, b);
      }
      break;
    }
  }
  throw EvalError(EvalError::Kind::UnknownName, printed(n));
}

bool node_equals(const Node& a, const Node& b) {
  if (a.type != b.type) return false;
  switch (a.type) {
    case Node::Type::Number: return a.number == b.number;
    case Node::Type::Name: return a.name == b.name;
    case Node::Type::Unary: return node_equals(*a.a, *b.a);
    case Node::Type::Call:
      return a.name == b.name && node_equals(*a.a, *b.a);
    case Node::Type::Binary:
      return a.op == b.op && node_equals(*a.a, *b.a) && node_equals(*a.b, *b.b);
  }
  return false;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t offset_in, std::string expected_in)
    : Error("syntax error at offset " + std::to_string(offset_in) +
            ": expected " + expected_in),
      offset(offset_in),
      expected(std::move(expected_in)) {}

EvalError::EvalError(Kind kind_in, std::string subexpr_in)
    : Error(std::string(eval_error_label(kind_in)) + " in '" + subexpr_in +
            "'"),
      kind(kind_in),
      subexpr(std::move(subexpr_in)) {}

Expr Expr::parse(const std::string& src,
                 const std::vector<std::string>& extra_names) {
  return Expr(Parser(src, extra_names).run());
}

double Expr::eval(const std::map<std::string, double>& bindings) const {
  return eval_node(*root_, bindings);
}

std::string Expr::str() const { return printed(*root_); }

bool Expr::equals(const Expr& other) const {
  return node_equals(*root_, *other.root_);
}

}  // namespace pairable::dsl
