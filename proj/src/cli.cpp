#include "pairable/cli.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pairable/errata.hpp"
#include "pairable/errors.hpp"
#include "pairable/expr.hpp"
#include "pairable/families.hpp"
#include "pairable/gamma.hpp"
#include "pairable/grid.hpp"
#include "pairable/pairing.hpp"
#include "pairable/representers.hpp"
#include "pairable/verify.hpp"

namespace pairable::cli {

namespace {

using numerics::Complex;
using numerics::Sign;

// Usage-level failures discovered after CLI11 parsing (malformed values,
// missing combinations); they exit 2 like any other usage error.
struct UsageFailure {
  std::string msg;
};

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct CommonOptions {
  double tol = 1e-9;
  std::string format;  // empty = subcommand default
  std::vector<std::string> param_kv;

  std::map<std::string, double> params() const {
    std::map<std::string, double> out;
    for (const std::string& kv : param_kv) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos || eq == 0)
        throw UsageFailure{"--param expects name=value, got '" + kv + "'"};
      try {
        std::size_t used = 0;
        const double v = std::stod(kv.substr(eq + 1), &used);
        if (eq + 1 + used != kv.size()) throw std::invalid_argument(kv);
        out[kv.substr(0, eq)] = v;
      } catch (const std::exception&) {
        throw UsageFailure{"bad numeric value in --param '" + kv + "'"};
      }
    }
    return out;
  }

  std::vector<std::string> param_names() const {
    std::vector<std::string> names;
    for (const auto& [k, v] : params()) names.push_back(k);
    return names;
  }

  const char* sep(const char* table_default = "csv") const {
    const std::string f = format.empty() ? table_default : format;
    if (f == "csv") return ",";
    if (f == "text") return "  ";
    throw UsageFailure{"--format must be csv or text"};
  }

  bool text_report() const {
    const std::string f = format.empty() ? "text" : format;
    if (f != "csv" && f != "text")
      throw UsageFailure{"--format must be csv or text"};
    return f == "text";
  }
};

std::vector<double> parse_point_list(const std::string& s) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = std::min(s.find(',', pos), s.size());
    const std::string item = s.substr(pos, comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageFailure{"bad number '" + item + "' in --points"};
    }
    pos = comma + 1;
  }
  if (out.empty()) throw UsageFailure{"--points must not be empty"};
  return out;
}

struct RangeOptions {
  std::string points;  // comma-separated explicit list, wins when set
  double from = 0.0, to = 0.0, step = 0.0;
  bool from_set = false;

  std::vector<double> resolve(const char* what) const {
    if (!points.empty()) return parse_point_list(points);
    if (!from_set)
      throw UsageFailure{std::string(what) +
                         " needs --points or --from/--to/--step"};
    if (!(step > 0.0) || to < from)
      throw UsageFailure{"need --step > 0 and --to >= --from"};
    const int n = static_cast<int>(std::floor((to - from) / step + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(from + i * step);
    return out;
  }
};

void add_range_options(CLI::App* sub, RangeOptions& range) {
  sub->add_option("--points", range.points,
                  "comma-separated evaluation points");
  sub->add_option("--from", range.from, "range start")
      ->each([&range](const std::string&) { range.from_set = true; });
  sub->add_option("--to", range.to, "range end");
  sub->add_option("--step", range.step, "range step");
}

grid::Grid2 parse_grid2(const std::string& spec, double exclude_sum) {
  grid::Grid2 g;
  const auto c1 = spec.find(':');
  const auto c2 = spec.find(':', c1 == std::string::npos ? spec.size()
                                                        : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw UsageFailure{"--grid expects lo:hi:n, got '" + spec + "'"};
  try {
    g.lo = std::stod(spec.substr(0, c1));
    g.hi = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
    g.n = std::stoi(spec.substr(c2 + 1));
  } catch (const std::exception&) {
    throw UsageFailure{"--grid expects lo:hi:n, got '" + spec + "'"};
  }
  if (g.n < 2 || !(g.hi > g.lo))
    throw UsageFailure{"--grid needs hi > lo and n >= 2"};
  if (exclude_sum >= 0.0) g.exclude = grid::exclude_sum_below(exclude_sum);
  return g;
}

std::function<double(double)> function_of_x(
    const std::string& src, const CommonOptions& common) {
  auto names = common.param_names();
  names.push_back("y");  // tolerated in parse; unbound use fails at eval
  const dsl::Expr expr = dsl::Expr::parse(src, names);
  auto bindings = common.params();
  return [expr, bindings](double x) mutable {
    bindings["x"] = x;
    return expr.eval(bindings);
  };
}

std::function<double(double, double)> function_of_xy(
    const std::string& src, const CommonOptions& common) {
  auto names = common.param_names();
  names.push_back("y");
  const dsl::Expr expr = dsl::Expr::parse(src, names);
  auto bindings = common.params();
  return [expr, bindings](double x, double y) mutable {
    bindings["x"] = x;
    bindings["y"] = y;
    return expr.eval(bindings);
  };
}

// ---------------------------------------------------------------- gamma --

struct GammaOptions {
  std::string generator = "neglog";
  double a = 2.0, c = 1.0, p = 2.0;
  bool c_set = false;
  double quad_tol = 1e-10;
  RangeOptions range;
};

int run_gamma(const GammaOptions& opt, const CommonOptions& common) {
  gamma::Generator gen = [&]() {
    if (opt.generator == "neglog") return gamma::Generator::neg_log();
    if (opt.generator == "exp") return gamma::Generator::exponential(opt.a);
    if (opt.generator == "add")
      return gamma::Generator::additive(opt.c_set ? opt.c : 1.0);
    if (opt.generator == "log")
      return gamma::Generator::logarithmic(opt.c_set ? opt.c : -1.0);
    if (opt.generator == "pow") return gamma::Generator::multiplicative(opt.p);
    // Anything else is an expression in t.
    auto names = common.param_names();
    const dsl::Expr expr = dsl::Expr::parse(opt.generator, names);
    auto bindings = common.params();
    return gamma::Generator::custom(
        [expr, bindings](double t) mutable {
          bindings["t"] = t;
          return expr.eval(bindings);
        },
        opt.generator);
  }();

  const bool has_closed = gen.kind() != gamma::Generator::Kind::Custom;
  const char* s = common.sep();
  if (has_closed) {
    std::cout << "x" << s << "quadrature" << s << "closed_form" << s
              << "abs_diff\n";
  } else {
    std::cout << "x" << s << "quadrature\n";
  }
  for (double x : opt.range.resolve("gamma")) {
    const double quad = gamma::gamma_phi(gen, x, opt.quad_tol);
    if (has_closed) {
      const double closed = gamma::closed_form(gen, x);
      std::cout << fmt17(x) << s << fmt17(quad) << s << fmt17(closed) << s
                << fmt17(std::abs(quad - closed)) << "\n";
    } else {
      std::cout << fmt17(x) << s << fmt17(quad) << "\n";
    }
  }
  return 0;
}

// ----------------------------------------------------------------- trig --

int run_trig(const RangeOptions& range, const CommonOptions& common) {
  const char* s = common.sep();
  std::cout << "z" << s << "sin_gamma" << s << "sin_ref" << s << "cos_gamma"
            << s << "cos_ref" << s << "tan_gamma" << s << "tan_ref\n";
  bool pass = true;
  for (double z : range.resolve("trig")) {
    const double sg = gamma::sin_via_gamma(z);
    const double sr = std::sin(z);
    const double cg = gamma::cos_via_gamma(z);
    const double cr = std::cos(z);
    const double tg = gamma::tan_via_gamma(z);
    const double tr = std::tan(z);
    std::cout << fmt17(z) << s << fmt17(sg) << s << fmt17(sr) << s << fmt17(cg)
              << s << fmt17(cr) << s << fmt17(tg) << s << fmt17(tr) << "\n";
    if (std::abs(sg - sr) > common.tol || std::abs(cg - cr) > common.tol)
      pass = false;
    // tan needs a slope-aware gate near its poles.
    if (std::abs(tg - tr) > common.tol * (1.0 + tr * tr)) pass = false;
  }
  return pass ? 0 : 1;
}

// ------------------------------------------------------------- identity --

int run_identity(const std::string& check, const RangeOptions& range,
                 const CommonOptions& common) {
  const char* s = common.sep();
  bool pass = true;
  if (check == "euler" || check == "pythagoras") {
    std::cout << "z" << s << "residual\n";
    for (double z : range.resolve("identity")) {
      const double r = check == "euler"
                           ? gamma::euler_identity_residual(z)
                           : gamma::pythagoras_gamma_residual(z);
      std::cout << fmt17(z) << s << fmt17(r) << "\n";
      if (r > common.tol) pass = false;
    }
  } else if (check == "product") {
    std::cout << "z" << s << "one_part" << s << "zero_part\n";
    for (double z : range.resolve("identity")) {
      const auto r = gamma::product_identity_residuals(z);
      std::cout << fmt17(z) << s << fmt17(r.one_part) << s
                << fmt17(r.zero_part) << "\n";
      if (r.one_part > common.tol || r.zero_part > common.tol) pass = false;
    }
  } else {
    throw UsageFailure{"--check must be euler, pythagoras, or product"};
  }
  return pass ? 0 : 1;
}

// --------------------------------------------------------------- period --

struct PeriodOptions {
  std::string law;
  double c = 1.0, a = 2.0, p = 2.0, d = 1.0;
  double x = 1.0, y = 2.0;
  RangeOptions range;
};

void emit_pair_result(const pairing::PeriodResult& result, const char* s) {
  std::cout << "branch" << s << "re" << s << "im" << s << "finite" << s
            << "residual\n";
  if (result.any_period) {
    std::cout << "0" << s << "any" << s << "any" << s << "1" << s << "0\n";
    return;
  }
  int branch = 0;
  for (const auto& v : result.values) {
    if (v.finite) {
      std::cout << branch << s << fmt17(v.value.real()) << s
                << fmt17(v.value.imag()) << s << "1" << s << fmt17(v.residual)
                << "\n";
    } else {
      std::cout << branch << s << "-inf" << s << "0" << s << "0" << s << "0\n";
    }
    ++branch;
  }
}

struct RepLaw {
  families::CauchyFamily family;
  representers::RepresenterKind kind;
};

std::optional<RepLaw> make_rep_law(const PeriodOptions& opt) {
  using families::CauchyFamily;
  using representers::Base;
  const std::string& law = opt.law;
  if (law.rfind("rep-", 0) != 0) return std::nullopt;
  const bool sine = law.rfind("rep-sine-", 0) == 0;
  const std::string tail = law.substr(sine ? 9 : 8);
  const representers::RepresenterKind kind{sine ? Base::Sine : Base::Cosine,
                                           Sign::Plus};
  if (tail == "add") return RepLaw{CauchyFamily::additive(opt.c), kind};
  if (tail == "exp") return RepLaw{CauchyFamily::exponential(opt.a), kind};
  if (tail == "log") return RepLaw{CauchyFamily::logarithmic(opt.c), kind};
  if (tail == "pow") return RepLaw{CauchyFamily::multiplicative(opt.p), kind};
  return std::nullopt;
}

int run_period(const PeriodOptions& opt, const CommonOptions& common) {
  const char* s = common.sep();
  const std::string& law = opt.law;

  if (law == "additive-s")
    emit_pair_result(pairing::period_additive_S(opt.c, opt.x, opt.y), s);
  else if (law == "additive-s-dual")
    emit_pair_result(pairing::period_additive_S_dual(opt.c, opt.x, opt.y), s);
  else if (law == "additive-s-equality") {
    std::cout << "x" << s << "y" << s << "residual\n";
    std::cout << fmt17(opt.x) << s << fmt17(opt.y) << s
              << fmt17(pairing::period_equality_residual(opt.c, opt.x, opt.y))
              << "\n";
  } else if (law == "additive-c")
    emit_pair_result(pairing::period_additive_C(opt.c, opt.x, opt.y), s);
  else if (law == "additive-c-sum")
    emit_pair_result(
        pairing::period_additive_C_sum_constrained(opt.c, opt.d), s);
  else if (law == "exp-s")
    emit_pair_result(pairing::period_exponential_S(opt.a), s);
  else if (law == "exp-s-dual") {
    const auto dual = pairing::dual_exponential_S_exists(opt.a);
    std::cout << "exists" << s << "certificate_infimum\n";
    std::cout << (dual.exists ? "1" : "0") << s
              << fmt17(dual.certificate_infimum) << "\n";
  } else if (law == "exp-c")
    emit_pair_result(pairing::period_exponential_C(opt.a), s);
  else if (law == "exp-c-gf")
    emit_pair_result(pairing::period_exponential_C_gf(opt.a), s);
  else if (law == "pow-s")
    emit_pair_result(pairing::period_power_S(opt.p, opt.x, opt.y), s);
  else if (auto rep = make_rep_law(opt)) {
    std::cout << "x" << s << "branch" << s << "T" << s << "finite" << s
              << "residual\n";
    const auto points = opt.range.resolve("representer period laws");
    try {
      const auto period = representers::representer_period(rep->family,
                                                           rep->kind);
      for (double x : points) {
        for (std::size_t b = 0; b < period.branches.size(); ++b) {
          const double T = period.branches[b](x);
          const double r =
              representers::periodicity_residual(rep->family, rep->kind, T, x);
          std::cout << fmt17(x) << s << b << s << fmt17(T) << s << "1" << s
                    << fmt17(r) << "\n";
        }
      }
    } catch (const NoFinitePeriod&) {
      for (double x : points)
        std::cout << fmt17(x) << s << "0" << s << "-inf" << s << "0" << s
                  << "0\n";
    }
  } else {
    throw UsageFailure{"unknown --law '" + law + "'"};
  }
  return 0;
}

// --------------------------------------------------------------- verify --

struct VerifyOptions {
  std::string f, g, period;
  std::string equation = "S";
  std::string grid = "-3:3:25";
  double exclude_sum = -1.0;
};

const char* label_name(verify::Label label) {
  switch (label) {
    case verify::Label::NotCauchyPair: return "not_cauchy_pair";
    case verify::Label::CauchyPair: return "cauchy_pair";
    case verify::Label::TrueCauchyPair: return "true_cauchy_pair";
    case verify::Label::Unclassified: return "unclassified";
  }
  return "unclassified";
}

const char* family_name(families::EquationKind kind) {
  switch (kind) {
    case families::EquationKind::Additive: return "additive";
    case families::EquationKind::Exponential: return "exponential";
    case families::EquationKind::Logarithmic: return "logarithmic";
    case families::EquationKind::Multiplicative: return "multiplicative";
    default: return "-";
  }
}

void print_report(const verify::VerificationReport& report, bool classified,
                  const CommonOptions& common) {
  const auto& cls = report.classification;
  const std::string family =
      cls.family ? family_name(*cls.family) : "-";
  if (common.text_report()) {
    std::cout << "equation: "
              << (report.equation == families::AdditionLaw::Sine ? "S" : "C")
              << "\n";
    std::cout << "grid: " << fmt17(report.grid_lo) << ":"
              << fmt17(report.grid_hi) << ":" << report.grid_n << "\n";
    std::cout << "excluded_points: " << report.excluded_points << "\n";
    std::cout << "max_residual: " << fmt17(report.max_residual) << "\n";
    std::cout << "worst_x: " << fmt17(report.worst_x) << "\n";
    std::cout << "worst_y: " << fmt17(report.worst_y) << "\n";
    std::cout << "pass: " << (report.pass ? "true" : "false") << "\n";
    if (classified) {
      std::cout << "classification: " << label_name(cls.label) << "\n";
      std::cout << "family: " << family << "\n";
      std::cout << "doubled_f_exponential: "
                << (cls.doubled_f_exponential ? "true" : "false") << "\n";
    }
  } else {
    std::cout << "equation,grid,excluded_points,max_residual,worst_x,worst_y,"
                 "pass,classification,family,doubled_f_exponential\n";
    std::cout << (report.equation == families::AdditionLaw::Sine ? "S" : "C")
              << "," << fmt17(report.grid_lo) << ":" << fmt17(report.grid_hi)
              << ":" << report.grid_n << "," << report.excluded_points << ","
              << fmt17(report.max_residual) << "," << fmt17(report.worst_x)
              << "," << fmt17(report.worst_y) << ","
              << (report.pass ? "1" : "0") << ","
              << (classified ? label_name(cls.label) : "-") << "," << family
              << ","
              << (classified && cls.doubled_f_exponential ? "1" : "0")
              << "\n";
  }
}

int run_verify(const VerifyOptions& opt, const CommonOptions& common) {
  if (opt.f.empty()) throw UsageFailure{"verify needs --f"};
  if (opt.g.empty() == opt.period.empty())
    throw UsageFailure{"verify needs exactly one of --g or --period"};
  if (opt.equation != "S" && opt.equation != "C")
    throw UsageFailure{"--equation must be S or C"};
  const families::AdditionLaw law = opt.equation == "S"
                                        ? families::AdditionLaw::Sine
                                        : families::AdditionLaw::Cosine;
  const grid::Grid2 grid = parse_grid2(opt.grid, opt.exclude_sum);
  const auto f = function_of_x(opt.f, common);

  verify::VerificationReport report;
  std::function<double(double)> companion;
  if (!opt.g.empty()) {
    companion = function_of_x(opt.g, common);
    report = verify::verify_pair(f, companion, law, grid, common.tol);
  } else {
    const auto T = function_of_xy(opt.period, common);
    report = verify::verify_pair_with_period(f, T, law, grid, common.tol);
    // Diagonal materialization stands in for g when classifying.
    companion = [f, T](double u) { return f(u + T(u, u)); };
  }
  bool classified = true;
  try {
    report.classification =
        verify::classify_pair(f, companion, report, common.tol);
  } catch (const Error&) {
    classified = false;
  }
  print_report(report, classified, common);
  return report.pass ? 0 : 1;
}

// ---------------------------------------------------------- representer --

struct RepresenterOptions {
  std::string family;
  std::string f;
  std::string kind = "sine";
  double a = 2.0, c = 1.0, p = 2.0;
  RangeOptions range;
};

int run_representer(const RepresenterOptions& opt,
                    const CommonOptions& common) {
  const char* s = common.sep();
  if (opt.family.empty() == opt.f.empty())
    throw UsageFailure{"representer needs exactly one of --family or --f"};

  representers::RepresenterKind kind;
  if (opt.kind == "sine")
    kind = {representers::Base::Sine, Sign::Plus};
  else if (opt.kind == "cos-plus")
    kind = {representers::Base::Cosine, Sign::Plus};
  else if (opt.kind == "cos-minus")
    kind = {representers::Base::Cosine, Sign::Minus};
  else
    throw UsageFailure{"--kind must be sine, cos-plus, or cos-minus"};

  if (!opt.f.empty()) {
    // Generic mode: representers of a user expression.
    const auto f = function_of_x(opt.f, common);
    std::cout << "x" << s << "value_re" << s << "value_im\n";
    for (double x : opt.range.resolve("representer")) {
      Complex v;
      if (kind.base == representers::Base::Sine)
        v = Complex(representers::sine_representer(f, x), 0.0);
      else
        v = representers::cosine_representer(f, x, kind.sign);
      std::cout << fmt17(x) << s << fmt17(v.real()) << s << fmt17(v.imag())
                << "\n";
    }
    return 0;
  }

  families::CauchyFamily family = [&]() {
    if (opt.family == "add") return families::CauchyFamily::additive(opt.c);
    if (opt.family == "exp")
      return families::CauchyFamily::exponential(opt.a);
    if (opt.family == "log")
      return families::CauchyFamily::logarithmic(opt.c);
    if (opt.family == "pow")
      return families::CauchyFamily::multiplicative(opt.p);
    throw UsageFailure{"--family must be add, exp, log, or pow"};
  }();

  std::cout << "x" << s << "closed_re" << s << "closed_im" << s << "generic_re"
            << s << "generic_im" << s << "abs_diff\n";
  bool pass = true;
  for (double x : opt.range.resolve("representer")) {
    const Complex closed =
        representers::closed_form_representer(family, kind, x);
    Complex generic;
    if (kind.base == representers::Base::Sine)
      generic =
          Complex(representers::sine_representer(family.fn(), x), 0.0);
    else
      generic = representers::cosine_representer(family.fn(), x, kind.sign);
    const double diff = std::abs(closed - generic);
    std::cout << fmt17(x) << s << fmt17(closed.real()) << s
              << fmt17(closed.imag()) << s << fmt17(generic.real()) << s
              << fmt17(generic.imag()) << s << fmt17(diff) << "\n";
    if (diff > common.tol) pass = false;
  }
  return pass ? 0 : 1;
}

// --------------------------------------------------------------- bridge --

struct BridgeOptions {
  std::string family;
  double a = 2.0;
  std::string f, g, period;
  std::string equation = "S";
  std::string grid = "0.1:2:10";
};

int run_bridge(const BridgeOptions& opt, const CommonOptions& common) {
  const grid::Grid2 grid = parse_grid2(opt.grid, -1.0);
  families::AdditionLaw law = families::AdditionLaw::Sine;
  std::function<double(double)> f, g;
  std::function<double(double, double)> T;

  if (!opt.family.empty()) {
    if (opt.family != "exp")
      throw UsageFailure{"bridge --family supports exp"};
    const double a = opt.a;
    const double Tc = pairing::period_exponential_S(a)
                          .values[0].value.real();
    f = [a](double x) { return std::pow(a, x); };
    g = [a, Tc](double x) { return std::pow(a, x + Tc); };
    T = [Tc](double, double) { return Tc; };
  } else {
    if (opt.f.empty() || opt.g.empty() || opt.period.empty())
      throw UsageFailure{
          "bridge needs --family exp or all of --f, --g, --period"};
    if (opt.equation != "S" && opt.equation != "C")
      throw UsageFailure{"--equation must be S or C"};
    if (opt.equation == "C") law = families::AdditionLaw::Cosine;
    f = function_of_x(opt.f, common);
    g = function_of_x(opt.g, common);
    T = function_of_xy(opt.period, common);
  }

  const auto report = pairing::scaling_translation_bridge_check(
      f, g, T, law, grid, common.tol);
  if (common.text_report()) {
    std::cout << "translation_residual: " << fmt17(report.translation_residual)
              << "\n";
    std::cout << "scaling_residual: " << fmt17(report.scaling_residual)
              << "\n";
    std::cout << "translation_pass: "
              << (report.translation_pass ? "true" : "false") << "\n";
    std::cout << "scaling_pass: " << (report.scaling_pass ? "true" : "false")
              << "\n";
    std::cout << "equivalent: " << (report.equivalent ? "true" : "false")
              << "\n";
  } else {
    std::cout << "translation_residual,scaling_residual,translation_pass,"
                 "scaling_pass,equivalent\n";
    std::cout << fmt17(report.translation_residual) << ","
              << fmt17(report.scaling_residual) << ","
              << (report.translation_pass ? "1" : "0") << ","
              << (report.scaling_pass ? "1" : "0") << ","
              << (report.equivalent ? "1" : "0") << "\n";
  }
  return report.equivalent ? 0 : 1;
}

// --------------------------------------------------------------- errata --

int run_errata(const CommonOptions& common) {
  const char* s = common.sep();
  std::cout << "id" << s << "printed_form" << s << "corrected_form" << s
            << "counterexample" << s << "printed_value" << s
            << "oracle_value\n";
  for (const auto& row : errata::errata_table()) {
    // Free-text fields are quoted in CSV mode; they contain commas.
    const bool csv = std::string(s) == ",";
    auto field = [&](const std::string& v) {
      return csv ? "\"" + v + "\"" : v;
    };
    std::cout << row.id << s << field(row.printed_form) << s
              << field(row.corrected_form) << s << field(row.counterexample)
              << s << fmt17(row.printed_value) << s << fmt17(row.oracle_value)
              << "\n";
  }
  return 0;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"numerical checks for addition-law function pairs"};
  app.require_subcommand(1);

  CommonOptions common;
  app.add_option("--tol", common.tol, "pass/fail tolerance");
  app.add_option("--format", common.format, "csv or text");
  app.add_option("--param", common.param_kv,
                 "name=value binding for expressions (repeatable)");

  GammaOptions gamma_opt;
  CLI::App* gamma_sub = app.add_subcommand(
      "gamma", "integral vs closed-form generalized Gamma values");
  gamma_sub->fallthrough();
  gamma_sub->add_option("--generator", gamma_opt.generator,
                        "neglog, exp, add, log, pow, or an expression in t");
  gamma_sub->add_option("--a", gamma_opt.a, "base for the exp generator");
  gamma_sub->add_option("--c", gamma_opt.c, "coefficient for add/log")
      ->each([&](const std::string&) { gamma_opt.c_set = true; });
  gamma_sub->add_option("--p", gamma_opt.p, "exponent for the pow generator");
  gamma_sub->add_option("--quad-tol", gamma_opt.quad_tol,
                        "quadrature tolerance");
  add_range_options(gamma_sub, gamma_opt.range);

  RangeOptions trig_range;
  CLI::App* trig_sub = app.add_subcommand(
      "trig", "sine/cosine/tangent through Gamma quotients vs references");
  trig_sub->fallthrough();
  add_range_options(trig_sub, trig_range);

  std::string identity_check = "euler";
  RangeOptions identity_range;
  CLI::App* identity_sub =
      app.add_subcommand("identity", "Gamma-form identity residuals");
  identity_sub->fallthrough();
  identity_sub->add_option("--check", identity_check,
                           "euler, pythagoras, or product");
  add_range_options(identity_sub, identity_range);

  PeriodOptions period_opt;
  CLI::App* period_sub =
      app.add_subcommand("period", "period values for pair laws");
  period_sub->fallthrough();
  period_sub->add_option("--law", period_opt.law, "which period law")
      ->required();
  period_sub->add_option("--c", period_opt.c, "additive coefficient");
  period_sub->add_option("--a", period_opt.a, "exponential base");
  period_sub->add_option("--p", period_opt.p, "power exponent");
  period_sub->add_option("--d", period_opt.d, "constrained sum x + y");
  period_sub->add_option("--x", period_opt.x, "first argument");
  period_sub->add_option("--y", period_opt.y, "second argument");
  add_range_options(period_sub, period_opt.range);

  VerifyOptions verify_opt;
  CLI::App* verify_sub =
      app.add_subcommand("verify", "grid verification of an addition law");
  verify_sub->fallthrough();
  verify_sub->add_option("--f", verify_opt.f, "expression in x");
  verify_sub->add_option("--g", verify_opt.g, "companion expression in x");
  verify_sub->add_option("--period", verify_opt.period,
                         "period expression in x and y");
  verify_sub->add_option("--equation", verify_opt.equation, "S or C");
  verify_sub->add_option("--grid", verify_opt.grid, "lo:hi:n");
  verify_sub->add_option("--exclude-sum", verify_opt.exclude_sum,
                         "skip points with |x+y| below this margin");

  RepresenterOptions rep_opt;
  CLI::App* rep_sub = app.add_subcommand(
      "representer", "representer values, closed form vs generic");
  rep_sub->fallthrough();
  rep_sub->add_option("--family", rep_opt.family, "add, exp, log, or pow");
  rep_sub->add_option("--f", rep_opt.f, "expression in x (generic mode)");
  rep_sub->add_option("--kind", rep_opt.kind, "sine, cos-plus, or cos-minus");
  rep_sub->add_option("--a", rep_opt.a, "exponential base");
  rep_sub->add_option("--c", rep_opt.c, "additive/log coefficient");
  rep_sub->add_option("--p", rep_opt.p, "power exponent");
  add_range_options(rep_sub, rep_opt.range);

  BridgeOptions bridge_opt;
  CLI::App* bridge_sub = app.add_subcommand(
      "bridge", "translation form vs scaled form of a pair law");
  bridge_sub->fallthrough();
  bridge_sub->add_option("--family", bridge_opt.family, "exp");
  bridge_sub->add_option("--a", bridge_opt.a, "exponential base");
  bridge_sub->add_option("--f", bridge_opt.f, "expression in x");
  bridge_sub->add_option("--g", bridge_opt.g, "expression in x");
  bridge_sub->add_option("--period", bridge_opt.period,
                         "period expression in x and y");
  bridge_sub->add_option("--equation", bridge_opt.equation, "S or C");
  bridge_sub->add_option("--grid", bridge_opt.grid, "lo:hi:n");

  CLI::App* errata_sub = app.add_subcommand(
      "errata", "stated forms that fail their defining equations");
  errata_sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (gamma_sub->parsed()) return run_gamma(gamma_opt, common);
    if (trig_sub->parsed()) return run_trig(trig_range, common);
    if (identity_sub->parsed())
      return run_identity(identity_check, identity_range, common);
    if (period_sub->parsed()) return run_period(period_opt, common);
    if (verify_sub->parsed()) return run_verify(verify_opt, common);
    if (rep_sub->parsed()) return run_representer(rep_opt, common);
    if (bridge_sub->parsed()) return run_bridge(bridge_opt, common);
    if (errata_sub->parsed()) return run_errata(common);
  } catch (const UsageFailure& e) {
    std::cerr << "error: " << e.msg << "\n";
    return 2;
  } catch (const dsl::SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace pairable::cli
