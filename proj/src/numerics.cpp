#include "pairable/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace pairable::numerics {

Tolerances::Tolerances(double quad, double residual, double root)
    : quad_abs(quad), residual_pass(residual), root_abs(root) {
  if (!(quad_abs > 0.0) || !(residual_pass > 0.0) || !(root_abs > 0.0))
    throw DomainError("tolerances must be positive");
}

namespace {

// 15-point Kronrod abscissae/weights and the embedded 7-point Gauss weights
// (QUADPACK dqk15).  All nodes are strictly interior to the panel.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double integral;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double eps = std::numeric_limits<double>::epsilon();
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);

  double fv1[7], fv2[7];
  const double fc = f(c);
  double resg = kWg[3] * fc;
  double resk = kWgk[7] * fc;
  double resabs = std::abs(resk);
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    fv1[j] = f(c - dx);
    fv2[j] = f(c + dx);
    resk += kWgk[j] * (fv1[j] + fv2[j]);
    resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
  }
  for (int j = 0; j < 3; ++j)
    resg += kWg[j] * (fv1[2 * j + 1] + fv2[2 * j + 1]);

  const double reskh = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

  const double ah = std::abs(h);
  resabs *= ah;
  resasc *= ah;
  double err = std::abs((resk - resg) * h);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double tiny = std::numeric_limits<double>::min();
  if (resabs > tiny / (50.0 * eps)) err = std::max(err, 50.0 * eps * resabs);

  return Panel{a, b, resk * h, err};
}

}  // namespace

double integrate_01(const std::function<double(double)>& f, double tol) {
  if (!(tol > 0.0)) throw DomainError("quadrature tolerance must be positive");

  // Guard against nodes rounding onto the closed endpoints during very deep
  // refinement; the evaluation points stay inside the open interval.
  const double lo_clamp = std::nextafter(0.0, 1.0);
  const double hi_clamp = std::nextafter(1.0, 0.0);
  auto eval = [&](double t) {
    t = std::clamp(t, lo_clamp, hi_clamp);
    const double v = f(t);
    if (!std::isfinite(v))
      throw NonFinite("integrand is not finite inside (0, 1)");
    return v;
  };

  constexpr long kPanelCap = 1L << 20;
  long panels = 1;
  std::priority_queue<Panel> queue;
  Panel whole = gk15(eval, 0.0, 1.0);
  double total = whole.integral;
  double total_err = whole.error;
  queue.push(whole);

  while (total_err > tol) {
    if (panels >= kPanelCap)
      throw NonConvergence("quadrature did not reach the requested tolerance");
    const Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a) || !(mid < worst.b))
      throw NonConvergence("quadrature panel width at machine resolution");
    Panel left = gk15(eval, worst.a, mid);
    Panel right = gk15(eval, mid, worst.b);
    panels += 2;
    total += left.integral + right.integral - worst.integral;
    total_err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }
  return total;
}

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double tol) {
  if (!(tol > 0.0)) throw DomainError("root tolerance must be positive");
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  if (!std::isfinite(fa) || !std::isfinite(fb))
    throw NonFinite("function not finite at bracket endpoints");
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0) throw NoBracket("no sign change over [lo, hi]");

  // Brent: inverse quadratic / secant steps, falling back to bisection.
  double c = a, fc = fa;
  double d = b - a, e = d;
  const double eps = std::numeric_limits<double>::epsilon();
  for (int iter = 0; iter < 200; ++iter) {
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = 2.0 * eps * std::abs(b) + 0.5 * tol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0 || std::abs(fb) <= tol) return b;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p, q, r;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        q = fa / fc;
        r = fb / fc;
        p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q),
                             std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    if (std::abs(d) > tol1)
      b += d;
    else
      b += (xm > 0.0 ? tol1 : -tol1);
    fb = f(b);
    if (!std::isfinite(fb)) throw NonFinite("function not finite inside bracket");
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
  }
  throw NonConvergence("root finder iteration limit reached");
}

double derivative_fd(const std::function<double(double)>& f, double x,
                     double h) {
  if (!(h > 0.0)) throw DomainError("step size must be positive");
  const double fp = f(x + h);
  const double fm = f(x - h);
  if (!std::isfinite(fp) || !std::isfinite(fm))
    throw NonFinite("function not finite at difference stencil");
  return (fp - fm) / (2.0 * h);
}

}  // namespace pairable::numerics
