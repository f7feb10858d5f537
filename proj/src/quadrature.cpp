#include "ineqlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace ineqlab {

namespace {

// 15-point Kronrod extension of the 7-point Gauss-Legendre rule (QUADPACK dqk15).
// xgk[1], xgk[3], ... are the Gauss abscissae; wg are the Gauss weights.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
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
  double value;
  double error;
};

struct PanelWorse {
  bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  auto eval = [&](double x) {
    const double v = f(x);
    if (!std::isfinite(v))
      throw NonFiniteError("integrand returned non-finite value at x = " + std::to_string(x));
    return v;
  };

  const double fc = eval(center);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double fsum = eval(center - dx) + eval(center + dx);
    resk += kWgk[j] * fsum;
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
  }
  resk *= half;
  resg *= half;

  return Panel{a, b, resk, std::abs(resk - resg)};
}

}  // namespace

double kronrod_panel(const std::function<double(double)>& f, double a, double b) {
  return evaluate_panel(f, a, b).value;
}

IntegrationResult integrate(const std::function<double(double)>& f, double a, double b,
                            const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(a < b)) {
    if (a == b) return IntegrationResult{0.0, 0.0, 1};
    throw DomainError("integrate: requires a <= b");
  }

  std::priority_queue<Panel, std::vector<Panel>, PanelWorse> worklist;
  Panel whole = evaluate_panel(f, a, b);
  double total_value = whole.value;
  double total_error = whole.error;
  int panels = 1;
  worklist.push(whole);

  auto tolerance = [&] { return std::max(cfg.rel_tol * std::abs(total_value), cfg.abs_tol); };

  while (total_error > tolerance() && panels < cfg.max_subdivisions) {
    Panel worst = worklist.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) break;  // interval at floating-point resolution
    worklist.pop();
    Panel left = evaluate_panel(f, worst.a, mid);
    Panel right = evaluate_panel(f, mid, worst.b);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    worklist.push(left);
    worklist.push(right);
    ++panels;
  }

  if (total_error > tolerance())
    throw NonConvergence("integrate: error estimate " + std::to_string(total_error) +
                         " above tolerance after " + std::to_string(panels) + " panels");

  return IntegrationResult{total_value, total_error, panels};
}

IntegrationResult integrate_unit(const std::function<double(double)>& f,
                                 const QuadratureConfig& cfg) {
  return integrate(f, 0.0, 1.0, cfg);
}

IntegrationResult integrate_halfline(const std::function<double(double)>& f,
                                     const QuadratureConfig& cfg) {
  auto mapped = [&f](double t) {
    const double u = 1.0 - t;
    return f(t / u) / (u * u);
  };
  return integrate(mapped, 0.0, 1.0, cfg);
}

}  // namespace ineqlab
