#include "ineqlab/orderings.hpp"

#include <algorithm>
#include <cmath>

#include "ineqlab/societal.hpp"

namespace ineqlab {

namespace {

constexpr double kTol = 1e-9;

// Shared grid sweep: given per-point differences d(p) with the convention
// "X dominates iff d(p) >= 0 everywhere", classify the relation.
OrderingReport classify(const std::vector<double>& ps, const std::vector<double>& diffs) {
  OrderingReport report;
  report.grid_size = static_cast<int>(ps.size());

  double against_x = 0.0;  // worst d < 0
  double against_y = 0.0;  // worst d > 0
  std::vector<double> x_viol, y_viol;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const double d = diffs[i];
    if (d < -kTol) {
      against_x = std::max(against_x, -d);
      x_viol.push_back(ps[i]);
    } else if (d > kTol) {
      against_y = std::max(against_y, d);
      y_viol.push_back(ps[i]);
    }
  }

  if (x_viol.empty() && y_viol.empty()) {
    report.relation = OrderRelation::Indistinguishable;
    double worst = 0.0;
    for (double d : diffs) worst = std::max(worst, std::abs(d));
    report.max_violation = worst;
  } else if (x_viol.empty()) {
    report.relation = OrderRelation::XDominates;
    report.max_violation = against_x;
  } else if (y_viol.empty()) {
    report.relation = OrderRelation::YDominates;
    report.max_violation = against_y;
    report.violation_points = std::move(x_viol);
  } else {
    report.relation = OrderRelation::Crossing;
    report.max_violation = std::max(against_x, against_y);
    report.violation_points = std::move(x_viol);
    report.violation_points.insert(report.violation_points.end(), y_viol.begin(), y_viol.end());
    std::sort(report.violation_points.begin(), report.violation_points.end());
  }
  return report;
}

}  // namespace

std::string to_string(OrderRelation r) {
  switch (r) {
    case OrderRelation::XDominates:
      return "X_dominates";
    case OrderRelation::YDominates:
      return "Y_dominates";
    case OrderRelation::Crossing:
      return "crossing";
    case OrderRelation::Indistinguishable:
      return "indistinguishable";
  }
  return "?";
}

std::vector<double> ordering_grid(int n) {
  if (n < 2) throw DomainError("ordering_grid: need at least 2 points");
  const double lo = 1e-3, hi = 1.0 - 1e-3;
  const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  std::vector<double> ps(n);
  for (int k = 0; k < n; ++k)
    ps[k] = mid - half * std::cos(M_PI * static_cast<double>(k) / (n - 1));
  // cos sweep runs hi->lo; the formula above already yields ascending order.
  return ps;
}

OrderingReport lorenz_order(const Distribution& x, const Distribution& y, int grid,
                            const QuadratureConfig& cfg) {
  SocietalFunction sx(x, UtilityFn::identity(), cfg);
  SocietalFunction sy(y, UtilityFn::identity(), cfg);
  const auto ps = ordering_grid(grid);
  std::vector<double> diffs(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i)
    diffs[i] = sx.lorenz(ps[i]) - sy.lorenz(ps[i]);  // X dominates iff L_X >= L_Y
  return classify(ps, diffs);
}

OrderingReport r_order(const Distribution& x, const Distribution& y, int grid,
                       const QuadratureConfig& cfg) {
  SocietalFunction sx(x, UtilityFn::identity(), cfg);
  SocietalFunction sy(y, UtilityFn::identity(), cfg);
  const auto ps = ordering_grid(grid);
  std::vector<double> diffs(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i)
    diffs[i] = sy.risk_function(ps[i]) - sx.risk_function(ps[i]);  // X dominates iff R_X <= R_Y
  return classify(ps, diffs);
}

PigouDaltonReport pigou_dalton_order(const Distribution& x, const Distribution& y, int grid,
                                     const QuadratureConfig& cfg) {
  PigouDaltonReport report;
  const double mx = x.mean(), my = y.mean();
  report.mean_gap = std::abs(mx - my);
  report.means_equal = report.mean_gap <= 1e-8 * std::max(mx, my);
  report.lorenz = lorenz_order(x, y, grid, cfg);
  return report;
}

SignPatternReport sign_pattern_check(const Distribution& x, const Distribution& y, int grid,
                                     const QuadratureConfig& cfg) {
  if (!x.has_density() || !y.has_density())
    throw NoDensity("sign_pattern_check: both distributions need densities");

  SignPatternReport report;
  report.grid_size = grid;

  const double lo = std::min(x.quantile(1e-3), y.quantile(1e-3));
  const double hi = std::max(x.quantile(1.0 - 1e-3), y.quantile(1.0 - 1e-3));
  constexpr double kBand = 1e-12;

  int prev_sign = 0;
  bool prev_outside_band = false;
  for (int k = 0; k < grid; ++k) {
    const double t = lo + (hi - lo) * (static_cast<double>(k) + 0.5) / grid;
    const double diff = x.pdf(t) - y.pdf(t);
    int sign = 0;
    if (diff > kBand)
      sign = +1;
    else if (diff < -kBand)
      sign = -1;
    if (sign == 0) {
      prev_outside_band = false;
      continue;
    }
    if (sign != prev_sign) {
      report.pattern.push_back(sign > 0 ? '+' : '-');
      if (prev_sign != 0) {
        ++report.sign_changes;
        // Flip between adjacent samples that both sit outside the dead band:
        // the crossing location is not resolved at this grid spacing.
        if (prev_outside_band) report.resolution_warning = true;
      }
      prev_sign = sign;
    }
    prev_outside_band = true;
  }

  report.is_plus_minus_plus = (report.pattern == "+-+");
  const double mx = x.mean(), my = y.mean();
  report.means_equal = std::abs(mx - my) <= 1e-8 * std::max(mx, my);

  if (report.is_plus_minus_plus && report.means_equal) {
    // First member carries more mass in both tails, so the second member is
    // the Lorenz-dominant one.
    report.lorenz_checked = true;
    const auto lr = lorenz_order(x, y, grid, cfg);
    report.lorenz_consistent = (lr.relation == OrderRelation::YDominates);
  }
  return report;
}

}  // namespace ineqlab
