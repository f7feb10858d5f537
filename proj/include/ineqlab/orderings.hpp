#ifndef INEQLAB_ORDERINGS_HPP
#define INEQLAB_ORDERINGS_HPP

#include <string>
#include <vector>

#include "ineqlab/distribution.hpp"
#include "ineqlab/quadrature.hpp"

namespace ineqlab {

enum class OrderRelation {
  XDominates,        // first argument is the less unequal / less risky member
  YDominates,
  Crossing,          // violations in both directions above tolerance
  Indistinguishable  // max |difference| below 1e-9 everywhere (numerical statement)
};

std::string to_string(OrderRelation r);

struct OrderingReport {
  OrderRelation relation = OrderRelation::Indistinguishable;
  double max_violation = 0.0;              // worst gap against the declared relation
  std::vector<double> violation_points;    // grid p-values violating dominance
  int grid_size = 0;
};

/// Chebyshev-spaced grid of `n` points in [1e-3, 1-1e-3], ascending.
/// Clusters near the endpoints, where ordering violations concentrate.
std::vector<double> ordering_grid(int n);

/// X <=_L Y (reported XDominates) iff L_X(p) >= L_Y(p) on the grid.
OrderingReport lorenz_order(const Distribution& x, const Distribution& y, int grid = 2001,
                            const QuadratureConfig& cfg = {});

/// X <=_R Y iff R_X(p) <= R_Y(p) on the grid.
OrderingReport r_order(const Distribution& x, const Distribution& y, int grid = 2001,
                       const QuadratureConfig& cfg = {});

/// X <=_PD Y: equal means (within 1e-8 * max mean) plus Lorenz dominance.
struct PigouDaltonReport {
  bool means_equal = false;
  double mean_gap = 0.0;
  OrderingReport lorenz;
  bool holds() const {
    return means_equal && (lorenz.relation == OrderRelation::XDominates ||
                           lorenz.relation == OrderRelation::Indistinguishable);
  }
};
PigouDaltonReport pigou_dalton_order(const Distribution& x, const Distribution& y,
                                     int grid = 2001, const QuadratureConfig& cfg = {});

/// Density-difference sign pattern on a quantile-spanning x-grid.  Signs with
/// |f_X - f_Y| < 1e-12 are treated as a dead band.  When the pattern is
/// (+,-,+) and the means agree, the first member is tail-heavier, so Lorenz
/// dominance of the second member is asserted and reported.
struct SignPatternReport {
  std::string pattern;          // compressed sign sequence, e.g. "+-+"
  int sign_changes = 0;
  bool is_plus_minus_plus = false;
  bool means_equal = false;
  bool lorenz_checked = false;      // only when is_plus_minus_plus && means_equal
  bool lorenz_consistent = false;   // lorenz_order == YDominates as the theorem needs
  bool resolution_warning = false;  // a sign flip between adjacent samples both outside the band
  int grid_size = 0;
};
SignPatternReport sign_pattern_check(const Distribution& x, const Distribution& y,
                                     int grid = 2001, const QuadratureConfig& cfg = {});

}  // namespace ineqlab

#endif
