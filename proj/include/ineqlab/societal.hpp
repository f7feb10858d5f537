#ifndef INEQLAB_SOCIETAL_HPP
#define INEQLAB_SOCIETAL_HPP

#include <memory>
#include <vector>

#include "ineqlab/distribution.hpp"
#include "ineqlab/quadrature.hpp"
#include "ineqlab/value_functions.hpp"

namespace ineqlab {

/// Lorenz, Bonferroni, and conditional-expectation functions of u(X), where X
/// follows the wrapped distribution and u is non-decreasing (identity by
/// default).  Pure and immutable after construction.
class SocietalFunction {
 public:
  explicit SocietalFunction(Distribution dist, UtilityFn utility = UtilityFn::identity(),
                            QuadratureConfig cfg = {});

  /// E[u(X)]; exact for identity/empirical, quadrature otherwise.
  double mean() const { return mean_u_; }

  /// Cumulative share of u-income held by the poorest fraction p; p in [0,1].
  double lorenz(double p) const;

  /// 1 - lorenz(p)/p = 1 - lce(p)/mean, p in (0,1).
  double bonferroni_curve(double p) const;

  /// Mean u-income of those below the p-th quantile; p in [1e-12, 1].
  double lce(double p) const;

  /// Mean u-income of those above the p-th quantile; p in [0, 1-1e-12];
  /// uce(0) = mean.
  double uce(double p) const;

  /// uce(p)/lce(p) - 1, p in (0,1); throws ZeroLowerMean when lce(p) = 0.
  double risk_function(double p) const;

  /// int_0^p u(F^{-1}(t)) dt for p in [0,1].
  double partial_mean(double p) const;

  /// int_{1-s}^1 u(F^{-1}(t)) dt in exact tail-mass arithmetic.
  double upper_partial_mean(double s) const;

  /// uce(1-s) = upper_partial_mean(s)/s, stable for arbitrarily small tail
  /// mass s in (0, 1]; uce_tail(1) = mean.
  double uce_tail(double s) const;

  const Distribution& distribution() const { return dist_; }
  const UtilityFn& utility() const { return utility_; }

 private:
  Distribution dist_;
  UtilityFn utility_;
  QuadratureConfig cfg_;
  double mean_u_;
  // Sorted u(x_i) with prefix sums, for exact empirical evaluation under a
  // non-identity utility.
  std::shared_ptr<const std::vector<double>> u_values_;
  std::shared_ptr<const std::vector<double>> u_prefix_;
};

}  // namespace ineqlab

#endif
