#ifndef INEQLAB_ZENGA_DISTRIBUTION_HPP
#define INEQLAB_ZENGA_DISTRIBUTION_HPP

#include <vector>

#include "ineqlab/quadrature.hpp"

namespace ineqlab {

struct ZengaParams {
  double mu;     // scale; equals the mean
  double alpha;  // tail shape
  double theta;  // center shape, > 1 so the density is finite at mu
};

/// Three-parameter heavy-tailed law on (0, inf): a mixture of truncated
/// Pareto laws with Beta(alpha, theta) weights.  The density is
///
///   f(x) = (x/mu)^{-3/2} / (2 mu B(a,t)) * int_0^{x/mu} s^{a-1/2} (1-s)^{t-2} ds,  x < mu
///   f(x) = (mu/x)^{ 3/2} / (2 mu B(a,t)) * int_0^{mu/x} s^{a-1/2} (1-s)^{t-2} ds,  x >= mu
///
/// with the two branches meeting continuously at x = mu.  The cdf has no
/// closed form; it is served from a fixed panel-integral cache built at
/// construction, so all evaluations are deterministic and the object is
/// immutable (hence freely shareable across threads).
class ZengaDistribution {
 public:
  ZengaDistribution(double mu, double alpha, double theta);

  const ZengaParams& params() const { return params_; }
  double mean() const { return params_.mu; }

  double pdf(double x) const;
  double cdf(double x) const;
  /// Bisection on cdf until |cdf(result) - t| <= 1e-8 (bracket grown
  /// geometrically from [0, mu]); at most 200 bisection steps.
  double quantile(double t) const;
  /// int_0^p F^{-1}(u) du via the cached first-moment grid.
  double partial_mean(double p) const;

  /// int_{1-s}^1 F^{-1}(u) du.  For tail masses below 1e-6 the value comes
  /// from a log-log survival/first-moment table, which stays relatively
  /// accurate arbitrarily deep into the Pareto-type tail.
  double upper_partial_mean(double s) const;

 private:
  double inner_integral(double y) const;  // int_0^y s^{alpha-1/2}(1-s)^{theta-2} ds
  double cdf_between(double a, double b) const;
  double first_moment_between(double a, double b) const;
  double tail_survival(double x) const;
  double tail_first_moment(double x) const;
  std::size_t node_at_or_below(double x) const;

  ZengaParams params_;
  double norm_;            // 1 / (2 mu B(alpha, theta))
  bool inner_by_quadrature_;
  std::vector<double> node_x_;    // node_x_[0] = 0, increasing
  std::vector<double> cdf_at_;    // cdf at nodes
  std::vector<double> m1_at_;     // int_0^node x f(x) dx
  QuadratureConfig cache_cfg_;
  QuadratureConfig tail_cfg_;     // relative-tolerance-only, for deep-tail values
  std::vector<double> tail_ln_s_;  // ln survival at x = mu 2^{j/2}, decreasing
  std::vector<double> tail_ln_m_;  // ln of int_x^inf t f(t) dt at the same nodes
};

}  // namespace ineqlab

#endif
