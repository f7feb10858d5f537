#ifndef INEQLAB_DISTRIBUTION_HPP
#define INEQLAB_DISTRIBUTION_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ineqlab/errors.hpp"

namespace ineqlab {

enum class DistKind {
  Uniform,
  Exponential,
  Pareto,
  Lognormal,
  PointMass,
  Empirical,
  Zenga,
  Affine,
};

namespace detail {
class DistImpl;
}

/// Immutable non-negative income/loss law.  Value-semantic handle over a
/// shared implementation; safe to copy and use concurrently.
class Distribution {
 public:
  static Distribution uniform(double lo, double hi);
  static Distribution exponential(double rate);
  /// Survival (scale/x)^shape for x >= scale; shape > 1 so the mean is finite.
  static Distribution pareto(double scale, double shape);
  static Distribution lognormal(double log_mean, double log_sd);
  static Distribution point_mass(double value);
  /// Sample values >= 0, any order; sorted internally.  Mean must be positive.
  static Distribution empirical(std::vector<double> values);
  static Distribution zenga(double mu, double alpha, double theta);

  double cdf(double x) const;
  double survival(double x) const;
  /// Left-continuous generalized inverse F^{-1}(t) = inf{x : F(x) >= t}, t in (0,1).
  double quantile(double t) const;
  double mean() const;
  /// int_0^p F^{-1}(t) dt for p in [0,1]; exact for every built-in family.
  double partial_mean(double p) const;
  /// int_{1-s}^1 F^{-1}(t) dt, parameterized by the tail mass s in [0,1] so
  /// that upper-tail expectations stay accurate where 1-s would round to 1.
  double upper_partial_mean(double s) const;

  bool has_density() const;
  double pdf(double x) const;

  /// Law of scale*X + shift, scale > 0, shift >= 0.  Exact family closure
  /// where it exists, otherwise a wrapped transformed law.
  Distribution transform_affine(double scale, double shift) const;

  DistKind kind() const;
  std::string label() const;
  /// PointMass location, or nullopt.
  std::optional<double> atom() const;
  /// Sorted sample for Empirical kinds (nullptr otherwise).
  const std::vector<double>* empirical_values() const;
  /// eta such that 1-F(x) ~ x^{-eta}; nullopt for light tails.
  std::optional<double> tail_exponent() const;
  /// E[X^gamma] in closed form where the family has one, else nullopt.
  std::optional<double> closed_power_moment(double gamma) const;

 private:
  explicit Distribution(std::shared_ptr<const detail::DistImpl> impl);
  std::shared_ptr<const detail::DistImpl> impl_;
};

/// Reads one numeric value per row; an optional single header line is
/// skipped.  Any other malformed row is a hard error naming the row number.
std::vector<double> load_csv_values(const std::string& path);

inline Distribution empirical_from_csv(const std::string& path) {
  return Distribution::empirical(load_csv_values(path));
}

/// Shared convention for empirical partial sums: with sorted values x_(1..n)
/// and k = min{k : k/n >= p}, returns (1/n) sum_{i<k} x_i + x_k (p - (k-1)/n).
double empirical_partial_mean(const std::vector<double>& sorted_values,
                              const std::vector<double>& prefix_sums, double p);

/// Complement of the above in exact tail-mass arithmetic:
/// int_{1-s}^1 F^{-1}(t) dt under the same quantile convention.
double empirical_upper_partial_mean(const std::vector<double>& sorted_values,
                                    const std::vector<double>& prefix_sums, double s);

/// Index k (1-based) of the empirical quantile convention x_(ceil(t n)).
std::size_t empirical_quantile_index(std::size_t n, double t);

}  // namespace ineqlab

#endif
