#ifndef INEQLAB_VALUE_FUNCTIONS_HPP
#define INEQLAB_VALUE_FUNCTIONS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ineqlab/errors.hpp"

namespace ineqlab {

/// Non-decreasing utility u on [0, inf): identity or x^gamma, gamma in (0,1).
class UtilityFn {
 public:
  static UtilityFn identity();
  static UtilityFn power(double gamma);

  double operator()(double x) const;
  bool is_identity() const { return identity_; }
  double gamma() const { return gamma_; }
  std::string label() const;

 private:
  UtilityFn(bool identity, double gamma) : identity_(identity), gamma_(gamma) {}
  bool identity_;
  double gamma_;
};

/// Positively homogeneous comparison v(x, y) of an achieved value x against a
/// reference y; every kind is of the form l(x/y) for some function l.
class RelativeValueFn {
 public:
  enum class Kind {
    OneMinusRatio,       // 1 - x/y
    PowerOneMinusRatio,  // (1 - x/y)^alpha
    RatioYX,             // y/x
    RatioYXMinusOne,     // y/x - 1
    RatioXYMinusOne,     // x/y - 1
    LForm,               // l(x/y)
  };

  static RelativeValueFn one_minus_ratio();
  static RelativeValueFn pow_one_minus_ratio(double alpha);
  static RelativeValueFn ratio_yx();
  static RelativeValueFn ratio_yx_minus_one();
  static RelativeValueFn ratio_xy_minus_one();
  static RelativeValueFn l_form(std::function<double(double)> ell, std::string name);

  /// Throws DivisionByZero naming the vanished argument.
  double operator()(double x, double y) const;

  Kind kind() const { return kind_; }
  std::string label() const;

 private:
  RelativeValueFn(Kind kind, double alpha, std::function<double(double)> ell, std::string name)
      : kind_(kind), alpha_(alpha), ell_(std::move(ell)), name_(std::move(name)) {}
  Kind kind_;
  double alpha_;
  std::function<double(double)> ell_;
  std::string name_;
};

struct HomogeneityReport {
  struct Failure {
    double x, y, lambda, diff;
  };
  int samples = 0;
  std::vector<Failure> failures;
  bool passed() const { return failures.empty(); }
};

/// Checks |v(lx, ly) - v(x, y)| <= 1e-10 on `samples` random positive triples.
HomogeneityReport homogeneity_check(const RelativeValueFn& v, int samples,
                                    std::uint64_t seed = 20250810u);

/// Normalizing map w applied to the expected relative value.
class NormalizingFn {
 public:
  enum class Kind { Identity, Atkinson, Chakravarty, Root, Wang };

  static NormalizingFn identity();
  /// 1 - (1-x)^{1/gamma} * ref_mean^{(1-gamma)/gamma}; ref_mean = 1 gives the
  /// plain 1 - (1-x)^{1/gamma}.
  static NormalizingFn atkinson(double gamma, double ref_mean = 1.0);
  static NormalizingFn chakravarty(double alpha);  // 2 (alpha+1)^{-1/alpha} x^{1/alpha}
  static NormalizingFn root(double alpha);         // x^{1/alpha}
  static NormalizingFn wang(double mu, double coef);  // mu (x coef + 1)

  double operator()(double x) const;
  Kind kind() const { return kind_; }
  std::string label() const;

 private:
  NormalizingFn(Kind kind, double a, double b) : kind_(kind), a_(a), b_(b) {}
  Kind kind_;
  double a_, b_;
};

}  // namespace ineqlab

#endif
