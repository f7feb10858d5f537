#include "ineqlab/value_functions.hpp"

#include <cmath>
#include <random>

#include "ineqlab/format.hpp"

namespace ineqlab {

UtilityFn UtilityFn::identity() { return UtilityFn(true, 1.0); }

UtilityFn UtilityFn::power(double gamma) {
  if (!(gamma > 0.0) || !(gamma < 1.0))
    throw DomainError("UtilityFn::power: gamma must lie in (0, 1)");
  return UtilityFn(false, gamma);
}

double UtilityFn::operator()(double x) const {
  if (identity_) return x;
  if (x < 0.0) throw DomainError("utility: argument must be non-negative");
  return std::pow(x, gamma_);
}

std::string UtilityFn::label() const {
  return identity_ ? "identity" : "power:" + fmt_g(gamma_);
}

RelativeValueFn RelativeValueFn::one_minus_ratio() {
  return RelativeValueFn(Kind::OneMinusRatio, 0.0, nullptr, "one_minus_ratio");
}
RelativeValueFn RelativeValueFn::pow_one_minus_ratio(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("pow_one_minus_ratio: alpha must be positive");
  return RelativeValueFn(Kind::PowerOneMinusRatio, alpha, nullptr,
                         "pow_one_minus_ratio:" + fmt_g(alpha));
}
RelativeValueFn RelativeValueFn::ratio_yx() {
  return RelativeValueFn(Kind::RatioYX, 0.0, nullptr, "y_over_x");
}
RelativeValueFn RelativeValueFn::ratio_yx_minus_one() {
  return RelativeValueFn(Kind::RatioYXMinusOne, 0.0, nullptr, "y_over_x_minus_1");
}
RelativeValueFn RelativeValueFn::ratio_xy_minus_one() {
  return RelativeValueFn(Kind::RatioXYMinusOne, 0.0, nullptr, "x_over_y_minus_1");
}
RelativeValueFn RelativeValueFn::l_form(std::function<double(double)> ell, std::string name) {
  if (!ell) throw DomainError("l_form: missing function");
  return RelativeValueFn(Kind::LForm, 0.0, std::move(ell), std::move(name));
}

double RelativeValueFn::operator()(double x, double y) const {
  switch (kind_) {
    case Kind::OneMinusRatio:
      if (y == 0.0) throw DivisionByZero(name_ + ": reference y vanished");
      return 1.0 - x / y;
    case Kind::PowerOneMinusRatio:
      if (y == 0.0) throw DivisionByZero(name_ + ": reference y vanished");
      return std::pow(1.0 - x / y, alpha_);
    case Kind::RatioYX:
      if (x == 0.0) throw DivisionByZero(name_ + ": achieved value x vanished");
      return y / x;
    case Kind::RatioYXMinusOne:
      if (x == 0.0) throw DivisionByZero(name_ + ": achieved value x vanished");
      return y / x - 1.0;
    case Kind::RatioXYMinusOne:
      if (y == 0.0) throw DivisionByZero(name_ + ": reference y vanished");
      return x / y - 1.0;
    case Kind::LForm:
      if (y == 0.0) throw DivisionByZero(name_ + ": reference y vanished");
      return ell_(x / y);
  }
  throw Error("unreachable relative-value kind");
}

std::string RelativeValueFn::label() const { return name_; }

HomogeneityReport homogeneity_check(const RelativeValueFn& v, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> positive(0.1, 10.0);
  HomogeneityReport report;
  report.samples = samples;
  for (int i = 0; i < samples; ++i) {
    const double x = positive(rng);
    const double y = positive(rng);
    const double lambda = positive(rng);
    const double diff = std::abs(v(lambda * x, lambda * y) - v(x, y));
    if (!(diff <= 1e-10)) report.failures.push_back({x, y, lambda, diff});
  }
  return report;
}

NormalizingFn NormalizingFn::identity() { return NormalizingFn(Kind::Identity, 0.0, 0.0); }

NormalizingFn NormalizingFn::atkinson(double gamma, double ref_mean) {
  if (!(gamma > 0.0) || !(gamma < 1.0))
    throw DomainError("NormalizingFn::atkinson: gamma must lie in (0, 1)");
  if (!(ref_mean > 0.0))
    throw DomainError("NormalizingFn::atkinson: ref_mean must be positive");
  return NormalizingFn(Kind::Atkinson, gamma, ref_mean);
}

NormalizingFn NormalizingFn::chakravarty(double alpha) {
  if (!(alpha >= 1.0)) throw DomainError("NormalizingFn::chakravarty: alpha must be >= 1");
  return NormalizingFn(Kind::Chakravarty, alpha, 0.0);
}

NormalizingFn NormalizingFn::root(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("NormalizingFn::root: alpha must be positive");
  return NormalizingFn(Kind::Root, alpha, 0.0);
}

NormalizingFn NormalizingFn::wang(double mu, double coef) {
  if (!(mu > 0.0)) throw DomainError("NormalizingFn::wang: mu must be positive");
  return NormalizingFn(Kind::Wang, mu, coef);
}

double NormalizingFn::operator()(double x) const {
  switch (kind_) {
    case Kind::Identity:
      return x;
    case Kind::Atkinson:
      return 1.0 - std::pow(1.0 - x, 1.0 / a_) * std::pow(b_, (1.0 - a_) / a_);
    case Kind::Chakravarty:
      return 2.0 * std::pow(a_ + 1.0, -1.0 / a_) * std::pow(x, 1.0 / a_);
    case Kind::Root:
      return std::pow(x, 1.0 / a_);
    case Kind::Wang:
      return a_ * (x * b_ + 1.0);
  }
  throw Error("unreachable normalizing kind");
}

std::string NormalizingFn::label() const {
  switch (kind_) {
    case Kind::Identity:
      return "identity";
    case Kind::Atkinson:
      return "atkinson:" + fmt_g(a_) + (b_ != 1.0 ? " (mean " + fmt_g(b_) + ")" : "");
    case Kind::Chakravarty:
      return "chakravarty:" + fmt_g(a_);
    case Kind::Root:
      return "root:" + fmt_g(a_);
    case Kind::Wang:
      return "wang(mu=" + fmt_g(a_) + ",coef=" + fmt_g(b_) + ")";
  }
  return "?";
}

}  // namespace ineqlab
