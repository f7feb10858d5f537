#include "ineqlab/societal.hpp"

#include <cmath>

#include "ineqlab/format.hpp"

namespace ineqlab {

namespace {
constexpr double kEdge = 1e-12;  // lce needs p >= kEdge, uce needs p <= 1 - kEdge
}

SocietalFunction::SocietalFunction(Distribution dist, UtilityFn utility, QuadratureConfig cfg)
    : dist_(std::move(dist)), utility_(utility), cfg_(cfg) {
  if (utility_.is_identity()) {
    mean_u_ = dist_.mean();
  } else if (const auto* values = dist_.empirical_values()) {
    auto u_vals = std::make_shared<std::vector<double>>();
    u_vals->reserve(values->size());
    for (double x : *values) u_vals->push_back(utility_(x));  // u non-decreasing: stays sorted
    auto prefix = std::make_shared<std::vector<double>>(values->size() + 1, 0.0);
    for (std::size_t i = 0; i < u_vals->size(); ++i)
      (*prefix)[i + 1] = (*prefix)[i] + (*u_vals)[i];
    u_values_ = std::move(u_vals);
    u_prefix_ = std::move(prefix);
    mean_u_ = u_prefix_->back() / static_cast<double>(values->size());
  } else if (dist_.atom()) {
    mean_u_ = utility_(*dist_.atom());
  } else {
    mean_u_ = integrate_unit(
                  [this](double t) { return utility_(dist_.quantile(t)); }, cfg_)
                  .value;
  }
  if (!(mean_u_ > 0.0) || !std::isfinite(mean_u_))
    throw DomainError("SocietalFunction: mean of utility-transformed variable must be finite and positive");
}

double SocietalFunction::partial_mean(double p) const {
  if (!(p >= 0.0) || !(p <= 1.0))
    throw DomainError("partial_mean: p = " + fmt_g(p) + " outside [0, 1]");
  if (p == 0.0) return 0.0;
  if (p == 1.0) return mean_u_;
  if (utility_.is_identity()) return dist_.partial_mean(p);
  if (u_values_) return empirical_partial_mean(*u_values_, *u_prefix_, p);
  if (const auto a = dist_.atom()) return utility_(*a) * p;
  return integrate([this](double t) { return utility_(dist_.quantile(t)); }, 0.0, p, cfg_).value;
}

double SocietalFunction::upper_partial_mean(double s) const {
  if (!(s >= 0.0) || !(s <= 1.0))
    throw DomainError("upper_partial_mean: s = " + fmt_g(s) + " outside [0, 1]");
  if (s == 0.0) return 0.0;
  if (s == 1.0) return mean_u_;
  if (utility_.is_identity()) return dist_.upper_partial_mean(s);
  if (u_values_) return empirical_upper_partial_mean(*u_values_, *u_prefix_, s);
  if (const auto a = dist_.atom()) return utility_(*a) * s;
  return mean_u_ - partial_mean(1.0 - s);
}

double SocietalFunction::uce_tail(double s) const {
  if (!(s > 0.0) || !(s <= 1.0))
    throw DomainError("uce_tail: s = " + fmt_g(s) + " outside (0, 1]");
  if (s == 1.0) return mean_u_;
  return upper_partial_mean(s) / s;
}

double SocietalFunction::lorenz(double p) const {
  if (!(p >= 0.0) || !(p <= 1.0))
    throw DomainError("lorenz: p = " + fmt_g(p) + " outside [0, 1]");
  if (p == 0.0) return 0.0;
  if (p == 1.0) return 1.0;
  return partial_mean(p) / mean_u_;
}

double SocietalFunction::lce(double p) const {
  if (!(p >= kEdge) || !(p <= 1.0))
    throw DomainError("lce: p = " + fmt_g(p) + " outside [1e-12, 1]");
  if (p == 1.0) return mean_u_;
  return partial_mean(p) / p;
}

double SocietalFunction::uce(double p) const {
  if (!(p >= 0.0) || !(p <= 1.0 - kEdge))
    throw DomainError("uce: p = " + fmt_g(p) + " outside [0, 1-1e-12]");
  if (p == 0.0) return mean_u_;
  return (mean_u_ - partial_mean(p)) / (1.0 - p);
}

double SocietalFunction::bonferroni_curve(double p) const {
  if (!(p > 0.0) || !(p < 1.0))
    throw DomainError("bonferroni_curve: p = " + fmt_g(p) + " outside (0, 1)");
  return 1.0 - lce(p) / mean_u_;
}

double SocietalFunction::risk_function(double p) const {
  if (!(p > 0.0) || !(p < 1.0))
    throw DomainError("risk_function: p = " + fmt_g(p) + " outside (0, 1)");
  const double pm = partial_mean(p);  // one evaluation serves both lce and uce
  if (!(pm > 0.0)) throw ZeroLowerMean("risk_function: lce(" + fmt_g(p) + ") = 0");
  const double lower = pm / p;
  const double upper = (mean_u_ - pm) / (1.0 - p);
  return upper / lower - 1.0;
}

}  // namespace ineqlab
