#include "ineqlab/zenga_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ineqlab/errors.hpp"
#include "ineqlab/special_functions.hpp"

namespace ineqlab {

namespace {
constexpr int kCacheNodes = 320;
constexpr double kQuantileCdfTol = 1e-8;
constexpr int kMaxBisectSteps = 200;
}  // namespace

ZengaDistribution::ZengaDistribution(double mu, double alpha, double theta)
    : params_{mu, alpha, theta} {
  if (!(mu > 0.0) || !(alpha > 0.0) || !(theta > 0.0))
    throw DomainError("Zenga: mu, alpha, theta must be positive");
  if (!(theta > 1.0))
    throw DomainError("Zenga: theta <= 1 makes the density infinite at x = mu; theta > 1 required");

  norm_ = 1.0 / (2.0 * mu * beta_function(alpha, theta));
  // The inner integral is Beta(alpha+1/2, theta-1) * I_y(alpha+1/2, theta-1);
  // for thin (1-s) exponents the continued fraction loses accuracy, so fall
  // back to direct quadrature there.
  inner_by_quadrature_ = (theta - 1.0 <= 0.5);

  cache_cfg_.rel_tol = 1e-11;
  cache_cfg_.abs_tol = 1e-13;
  cache_cfg_.max_subdivisions = 400;

  // Node layout x = mu u/(1-u), u = k/N: dense near 0, node exactly at mu,
  // stretching to mu(N-1) before the open tail segment.
  node_x_.reserve(kCacheNodes);
  for (int k = 0; k < kCacheNodes; ++k) {
    const double u = static_cast<double>(k) / kCacheNodes;
    node_x_.push_back(mu * u / (1.0 - u));
  }

  cdf_at_.resize(node_x_.size());
  m1_at_.resize(node_x_.size());
  cdf_at_[0] = 0.0;
  m1_at_[0] = 0.0;
  for (std::size_t k = 1; k < node_x_.size(); ++k) {
    cdf_at_[k] = cdf_at_[k - 1] + cdf_between(node_x_[k - 1], node_x_[k]);
    m1_at_[k] = m1_at_[k - 1] + first_moment_between(node_x_[k - 1], node_x_[k]);
  }

  // Deep-tail table at half-octave spacing.  The tail integrals use a
  // relative-only tolerance so the entries stay meaningful at any magnitude.
  tail_cfg_.rel_tol = 1e-11;
  tail_cfg_.abs_tol = 1e-280;
  tail_cfg_.max_subdivisions = 400;
  constexpr int kTailNodes = 241;
  tail_ln_s_.reserve(kTailNodes);
  tail_ln_m_.reserve(kTailNodes);
  for (int j = 0; j < kTailNodes; ++j) {
    const double x = mu * std::pow(2.0, 0.5 * j);
    const double sv = tail_survival(x);
    const double fm = tail_first_moment(x);
    if (!(sv > 0.0) || !(fm > 0.0) || !std::isfinite(std::log(sv))) break;  // underflowed
    tail_ln_s_.push_back(std::log(sv));
    tail_ln_m_.push_back(std::log(fm));
  }
}

double ZengaDistribution::inner_integral(double y) const {
  const double a = params_.alpha + 0.5;
  const double b = params_.theta - 1.0;
  if (y <= 0.0) return 0.0;
  if (y > 1.0) y = 1.0;
  if (!inner_by_quadrature_) return beta_function(a, b) * reg_inc_beta(a, b, y);
  auto integrand = [a, b](double s) {
    return std::pow(s, a - 1.0) * std::pow(1.0 - s, b - 1.0);
  };
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-12;
  cfg.abs_tol = 1e-14;
  return integrate(integrand, 0.0, y, cfg).value;
}

double ZengaDistribution::pdf(double x) const {
  if (!(x > 0.0)) throw DomainError("Zenga pdf: x must be positive");
  const double mu = params_.mu;
  const double ratio = (x < mu) ? x / mu : mu / x;
  return norm_ * std::pow(ratio, x < mu ? -1.5 : 1.5) * inner_integral(x < mu ? x / mu : mu / x);
}

double ZengaDistribution::cdf_between(double a, double b) const {
  if (b <= a) return 0.0;
  return integrate([this](double x) { return pdf(x); }, a, b, cache_cfg_).value;
}

double ZengaDistribution::first_moment_between(double a, double b) const {
  if (b <= a) return 0.0;
  return integrate([this](double x) { return x * pdf(x); }, a, b, cache_cfg_).value;
}

std::size_t ZengaDistribution::node_at_or_below(double x) const {
  auto it = std::upper_bound(node_x_.begin(), node_x_.end(), x);
  return static_cast<std::size_t>(it - node_x_.begin()) - 1;
}

// Tail integrals int_x^inf x^j f(x) dx via the substitution s = x/y, which
// maps the tail onto (0, 1] with a polynomially vanishing integrand.  These
// keep cdf/quantile meaningful beyond the cache and to within ~1e-15 of 1,
// where accumulated panel error in the prefix sums would dominate.
double ZengaDistribution::tail_survival(double x) const {
  auto integrand = [this, x](double y) {
    const double s = x / y;
    return pdf(s) * x / (y * y);
  };
  return integrate(integrand, 0.0, 1.0, tail_cfg_).value;
}

double ZengaDistribution::tail_first_moment(double x) const {
  auto integrand = [this, x](double y) {
    const double s = x / y;
    return s * pdf(s) * x / (y * y);
  };
  return integrate(integrand, 0.0, 1.0, tail_cfg_).value;
}

double ZengaDistribution::cdf(double x) const {
  if (x <= 0.0) return 0.0;
  if (x >= node_x_.back()) return std::max(0.0, 1.0 - tail_survival(x));
  const std::size_t k = node_at_or_below(x);
  return std::min(cdf_at_[k] + cdf_between(node_x_[k], x), 1.0);
}

double ZengaDistribution::quantile(double t) const {
  if (!(t > 0.0) || !(t < 1.0)) throw DomainError("Zenga quantile: t must lie in (0, 1)");

  double lo = 0.0;
  double hi = params_.mu;
  int steps = 0;
  while (cdf(hi) < t) {
    lo = hi;
    hi *= 2.0;
    if (++steps > kMaxBisectSteps) throw NonConvergence("Zenga quantile: bracket growth failed");
  }

  double mid = 0.5 * (lo + hi);
  for (int i = 0; i < kMaxBisectSteps; ++i) {
    mid = 0.5 * (lo + hi);
    const double c = cdf(mid);
    if (std::abs(c - t) <= kQuantileCdfTol) return mid;
    if (c < t)
      lo = mid;
    else
      hi = mid;
  }
  throw NonConvergence("Zenga quantile: bisection did not reach cdf tolerance " +
                       std::to_string(kQuantileCdfTol));
}

double ZengaDistribution::partial_mean(double p) const {
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return params_.mu;
  const double q = quantile(p);
  double m1;
  if (q >= node_x_.back()) {
    m1 = params_.mu - tail_first_moment(q);
  } else {
    const std::size_t k = node_at_or_below(q);
    m1 = m1_at_[k] + first_moment_between(node_x_[k], q);
  }
  // First-order correction for the bisection residual cdf(q) - p.
  return m1 + q * (p - cdf(q));
}

double ZengaDistribution::upper_partial_mean(double s) const {
  if (s <= 0.0) return 0.0;
  if (s >= 1.0) return params_.mu;
  if (s >= 1e-6) return params_.mu - partial_mean(1.0 - s);

  // Deep tail: interpolate ln(first moment) against ln(survival); both are
  // near power laws in x, so the log-log curve is close to linear.
  const double ln_s = std::log(s);
  const auto& ls = tail_ln_s_;
  if (ls.size() < 2) return params_.mu - partial_mean(1.0 - s);
  std::size_t j = 0;
  if (ln_s <= ls.back()) {
    j = ls.size() - 2;  // extrapolate past the table with the last slope
  } else {
    // ls is decreasing; find j with ls[j+1] <= ln_s <= ls[j].
    std::size_t lo = 0, hi = ls.size() - 1;
    while (hi - lo > 1) {
      const std::size_t mid = (lo + hi) / 2;
      if (ls[mid] >= ln_s)
        lo = mid;
      else
        hi = mid;
    }
    j = lo;
  }
  const double w = (ln_s - ls[j]) / (ls[j + 1] - ls[j]);
  return std::exp(tail_ln_m_[j] + w * (tail_ln_m_[j + 1] - tail_ln_m_[j]));
}

}  // namespace ineqlab
