#include "ineqlab/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "ineqlab/format.hpp"
#include "ineqlab/quadrature.hpp"
#include "ineqlab/special_functions.hpp"
#include "ineqlab/zenga_distribution.hpp"

namespace ineqlab {

namespace detail {

class DistImpl {
 public:
  virtual ~DistImpl() = default;
  virtual DistKind kind() const = 0;
  virtual std::string label() const = 0;
  virtual double cdf(double x) const = 0;
  virtual double survival(double x) const { return 1.0 - cdf(x); }
  virtual double quantile(double t) const = 0;  // t in (0,1) guaranteed by wrapper
  virtual double mean() const = 0;
  virtual bool has_density() const { return false; }
  virtual double pdf(double) const { throw NoDensity(label() + " has no density"); }
  virtual std::optional<double> atom() const { return std::nullopt; }
  virtual const std::vector<double>* empirical_values() const { return nullptr; }
  virtual std::optional<double> tail_exponent() const { return std::nullopt; }
  virtual std::optional<double> power_moment(double) const { return std::nullopt; }

  // Closed-form transform where the family allows it; nullptr means the
  // caller wraps in an affine adapter.
  virtual std::shared_ptr<const DistImpl> scaled_shifted(double, double) const { return nullptr; }

  // int_0^p F^{-1}(t) dt.  Default: adaptive quadrature of the quantile.
  virtual double partial_mean(double p) const {
    if (p <= 0.0) return 0.0;
    if (p >= 1.0) return mean();
    return integrate([this](double t) { return quantile(t); }, 0.0, p).value;
  }

  // int_{1-s}^1 F^{-1}(t) dt.  The default loses the tail for s below ~1e-15;
  // families with closed complements override.
  virtual double upper_partial_mean(double s) const {
    if (s <= 0.0) return 0.0;
    if (s >= 1.0) return mean();
    return mean() - partial_mean(1.0 - s);
  }
};

namespace {

class UniformImpl final : public DistImpl {
 public:
  UniformImpl(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!(lo >= 0.0) || !(hi > lo))
      throw DomainError("uniform: requires 0 <= lo < hi");
    if (!(0.5 * (lo + hi) > 0.0)) throw DomainError("uniform: mean must be positive");
  }
  DistKind kind() const override { return DistKind::Uniform; }
  std::string label() const override { return "unif:" + fmt_g(lo_) + "," + fmt_g(hi_); }
  double cdf(double x) const override {
    if (x <= lo_) return 0.0;
    if (x >= hi_) return 1.0;
    return (x - lo_) / (hi_ - lo_);
  }
  double quantile(double t) const override { return lo_ + t * (hi_ - lo_); }
  double mean() const override { return 0.5 * (lo_ + hi_); }
  double partial_mean(double p) const override {
    if (p <= 0.0) return 0.0;
    if (p >= 1.0) return mean();
    return lo_ * p + 0.5 * (hi_ - lo_) * p * p;
  }
  bool has_density() const override { return true; }
  double pdf(double x) const override {
    return (x >= lo_ && x <= hi_) ? 1.0 / (hi_ - lo_) : 0.0;
  }
  std::shared_ptr<const DistImpl> scaled_shifted(double s, double c) const override {
    return std::make_shared<UniformImpl>(lo_ * s + c, hi_ * s + c);
  }
  std::optional<double> power_moment(double g) const override {
    return (std::pow(hi_, g + 1.0) - std::pow(lo_, g + 1.0)) / ((g + 1.0) * (hi_ - lo_));
  }
  double upper_partial_mean(double s) const override {
    if (s <= 0.0) return 0.0;
    if (s >= 1.0) return mean();
    return hi_ * s - 0.5 * (hi_ - lo_) * s * s;
  }

 private:
  double lo_, hi_;
};

class ExponentialImpl final : public DistImpl {
 public:
  explicit ExponentialImpl(double rate) : rate_(rate) {
    if (!(rate > 0.0)) throw DomainError("exponential: rate must be positive");
  }
  DistKind kind() const override { return DistKind::Exponential; }
  std::string label() const override { return "exp:" + fmt_g(rate_); }
  double cdf(double x) const override { return x <= 0.0 ? 0.0 : -std::expm1(-rate_ * x); }
  double survival(double x) const override { return x <= 0.0 ? 1.0 : std::exp(-rate_ * x); }
  double quantile(double t) const override { return -std::log1p(-t) / rate_; }
  double mean() const override { return 1.0 / rate_; }
  double partial_mean(double p) const override {
    if (p <= 0.0) return 0.0;
    if (p >= 1.0) return mean();
    // int_0^p -log(1-t) dt = p + (1-p) log(1-p)
    return (p + (1.0 - p) * std::log1p(-p)) / rate_;
  }
  bool has_density() const override { return true; }
  double pdf(double x) const override { return x < 0.0 ? 0.0 : rate_ * std::exp(-rate_ * x); }
  std::shared_ptr<const DistImpl> scaled_shifted(double s, double c) const override {
    if (c == 0.0) return std::make_shared<ExponentialImpl>(rate_ / s);
    return nullptr;
  }
  std::optional<double> power_moment(double g) const override {
    return std::tgamma(1.0 + g) / std::pow(rate_, g);
  }
  double upper_partial_mean(double s) const override {
    if (s <= 0.0) return 0.0;
    if (s >= 1.0) return mean();
    return s * (1.0 - std::log(s)) / rate_;
  }

 private:
  double rate_;
};

class ParetoImpl final : public DistImpl {
 public:
  ParetoImpl(double scale, double shape) : xm_(scale), a_(shape) {
    if (!(scale > 0.0)) throw DomainError("pareto: scale must be positive");
    if (!(shape > 0.0)) throw DomainError("pareto: shape must be positive");
    if (shape <= 1.0)
      throw InfiniteMeanError("pareto: shape <= 1 has no finite mean");
  }
  DistKind kind() const override { return DistKind::Pareto; }
  std::string label() const override { return "pareto:" + fmt_g(xm_) + "," + fmt_g(a_); }
  double cdf(double x) const override { return x <= xm_ ? 0.0 : 1.0 - std::pow(xm_ / x, a_); }
  double survival(double x) const override { return x <= xm_ ? 1.0 : std::pow(xm_ / x, a_); }
  double quantile(double t) const override { return xm_ * std::pow(1.0 - t, -1.0 / a_); }
  double mean() const override { return a_ * xm_ / (a_ - 1.0); }
  double partial_mean(double p) const override {
    if (p <= 0.0) return 0.0;
    if (p >= 1.0) return mean();
    const double e = (a_ - 1.0) / a_;
    return xm_ / e * (1.0 - std::pow(1.0 - p, e));
  }
  bool has_density() const override { return true; }
  double pdf(double x) const override {
    return x < xm_ ? 0.0 : a_ * std::pow(xm_, a_) * std::pow(x, -a_ - 1.0);
  }
  std::shared_ptr<const DistImpl> scaled_shifted(double s, double c) const override {
    if (c == 0.0) return std::make_shared<ParetoImpl>(xm_ * s, a_);
    return nullptr;
  }
  std::optional<double> tail_exponent() const override { return a_; }
  std::optional<double> power_moment(double g) const override {
    if (a_ <= g) return std::nullopt;
    return a_ * std::pow(xm_, g) / (a_ - g);
  }
  double upper_partial_mean(double s) const override {
    if (s <= 0.0) return 0.0;
    if (s >= 1.0) return mean();
    const double e = (a_ - 1.0) / a_;
    return xm_ / e * std::pow(s, e);
  }

 private:
  double xm_, a_;
};

class LognormalImpl final : public DistImpl {
 public:
  LognormalImpl(double m, double s) : m_(m), s_(s) {
    if (!(s > 0.0)) throw DomainError("lognormal: log_sd must be positive");
  }
  DistKind kind() const override { return DistKind::Lognormal; }
  std::string label() const override { return "lognorm:" + fmt_g(m_) + "," + fmt_g(s_); }
  double cdf(double x) const override {
    return x <= 0.0 ? 0.0 : norm_cdf((std::log(x) - m_) / s_);
  }
  double quantile(double t) const override { return std::exp(m_ + s_ * norm_quantile(t)); }
  double mean() const override { return std::exp(m_ + 0.5 * s_ * s_); }
  double partial_mean(double p) const override {
    if (p <= 0.0) return 0.0;
    if (p >= 1.0) return mean();
    // Partial expectation: int_0^p F^{-1} = E[X] Phi(Phi^{-1}(p) - s).
    return mean() * norm_cdf(norm_quantile(p) - s_);
  }
  bool has_density() const override { return true; }
  double pdf(double x) const override {
    if (x <= 0.0) return 0.0;
    const double z = (std::log(x) - m_) / s_;
    return std::exp(-0.5 * z * z) / (x * s_ * std::sqrt(2.0 * M_PI));
  }
  std::shared_ptr<const DistImpl> scaled_shifted(double s, double c) const override {
    if (c == 0.0) return std::make_shared<LognormalImpl>(m_ + std::log(s), s_);
    return nullptr;
  }
  std::optional<double> power_moment(double g) const override {
    return std::exp(g * m_ + 0.5 * g * g * s_ * s_);
  }
  double upper_partial_mean(double s) const override {
    if (s <= 0.0) return 0.0;
    if (s >= 1.0) return mean();
    return mean() * norm_cdf(s_ + norm_quantile(s));
  }

 private:
  double m_, s_;
};

class PointMassImpl final : public DistImpl {
 public:
  explicit PointMassImpl(double v) : v_(v) {
    if (!(v > 0.0)) throw DomainError("point_mass: value must be positive");
  }
  DistKind kind() const override { return DistKind::PointMass; }
  std::string label() const override { return "point:" + fmt_g(v_); }
  double cdf(double x) const override { return x >= v_ ? 1.0 : 0.0; }
  double quantile(double) const override { return v_; }
  double mean() const override { return v_; }
  double partial_mean(double p) const override { return v_ * std::clamp(p, 0.0, 1.0); }
  std::optional<double> atom() const override { return v_; }
  std::shared_ptr<const DistImpl> scaled_shifted(double s, double c) const override {
    return std::make_shared<PointMassImpl>(v_ * s + c);
  }
  std::optional<double> power_moment(double g) const override { return std::pow(v_, g); }
  double upper_partial_mean(double s) const override { return v_ * std::clamp(s, 0.0, 1.0); }

 private:
  double v_;
};

class EmpiricalImpl final : public DistImpl {
 public:
  explicit EmpiricalImpl(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw DomainError("empirical: sample must be non-empty");
    std::sort(values_.begin(), values_.end());
    if (values_.front() < 0.0)
      throw DomainError("empirical: negative values are outside the support");
    prefix_.resize(values_.size() + 1, 0.0);
    for (std::size_t i = 0; i < values_.size(); ++i) prefix_[i + 1] = prefix_[i] + values_[i];
    if (!(prefix_.back() > 0.0))
      throw DomainError("empirical: sample mean must be positive");
  }
  DistKind kind() const override { return DistKind::Empirical; }
  std::string label() const override {
    return "empirical[n=" + std::to_string(values_.size()) + "]";
  }
  double cdf(double x) const override {
    const auto count = std::upper_bound(values_.begin(), values_.end(), x) - values_.begin();
    return static_cast<double>(count) / static_cast<double>(values_.size());
  }
  double quantile(double t) const override {
    return values_[empirical_quantile_index(values_.size(), t) - 1];
  }
  double mean() const override { return prefix_.back() / static_cast<double>(values_.size()); }
  double partial_mean(double p) const override {
    return empirical_partial_mean(values_, prefix_, p);
  }
  double upper_partial_mean(double s) const override {
    return empirical_upper_partial_mean(values_, prefix_, s);
  }
  const std::vector<double>* empirical_values() const override { return &values_; }
  std::optional<double> power_moment(double g) const override {
    double acc = 0.0;
    for (double x : values_) acc += std::pow(x, g);
    return acc / static_cast<double>(values_.size());
  }
  std::shared_ptr<const DistImpl> scaled_shifted(double s, double c) const override {
    std::vector<double> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] = values_[i] * s + c;
    return std::make_shared<EmpiricalImpl>(std::move(out));
  }

 private:
  std::vector<double> values_;  // sorted
  std::vector<double> prefix_;  // prefix_[k] = sum of first k values
};

class ZengaImpl final : public DistImpl {
 public:
  ZengaImpl(double mu, double alpha, double theta) : z_(mu, alpha, theta) {}
  DistKind kind() const override { return DistKind::Zenga; }
  std::string label() const override {
    const auto& p = z_.params();
    return "zenga:" + fmt_g(p.mu) + "," + fmt_g(p.alpha) + "," + fmt_g(p.theta);
  }
  double cdf(double x) const override { return z_.cdf(x); }
  double quantile(double t) const override { return z_.quantile(t); }
  double mean() const override { return z_.mean(); }
  double partial_mean(double p) const override { return z_.partial_mean(p); }
  double upper_partial_mean(double s) const override { return z_.upper_partial_mean(s); }
  bool has_density() const override { return true; }
  double pdf(double x) const override { return x <= 0.0 ? 0.0 : z_.pdf(x); }
  std::shared_ptr<const DistImpl> scaled_shifted(double s, double c) const override {
    // mu is a pure scale parameter, so scaling stays in the family.
    if (c == 0.0) {
      const auto& p = z_.params();
      return std::make_shared<ZengaImpl>(p.mu * s, p.alpha, p.theta);
    }
    return nullptr;
  }
  std::optional<double> tail_exponent() const override { return 1.0 + z_.params().alpha; }

 private:
  ZengaDistribution z_;
};

class AffineImpl final : public DistImpl {
 public:
  AffineImpl(std::shared_ptr<const DistImpl> inner, double scale, double shift)
      : inner_(std::move(inner)), s_(scale), c_(shift) {}
  DistKind kind() const override { return DistKind::Affine; }
  std::string label() const override {
    return "affine(" + inner_->label() + ";scale=" + fmt_g(s_) + ",shift=" + fmt_g(c_) + ")";
  }
  double cdf(double x) const override { return inner_->cdf((x - c_) / s_); }
  double survival(double x) const override { return inner_->survival((x - c_) / s_); }
  double quantile(double t) const override { return s_ * inner_->quantile(t) + c_; }
  double mean() const override { return s_ * inner_->mean() + c_; }
  double partial_mean(double p) const override {
    const double pc = std::clamp(p, 0.0, 1.0);
    return s_ * inner_->partial_mean(pc) + c_ * pc;
  }
  double upper_partial_mean(double s) const override {
    const double sc = std::clamp(s, 0.0, 1.0);
    return s_ * inner_->upper_partial_mean(sc) + c_ * sc;
  }
  bool has_density() const override { return inner_->has_density(); }
  double pdf(double x) const override { return inner_->pdf((x - c_) / s_) / s_; }
  std::optional<double> tail_exponent() const override { return inner_->tail_exponent(); }
  std::shared_ptr<const DistImpl> scaled_shifted(double s, double c) const override {
    const double ns = s_ * s;
    const double nc = c_ * s + c;
    auto closed = inner_->scaled_shifted(ns, nc);
    if (closed) return closed;
    return std::make_shared<AffineImpl>(inner_, ns, nc);
  }

 private:
  std::shared_ptr<const DistImpl> inner_;
  double s_, c_;
};

}  // namespace

}  // namespace detail

std::size_t empirical_quantile_index(std::size_t n, double t) {
  const double tn = t * static_cast<double>(n);
  auto k = static_cast<std::size_t>(std::ceil(tn));
  if (k < 1) k = 1;
  // Snap floating-point noise back to the smallest k with k >= t*n.
  while (k > 1 && static_cast<double>(k - 1) >= tn) --k;
  if (k > n) k = n;
  return k;
}

double empirical_partial_mean(const std::vector<double>& sorted_values,
                              const std::vector<double>& prefix_sums, double p) {
  const auto n = sorted_values.size();
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return prefix_sums.back() / static_cast<double>(n);
  const std::size_t k = empirical_quantile_index(n, p);
  const double full = prefix_sums[k - 1] / static_cast<double>(n);
  const double frac = p - static_cast<double>(k - 1) / static_cast<double>(n);
  return full + sorted_values[k - 1] * frac;
}

double empirical_upper_partial_mean(const std::vector<double>& sorted_values,
                                    const std::vector<double>& prefix_sums, double s) {
  const auto n = sorted_values.size();
  const double nn = static_cast<double>(n);
  if (s <= 0.0) return 0.0;
  if (s >= 1.0) return prefix_sums.back() / nn;
  // m = number of whole top segments covered by the tail mass s.
  const double sn = s * nn;
  auto m = static_cast<std::size_t>(std::floor(sn));
  while (m + 1 <= n && static_cast<double>(m + 1) <= sn) ++m;
  while (m > 0 && static_cast<double>(m) > sn) --m;
  const double suffix = prefix_sums[n] - prefix_sums[n - m];
  double acc = suffix / nn;
  if (m < n) acc += sorted_values[n - m - 1] * (s - static_cast<double>(m) / nn);
  return acc;
}

Distribution::Distribution(std::shared_ptr<const detail::DistImpl> impl)
    : impl_(std::move(impl)) {}

Distribution Distribution::uniform(double lo, double hi) {
  return Distribution(std::make_shared<detail::UniformImpl>(lo, hi));
}
Distribution Distribution::exponential(double rate) {
  return Distribution(std::make_shared<detail::ExponentialImpl>(rate));
}
Distribution Distribution::pareto(double scale, double shape) {
  return Distribution(std::make_shared<detail::ParetoImpl>(scale, shape));
}
Distribution Distribution::lognormal(double log_mean, double log_sd) {
  return Distribution(std::make_shared<detail::LognormalImpl>(log_mean, log_sd));
}
Distribution Distribution::point_mass(double value) {
  return Distribution(std::make_shared<detail::PointMassImpl>(value));
}
Distribution Distribution::empirical(std::vector<double> values) {
  return Distribution(std::make_shared<detail::EmpiricalImpl>(std::move(values)));
}
Distribution Distribution::zenga(double mu, double alpha, double theta) {
  return Distribution(std::make_shared<detail::ZengaImpl>(mu, alpha, theta));
}

double Distribution::cdf(double x) const { return impl_->cdf(x); }
double Distribution::survival(double x) const { return impl_->survival(x); }

double Distribution::quantile(double t) const {
  if (!(t > 0.0) || !(t < 1.0))
    throw DomainError("quantile: t = " + fmt_g(t) + " outside (0, 1)");
  return impl_->quantile(t);
}

double Distribution::mean() const { return impl_->mean(); }

double Distribution::partial_mean(double p) const {
  if (!(p >= 0.0) || !(p <= 1.0))
    throw DomainError("partial_mean: p = " + fmt_g(p) + " outside [0, 1]");
  return impl_->partial_mean(p);
}

double Distribution::upper_partial_mean(double s) const {
  if (!(s >= 0.0) || !(s <= 1.0))
    throw DomainError("upper_partial_mean: s = " + fmt_g(s) + " outside [0, 1]");
  return impl_->upper_partial_mean(s);
}

bool Distribution::has_density() const { return impl_->has_density(); }
double Distribution::pdf(double x) const { return impl_->pdf(x); }

Distribution Distribution::transform_affine(double scale, double shift) const {
  if (!(scale > 0.0)) throw DomainError("transform_affine: scale must be positive");
  if (!(shift >= 0.0)) throw DomainError("transform_affine: shift must be non-negative");
  auto closed = impl_->scaled_shifted(scale, shift);
  if (closed) return Distribution(std::move(closed));
  return Distribution(std::make_shared<detail::AffineImpl>(impl_, scale, shift));
}

DistKind Distribution::kind() const { return impl_->kind(); }
std::string Distribution::label() const { return impl_->label(); }
std::optional<double> Distribution::atom() const { return impl_->atom(); }
const std::vector<double>* Distribution::empirical_values() const {
  return impl_->empirical_values();
}
std::optional<double> Distribution::tail_exponent() const { return impl_->tail_exponent(); }
std::optional<double> Distribution::closed_power_moment(double gamma) const {
  return impl_->power_moment(gamma);
}

std::vector<double> load_csv_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open CSV file: " + path);

  std::vector<double> values;
  std::string line;
  std::size_t row = 0;
  bool first_content_row = true;
  while (std::getline(in, line)) {
    ++row;
    // Trim whitespace and a possible UTF-8 BOM / trailing CR.
    if (row == 1 && line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0)
      line.erase(0, 3);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;  // blank line
    const std::string token = line.substr(start);

    double v = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    const bool ok = (ec == std::errc{} && ptr == token.data() + token.size());
    if (!ok) {
      if (first_content_row) {
        first_content_row = false;  // optional header
        continue;
      }
      throw ParseError("CSV row " + std::to_string(row) + ": not a number: '" + token + "'");
    }
    if (v < 0.0)
      throw ParseError("CSV row " + std::to_string(row) + ": negative value " + fmt_g(v));
    first_content_row = false;
    values.push_back(v);
  }
  if (values.empty()) throw ParseError("CSV file has no numeric rows: " + path);
  return values;
}

}  // namespace ineqlab
