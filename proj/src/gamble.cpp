#include "ineqlab/gamble.hpp"

#include <algorithm>
#include <cmath>

#include "ineqlab/errors.hpp"
#include "ineqlab/format.hpp"
#include "ineqlab/special_functions.hpp"

namespace ineqlab {

namespace {
constexpr double kFdStep = 1e-5;
}

double GeneratorFn::d1(double t) const {
  if (deriv1) return deriv1(t);
  const double h = kFdStep;
  if (t < h) return (value(t + h) - value(t)) / h;
  if (t > 1.0 - h) return (value(t) - value(t - h)) / h;
  return (value(t + h) - value(t - h)) / (2.0 * h);
}

double GeneratorFn::d2(double t) const {
  if (deriv2) return deriv2(t);
  const double h = kFdStep;
  const double tt = std::clamp(t, h, 1.0 - h);
  return (value(tt + h) - 2.0 * value(tt) + value(tt - h)) / (h * h);
}

double GeneratorFn::slope_at_zero() const {
  if (deriv1) return deriv1(0.0);
  const double h = kFdStep;
  // One-sided Richardson difference, O(h^2).
  return (4.0 * value(h) - value(2.0 * h) - 3.0 * value(0.0)) / (2.0 * h);
}

double GeneratorFn::slope_at_one() const {
  if (deriv1) return deriv1(1.0);
  const double h = kFdStep;
  return (3.0 * value(1.0) - 4.0 * value(1.0 - h) + value(1.0 - 2.0 * h)) / (2.0 * h);
}

GeneratorFn make_power_h(double alpha) {
  if (!(alpha > 1.0)) throw DomainError("make_power_h: alpha must exceed 1");
  return GeneratorFn{
      "poly_alpha=" + fmt_g(alpha),
      [alpha](double t) { return std::pow(t, alpha); },
      [alpha](double t) { return alpha * std::pow(t, alpha - 1.0); },
      [alpha](double t) { return alpha * (alpha - 1.0) * std::pow(t, alpha - 2.0); },
  };
}

GeneratorFn make_power_g(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw DomainError("make_power_g: alpha must lie in (0, 1)");
  return GeneratorFn{
      "pht_alpha=" + fmt_g(alpha),
      [alpha](double t) { return std::pow(t, alpha); },
      [alpha](double t) { return alpha * std::pow(t, alpha - 1.0); },
      [alpha](double t) { return alpha * (alpha - 1.0) * std::pow(t, alpha - 2.0); },
  };
}

GeneratorValidation validate_generator(const GeneratorFn& f, GeneratorClass cls) {
  GeneratorValidation report;
  auto fail = [&report](std::string msg) {
    report.valid = false;
    report.violations.push_back(std::move(msg));
  };

  if (std::abs(f.value(0.0)) > 1e-12) fail("boundary: f(0) = " + fmt_g(f.value(0.0)) + " != 0");
  if (std::abs(f.value(1.0) - 1.0) > 1e-12)
    fail("boundary: f(1) = " + fmt_g(f.value(1.0)) + " != 1");

  const double slope = (cls == GeneratorClass::H) ? f.slope_at_zero() : f.slope_at_one();
  const char* where = (cls == GeneratorClass::H) ? "h'(0)" : "g'(1)";
  if (std::abs(slope - 1.0) < 1e-9) fail(std::string(where) + " = 1 excluded");

  // Second-derivative sign on an interior grid; endpoint singularities of the
  // correct sign are fine.
  constexpr int kGrid = 1000;
  int sign_bad = 0;
  std::string first_bad;
  for (int i = 1; i <= kGrid; ++i) {
    const double t = static_cast<double>(i) / (kGrid + 1);
    const double dd = f.d2(t);
    const bool ok = (cls == GeneratorClass::H) ? (dd >= -1e-9) : (dd <= 1e-9);
    if (!ok) {
      if (sign_bad == 0)
        first_bad = std::string(cls == GeneratorClass::H ? "h''" : "g''") + "(" + fmt_g(t) +
                    ") = " + fmt_g(dd) + " has wrong sign";
      ++sign_bad;
    }
  }
  if (sign_bad > 0) fail(first_bad + " (" + std::to_string(sign_bad) + " grid points)");

  // Analytic derivatives, when present, must agree with finite differences.
  if (f.analytic_derivatives()) {
    for (int i = 1; i < 20; ++i) {
      const double t = 0.05 * i;
      const double fd1 = (f.value(t + kFdStep) - f.value(t - kFdStep)) / (2.0 * kFdStep);
      if (std::abs(fd1 - f.deriv1(t)) > 1e-5 * std::max(1.0, std::abs(f.deriv1(t))))
        fail("deriv1(" + fmt_g(t) + ") inconsistent with finite difference");
      const double h2 = 1e-4;  // larger step: second differences amplify rounding
      const double fd2 = (f.value(t + h2) - 2.0 * f.value(t) + f.value(t - h2)) / (h2 * h2);
      if (std::abs(fd2 - f.deriv2(t)) > 1e-4 * std::max(1.0, std::abs(f.deriv2(t))))
        fail("deriv2(" + fmt_g(t) + ") inconsistent with finite difference");
    }
  }

  return report;
}

struct Gamble::Impl {
  Kind kind;
  // Beta
  double a = 0.0, b = 0.0, log_beta_ab = 0.0;
  // Point
  double p0 = 0.0;
  // Generated
  GeneratorFn gen;
  double one_minus_slope = 1.0;
  // Truncated
  std::shared_ptr<const Impl> inner;
  double lo = 0.0, hi = 1.0, mass = 1.0;

  double density(double t) const {
    switch (kind) {
      case Kind::Beta:
        return std::exp((a - 1.0) * std::log(t) + (b - 1.0) * std::log1p(-t) - log_beta_ab);
      case Kind::Point:
        throw AtomicGamble("point gamble has an atom, not a density");
      case Kind::HGenerated:
        return t * gen.d2(1.0 - t) / one_minus_slope;
      case Kind::GGenerated:
        return -(1.0 - t) * gen.d2(1.0 - t) / one_minus_slope;
      case Kind::Truncated:
        if (t < lo || t > hi) return 0.0;
        return inner->density(t) / mass;
    }
    throw Error("unreachable gamble kind");
  }

  // Density at t = 1-s evaluated in s, so the factor (1-t) = s is exact.
  double density_complement(double s) const {
    switch (kind) {
      case Kind::Beta:
        return std::exp((a - 1.0) * std::log1p(-s) + (b - 1.0) * std::log(s) - log_beta_ab);
      case Kind::Point:
        throw AtomicGamble("point gamble has an atom, not a density");
      case Kind::HGenerated:
        return (1.0 - s) * gen.d2(s) / one_minus_slope;
      case Kind::GGenerated:
        return -s * gen.d2(s) / one_minus_slope;
      case Kind::Truncated:
        if (s < 1.0 - hi || s > 1.0 - lo) return 0.0;
        return inner->density_complement(s) / mass;
    }
    throw Error("unreachable gamble kind");
  }

  std::string label() const {
    switch (kind) {
      case Kind::Beta:
        return "beta:" + fmt_g(a) + "," + fmt_g(b);
      case Kind::Point:
        return "point:" + fmt_g(p0);
      case Kind::HGenerated:
        return "hgen:" + gen.name;
      case Kind::GGenerated:
        return "ggen:" + gen.name;
      case Kind::Truncated:
        return "trunc[" + fmt_g(lo) + "," + fmt_g(hi) + "](" + inner->label() + ")";
    }
    return "?";
  }
};

Gamble::Gamble(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Gamble Gamble::beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("Gamble::beta: shapes must be positive");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Beta;
  impl->a = a;
  impl->b = b;
  impl->log_beta_ab = log_beta(a, b);
  return Gamble(impl);
}

Gamble Gamble::point(double p0) {
  if (!(p0 >= 0.0) || !(p0 <= 1.0))
    throw DomainError("Gamble::point: position must lie in [0, 1]");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Point;
  impl->p0 = p0;
  return Gamble(impl);
}

Gamble Gamble::h_generated(GeneratorFn h) {
  auto report = validate_generator(h, GeneratorClass::H);
  if (!report.valid) {
    std::string msg = "class (H) violated by '" + h.name + "':";
    for (const auto& v : report.violations) msg += " " + v + ";";
    throw InvalidGenerator(msg);
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::HGenerated;
  impl->one_minus_slope = 1.0 - h.slope_at_zero();
  impl->gen = std::move(h);
  return Gamble(impl);
}

Gamble Gamble::g_generated(GeneratorFn g) {
  auto report = validate_generator(g, GeneratorClass::G);
  if (!report.valid) {
    std::string msg = "class (G) violated by '" + g.name + "':";
    for (const auto& v : report.violations) msg += " " + v + ";";
    throw InvalidGenerator(msg);
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::GGenerated;
  impl->one_minus_slope = 1.0 - g.slope_at_one();
  impl->gen = std::move(g);
  return Gamble(impl);
}

Gamble Gamble::truncated(Gamble inner, double lo, double hi) {
  if (!(lo >= 0.0) || !(hi <= 1.0) || !(lo < hi))
    throw DomainError("Gamble::truncated: need 0 <= lo < hi <= 1");
  if (inner.is_atom()) throw AtomicGamble("cannot truncate a point gamble");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Truncated;
  impl->inner = inner.impl_;
  impl->lo = lo;
  impl->hi = hi;
  impl->mass =
      integrate([&inner](double t) { return inner.density(t); }, lo, hi).value;
  if (!(impl->mass > 0.0))
    throw DomainError("Gamble::truncated: zero mass on [" + fmt_g(lo) + ", " + fmt_g(hi) + "]");
  return Gamble(impl);
}

Gamble::Kind Gamble::kind() const { return impl_->kind; }
bool Gamble::is_atom() const { return impl_->kind == Kind::Point; }

double Gamble::atom() const {
  if (!is_atom()) throw DomainError("Gamble::atom: not a point gamble");
  return impl_->p0;
}

double Gamble::density(double t) const {
  if (!(t > 0.0) || !(t < 1.0))
    throw DomainError("Gamble::density: t must lie in (0, 1)");
  return impl_->density(t);
}

// Both expectations integrate each half of the support in its own endpoint
// coordinate: t near 0 directly, s = 1 - t near 1.  Endpoint-singular
// densities (Beta shapes below 1, generated gambles with alpha < 2) then
// never see an argument rounded onto the endpoint itself.
IntegrationResult Gamble::expect_detailed(const std::function<double(double)>& phi,
                                          const QuadratureConfig& cfg) const {
  if (is_atom()) return IntegrationResult{phi(impl_->p0), 0.0, 1};
  const auto impl = impl_;
  const double lo = (impl->kind == Kind::Truncated) ? impl->lo : 0.0;
  const double hi = (impl->kind == Kind::Truncated) ? impl->hi : 1.0;
  const double mid = std::clamp(0.5, lo, hi);

  IntegrationResult total{0.0, 0.0, 0};
  if (mid > lo) {
    const auto part = integrate(
        [&phi, impl](double t) { return phi(t) * impl->density(t); }, lo, mid, cfg);
    total.value += part.value;
    total.abs_error_estimate += part.abs_error_estimate;
    total.subdivisions += part.subdivisions;
  }
  if (hi > mid) {
    const auto part = integrate(
        [&phi, impl](double s) { return phi(1.0 - s) * impl->density_complement(s); },
        1.0 - hi, 1.0 - mid, cfg);
    total.value += part.value;
    total.abs_error_estimate += part.abs_error_estimate;
    total.subdivisions += part.subdivisions;
  }
  if (total.subdivisions == 0) total.subdivisions = 1;
  return total;
}

double Gamble::expect(const std::function<double(double)>& phi,
                      const QuadratureConfig& cfg) const {
  return expect_detailed(phi, cfg).value;
}

double Gamble::density_complement(double s) const {
  if (!(s > 0.0) || !(s < 1.0))
    throw DomainError("Gamble::density_complement: s must lie in (0, 1)");
  return impl_->density_complement(s);
}

IntegrationResult Gamble::expect_upper_detailed(const std::function<double(double)>& phi_of_s,
                                                const QuadratureConfig& cfg) const {
  if (is_atom()) return IntegrationResult{phi_of_s(1.0 - impl_->p0), 0.0, 1};
  const auto impl = impl_;
  const double lo = (impl->kind == Kind::Truncated) ? impl->lo : 0.0;
  const double hi = (impl->kind == Kind::Truncated) ? impl->hi : 1.0;
  const double mid = std::clamp(0.5, lo, hi);

  IntegrationResult total{0.0, 0.0, 0};
  if (hi > mid) {
    // s runs over the upper half of the support, in exact tail coordinates.
    const auto part = integrate(
        [&phi_of_s, impl](double s) { return phi_of_s(s) * impl->density_complement(s); },
        1.0 - hi, 1.0 - mid, cfg);
    total.value += part.value;
    total.abs_error_estimate += part.abs_error_estimate;
    total.subdivisions += part.subdivisions;
  }
  if (mid > lo) {
    const auto part = integrate(
        [&phi_of_s, impl](double t) { return phi_of_s(1.0 - t) * impl->density(t); }, lo, mid,
        cfg);
    total.value += part.value;
    total.abs_error_estimate += part.abs_error_estimate;
    total.subdivisions += part.subdivisions;
  }
  if (total.subdivisions == 0) total.subdivisions = 1;
  return total;
}

double Gamble::expect_upper(const std::function<double(double)>& phi_of_s,
                            const QuadratureConfig& cfg) const {
  return expect_upper_detailed(phi_of_s, cfg).value;
}

std::string Gamble::label() const { return impl_->label(); }

GamblePair GamblePair::identical(Gamble pi) {
  Gamble copy = pi;
  return GamblePair(Pairing::Identical, std::move(pi), std::move(copy));
}

GamblePair GamblePair::independent(Gamble pi, Gamble pi_star) {
  return GamblePair(Pairing::Independent, std::move(pi), std::move(pi_star));
}

GamblePair GamblePair::degenerate_second(Gamble pi, double p_star) {
  return GamblePair(Pairing::DegenerateSecond, std::move(pi), Gamble::point(p_star));
}

GamblePair GamblePair::degenerate_first(double p, Gamble pi_star) {
  return GamblePair(Pairing::DegenerateFirst, Gamble::point(p), std::move(pi_star));
}

IntegrationResult GamblePair::expect_detailed(const std::function<double(double, double)>& psi,
                                              const QuadratureConfig& outer_cfg,
                                              const QuadratureConfig& inner_cfg) const {
  switch (pairing_) {
    case Pairing::Identical:
      return pi_.expect_detailed([&psi](double t) { return psi(t, t); }, outer_cfg);
    case Pairing::DegenerateSecond: {
      const double q = pi_star_.atom();
      return pi_.expect_detailed([&psi, q](double t) { return psi(t, q); }, outer_cfg);
    }
    case Pairing::DegenerateFirst: {
      const double p = pi_.atom();
      return pi_star_.expect_detailed([&psi, p](double t) { return psi(p, t); }, outer_cfg);
    }
    case Pairing::Independent: {
      if (pi_.is_atom()) {
        const double p = pi_.atom();
        return pi_star_.expect_detailed([&psi, p](double q) { return psi(p, q); }, outer_cfg);
      }
      if (pi_star_.is_atom()) {
        const double q = pi_star_.atom();
        return pi_.expect_detailed([&psi, q](double p) { return psi(p, q); }, outer_cfg);
      }
      const Gamble& star = pi_star_;
      return pi_.expect_detailed(
          [&psi, &star, &inner_cfg](double p) {
            return star.expect([&psi, p](double q) { return psi(p, q); }, inner_cfg);
          },
          outer_cfg);
    }
  }
  throw Error("unreachable pairing");
}

double GamblePair::expect(const std::function<double(double, double)>& psi,
                          const QuadratureConfig& outer_cfg,
                          const QuadratureConfig& inner_cfg) const {
  return expect_detailed(psi, outer_cfg, inner_cfg).value;
}

std::string GamblePair::label() const {
  switch (pairing_) {
    case Pairing::Identical:
      return "identical(" + pi_.label() + ")";
    case Pairing::Independent:
      return "independent(" + pi_.label() + ", " + pi_star_.label() + ")";
    case Pairing::DegenerateSecond:
      return "(" + pi_.label() + ", " + pi_star_.label() + ")";
    case Pairing::DegenerateFirst:
      return "(" + pi_.label() + ", " + pi_star_.label() + ")";
  }
  return "?";
}

}  // namespace ineqlab
