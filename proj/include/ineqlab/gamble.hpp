#ifndef INEQLAB_GAMBLE_HPP
#define INEQLAB_GAMBLE_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ineqlab/quadrature.hpp"

namespace ineqlab {

/// A generating function on [0, 1] with derivative evaluators.  Used as a
/// convex class-(H) generator (boundary slope h'(0)) or a concave class-(G)
/// generator (boundary slope g'(1)).  Missing derivative evaluators are
/// backed by central finite differences with step 1e-5.
struct GeneratorFn {
  std::string name;
  std::function<double(double)> value;
  std::function<double(double)> deriv1;  // optional
  std::function<double(double)> deriv2;  // optional

  double operator()(double t) const { return value(t); }
  double d1(double t) const;
  double d2(double t) const;
  bool analytic_derivatives() const { return static_cast<bool>(deriv1) && static_cast<bool>(deriv2); }
  /// h'(0), by analytic evaluator or one-sided Richardson difference.
  double slope_at_zero() const;
  /// g'(1), likewise.
  double slope_at_one() const;
};

/// h(t) = t^alpha, alpha > 1: convex, h(0)=0, h(1)=1, h'(0)=0.
GeneratorFn make_power_h(double alpha);
/// g(t) = t^alpha, alpha in (0,1): concave, g(0)=0, g(1)=1, g'(1)=alpha.
GeneratorFn make_power_g(double alpha);

enum class GeneratorClass { H, G };

struct GeneratorValidation {
  bool valid = true;
  std::vector<std::string> violations;
};

/// Boundary values, second-derivative sign on a 1000-point grid, the
/// h'(0) != 1 (resp. g'(1) != 1) condition, and -- when analytic derivatives
/// exist -- their consistency with finite differences.
GeneratorValidation validate_generator(const GeneratorFn& f, GeneratorClass cls);

/// Personal-gamble law on [0, 1]: the random percentile position.
class Gamble {
 public:
  enum class Kind { Beta, Point, HGenerated, GGenerated, Truncated };

  static Gamble beta(double a, double b);
  static Gamble point(double p0);
  /// Density t h''(1-t) / (1 - h'(0)); h must satisfy class (H).
  static Gamble h_generated(GeneratorFn h);
  /// Density -(1-t) g''(1-t) / (1 - g'(1)); g must satisfy class (G).
  static Gamble g_generated(GeneratorFn g);
  /// Restriction of a continuous gamble to [lo, hi], renormalized.
  static Gamble truncated(Gamble inner, double lo, double hi);

  Kind kind() const;
  bool is_atom() const;
  double atom() const;  // Point only
  /// Density at t in (0, 1); throws AtomicGamble for Point.
  double density(double t) const;
  /// Density at t = 1-s, computed directly in the tail coordinate s so
  /// endpoint powers like (1-t)^{b-1} keep full precision for tiny s.
  double density_complement(double s) const;
  /// E[phi(pi)].
  double expect(const std::function<double(double)>& phi, const QuadratureConfig& cfg = {}) const;
  /// E[phi_of_s(1 - pi)]: the same expectation integrated in the complement
  /// coordinate s = 1 - t.  Used for upper-tail functionals, where densities
  /// singular at 1 and the integrand's own tail behavior live at s -> 0.
  double expect_upper(const std::function<double(double)>& phi_of_s,
                      const QuadratureConfig& cfg = {}) const;
  IntegrationResult expect_upper_detailed(const std::function<double(double)>& phi_of_s,
                                          const QuadratureConfig& cfg = {}) const;
  /// E[phi(pi)] with the quadrature diagnostics ({value, 0, 1} for atoms).
  IntegrationResult expect_detailed(const std::function<double(double)>& phi,
                                    const QuadratureConfig& cfg = {}) const;
  std::string label() const;

 private:
  struct Impl;
  explicit Gamble(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
  friend class GamblePair;
};

/// Joint law of the pair (pi, pi*) under the pairings the framework uses.
class GamblePair {
 public:
  enum class Pairing { Identical, Independent, DegenerateSecond, DegenerateFirst };

  static GamblePair identical(Gamble pi);
  static GamblePair independent(Gamble pi, Gamble pi_star);
  static GamblePair degenerate_second(Gamble pi, double p_star);
  static GamblePair degenerate_first(double p, Gamble pi_star);

  Pairing pairing() const { return pairing_; }
  const Gamble& first() const { return pi_; }
  const Gamble& second() const { return pi_star_; }

  /// E[psi(pi, pi*)].  Independent pairs use nested quadrature (outer
  /// tolerance 1e-8, inner 1e-9 by default).
  double expect(const std::function<double(double, double)>& psi,
                const QuadratureConfig& outer_cfg = {.rel_tol = 1e-8, .abs_tol = 1e-10},
                const QuadratureConfig& inner_cfg = {.rel_tol = 1e-9, .abs_tol = 1e-11}) const;

  /// As expect(), with the outer quadrature diagnostics.
  IntegrationResult expect_detailed(
      const std::function<double(double, double)>& psi,
      const QuadratureConfig& outer_cfg = {.rel_tol = 1e-8, .abs_tol = 1e-10},
      const QuadratureConfig& inner_cfg = {.rel_tol = 1e-9, .abs_tol = 1e-11}) const;

  std::string label() const;

 private:
  GamblePair(Pairing pairing, Gamble pi, Gamble pi_star)
      : pairing_(pairing), pi_(std::move(pi)), pi_star_(std::move(pi_star)) {}
  Pairing pairing_;
  Gamble pi_;
  Gamble pi_star_;
};

}  // namespace ineqlab

#endif
