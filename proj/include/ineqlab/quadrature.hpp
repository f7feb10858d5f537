#ifndef INEQLAB_QUADRATURE_HPP
#define INEQLAB_QUADRATURE_HPP

#include <functional>

#include "ineqlab/errors.hpp"

namespace ineqlab {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;

  void validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_subdivisions < 1)
      throw DomainError("QuadratureConfig: rel_tol > 0, abs_tol > 0, max_subdivisions >= 1 required");
  }
};

struct IntegrationResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  int subdivisions = 1;
};

/// Globally adaptive bisection over [a, b] with a 15-point Kronrod panel rule
/// and the embedded 7-point Gauss value as error estimate.  All nodes are
/// strictly interior, so integrable endpoint singularities (p^{-1/2} and the
/// like) are handled without clipping the interval.
IntegrationResult integrate(const std::function<double(double)>& f, double a, double b,
                            const QuadratureConfig& cfg = {});

/// Integral over (0, 1).
IntegrationResult integrate_unit(const std::function<double(double)>& f,
                                 const QuadratureConfig& cfg = {});

/// Integral over (0, inf) via the substitution x = t/(1-t), dx = dt/(1-t)^2.
IntegrationResult integrate_halfline(const std::function<double(double)>& f,
                                     const QuadratureConfig& cfg = {});

/// Single non-adaptive 15-point Kronrod panel over [a, b].  Used where the
/// caller already knows the integrand is smooth at panel scale (cached-grid
/// refinements); no error control.
double kronrod_panel(const std::function<double(double)>& f, double a, double b);

}  // namespace ineqlab

#endif
