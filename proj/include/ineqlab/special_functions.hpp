#ifndef INEQLAB_SPECIAL_FUNCTIONS_HPP
#define INEQLAB_SPECIAL_FUNCTIONS_HPP

namespace ineqlab {

/// log Beta(a, b), a > 0, b > 0.
double log_beta(double a, double b);

/// Beta(a, b) = Gamma(a)Gamma(b)/Gamma(a+b).
double beta_function(double a, double b);

/// Regularized incomplete beta I_x(a, b), a > 0, b > 0, x in [0, 1].
/// Continued-fraction evaluation (Lentz) with the usual symmetry switch.
double reg_inc_beta(double a, double b, double x);

/// Unnormalized lower incomplete beta: int_0^x t^{a-1}(1-t)^{b-1} dt.
/// For b <= 0 the value is finite only for x < 1 and is computed by
/// adaptive quadrature; for b > 0 it is Beta(a,b) * I_x(a,b).
double lower_inc_beta(double a, double b, double x);

/// Standard normal cdf.
double norm_cdf(double z);

/// Standard normal quantile, t in (0, 1).  Rational initial guess refined by
/// one Halley step; accurate to ~1 ulp over the open interval.
double norm_quantile(double t);

}  // namespace ineqlab

#endif
