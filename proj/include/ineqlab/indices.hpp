#ifndef INEQLAB_INDICES_HPP
#define INEQLAB_INDICES_HPP

#include <map>
#include <string>
#include <vector>

#include "ineqlab/distribution.hpp"
#include "ineqlab/gamble.hpp"
#include "ineqlab/societal.hpp"
#include "ineqlab/value_functions.hpp"

namespace ineqlab {

/// One configuration of the general index: w(E[v(LCE_u(pi), UCE_u*(pi*))]).
struct IndexSpec {
  std::string label;
  GamblePair pair;
  NormalizingFn w;
  RelativeValueFn v;
  UtilityFn u = UtilityFn::identity();
  UtilityFn u_star = UtilityFn::identity();
};

struct IndexResult {
  std::string label;
  double value = 0.0;
  std::map<std::string, double> form_values;
  double abs_error_estimate = 0.0;
};

/// The general index engine.  Point gambles hit exact endpoints: pi* = 0
/// gives UCE(0) = E[u*(X)], pi = 1 gives LCE(1) = E[u(X)].
IndexResult general_index(const IndexSpec& spec, const Distribution& d,
                          const QuadratureConfig& cfg = {});

// ---------------------------------------------------------------------------
// Closed-form index implementations.  Each index with several published
// routes computes all of them and cross-checks; a disagreement beyond 1e-6
// (relative to index scale) throws FormMismatch rather than returning a
// silently wrong value.
// ---------------------------------------------------------------------------

struct GiniForms {
  double absolute;  // 2 E[p - L(p)] under Beta(1,1)
  double relative;  // E[1 - L(p)/p] under Beta(2,1)
};
GiniForms gini_forms(const Distribution& d, const QuadratureConfig& cfg = {});
double gini(const Distribution& d, const QuadratureConfig& cfg = {});

double bonferroni_index(const Distribution& d, const QuadratureConfig& cfg = {});

struct ChakravartyForms {
  double direct;  // 2 (int (t - L(t))^alpha dt)^{1/alpha}
  double engine;  // w applied to the Beta(alpha+1,1) expectation
  double tilde;   // ((alpha+1) int (t - L(t))^alpha dt)^{1/alpha}
};
ChakravartyForms chakravarty_forms(const Distribution& d, double alpha,
                                   const QuadratureConfig& cfg = {});
double chakravarty(const Distribution& d, double alpha, const QuadratureConfig& cfg = {});
double chakravarty_tilde(const Distribution& d, double alpha, const QuadratureConfig& cfg = {});

struct AtkinsonForms {
  double closed;  // 1 - (E[X^gamma])^{1/gamma} / mu with a family closed-form moment
  double engine;  // normalizer applied to 1 - E[X^gamma]/mu via quadrature
};
AtkinsonForms atkinson_forms(const Distribution& d, double gamma,
                             const QuadratureConfig& cfg = {});
double atkinson(const Distribution& d, double gamma, const QuadratureConfig& cfg = {});

/// Top-10% mean over bottom-40% mean.
double palma(const Distribution& d, const QuadratureConfig& cfg = {});

struct DwkForms {
  double survival_form;  // 1 - (1/mu) int (1-F)^alpha
  double quantile_form;  // 1 - (alpha/mu) int F^{-1}(t)(1-t)^{alpha-1} dt
  double gamble_form;    // E[1 - LCE(pi)/mu] under Beta(2, alpha-1)
};
DwkForms dwk_forms(const Distribution& d, double alpha, const QuadratureConfig& cfg = {});
double dwk(const Distribution& d, double alpha, const QuadratureConfig& cfg = {});

struct DwkhForms {
  double survival_form;
  double quantile_form;
  double gamble_form;
};
DwkhForms dwk_h_forms(const Distribution& d, const GeneratorFn& h,
                      const QuadratureConfig& cfg = {});
double dwk_h(const Distribution& d, const GeneratorFn& h, const QuadratureConfig& cfg = {});

struct WangForms {
  double direct;         // int g(1-F)
  double reconstructed;  // mu (E[UCE(pi_g)/mu - 1](1 - g'(1)) + 1), class (G) only
  bool has_reconstruction;
};
WangForms wang_forms(const Distribution& d, const GeneratorFn& g,
                     const QuadratureConfig& cfg = {});
double wang(const Distribution& d, const GeneratorFn& g, const QuadratureConfig& cfg = {});

struct PhtForms {
  double direct;
  double reconstructed;
};
PhtForms pht_forms(const Distribution& d, double alpha, const QuadratureConfig& cfg = {});
double pht(const Distribution& d, double alpha, const QuadratureConfig& cfg = {});

double zenga_index(const Distribution& d, const QuadratureConfig& cfg = {});

/// E[UCE(pi)/LCE(pi) - 1]; the gamble must be supplied explicitly.
double relative_risk(const Distribution& d, const Gamble& pi,
                     const QuadratureConfig& cfg = {});

/// E[X^gamma], closed form per family where available, quadrature otherwise.
double moment_power(const Distribution& d, double gamma, const QuadratureConfig& cfg = {});

/// int_0^inf g(1 - F(x)) dx.  Exact step sums for Empirical/PointMass,
/// half-line quadrature otherwise.
double survival_distortion_integral(const Distribution& d,
                                    const std::function<double(double)>& g,
                                    const QuadratureConfig& cfg = {});

// ---------------------------------------------------------------------------
// Table-1 registry: the twelve special cases of the general index.
// ---------------------------------------------------------------------------

struct Table1Params {
  double chakravarty_alpha = 2.0;
  double dwk_alpha = 3.0;
  double dwk_h_alpha = 2.5;   // h(t) = t^alpha
  double atkinson_gamma = 0.5;
  double wang_alpha = 0.5;    // g(t) = t^alpha
  double pht_alpha = 0.5;
  Gamble risk_gamble = Gamble::beta(2.0, 1.0);
};

struct Table1Row {
  std::string label;
  double engine = 0.0;
  double closed = 0.0;
  double abs_diff = 0.0;
  bool pass = false;
  std::string error;  // non-empty when the row raised instead of evaluating
};

/// Runs every row through both the general engine and its dedicated closed
/// form.  Rows that error are reported, not fatal.
std::vector<Table1Row> table1_crosscheck(const Distribution& d,
                                         const Table1Params& params = {},
                                         double tol = 1e-6,
                                         const QuadratureConfig& cfg = {});

/// The registry itself: label + engine spec + closed-form evaluator.
struct Table1Entry {
  std::string label;
  IndexSpec spec;
  std::function<double()> closed_form;
};
std::vector<Table1Entry> make_table1(const Distribution& d, const Table1Params& params,
                                     const QuadratureConfig& cfg = {});

}  // namespace ineqlab

#endif
