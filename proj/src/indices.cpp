#include "ineqlab/indices.hpp"

#include <cmath>

#include "ineqlab/format.hpp"

namespace ineqlab {

namespace {

void check_forms(const std::string& what, double a, double b) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  if (!(std::abs(a - b) <= 1e-6 * scale))
    throw FormMismatch(what + ": routes disagree: " + fmt_g(a) + " vs " + fmt_g(b));
}

double require_positive_mean(const Distribution& d) {
  const double mu = d.mean();
  if (!(mu > 0.0)) throw DomainError("index requires a positive mean");
  return mu;
}

// Estimated eta with 1 - F(x) ~ x^{-eta}, used to reject divergent
// distortion integrals up front for the heavy-tailed families.
void check_distortion_integrable(const Distribution& d,
                                 const std::function<double(double)>& g,
                                 const std::string& what) {
  const auto eta = d.tail_exponent();
  if (!eta) return;
  const double g1 = g(1e-6), g2 = g(1e-9);
  if (!(g1 > 0.0) || !(g2 > 0.0)) return;  // distortion vanishes fast enough
  const double beta_hat = (std::log(g1) - std::log(g2)) / (std::log(1e-6) - std::log(1e-9));
  if (beta_hat * *eta <= 1.0 + 1e-9)
    throw InfiniteRiskMeasure(what + ": tail exponent " + fmt_g(*eta) +
                              " with distortion power " + fmt_g(beta_hat) +
                              " gives a divergent integral");
}

}  // namespace

IndexResult general_index(const IndexSpec& spec, const Distribution& d,
                          const QuadratureConfig& cfg) {
  SocietalFunction lower_side(d, spec.u, cfg);
  SocietalFunction upper_side(d, spec.u_star, cfg);

  // Spec'd expectation tolerances: outer 1e-8, inner 1e-9 for product pairs.
  const QuadratureConfig outer{1e-8, 1e-10, cfg.max_subdivisions};
  const QuadratureConfig inner{1e-9, 1e-11, cfg.max_subdivisions};

  // The upper marginal is always integrated in tail coordinates s = 1 - q;
  // gamble densities singular at 1 (class (G), Beta with beta-shape < 1) and
  // the cancellation in UCE(q) = (mu - PM(q))/(1-q) both live there.
  const Gamble& pi = spec.pair.first();
  const Gamble& pi_star = spec.pair.second();

  IntegrationResult expected{};
  switch (spec.pair.pairing()) {
    case GamblePair::Pairing::Identical: {
      expected = pi.expect_detailed(
          [&](double p) { return spec.v(lower_side.lce(p), upper_side.uce(p)); }, outer);
      break;
    }
    case GamblePair::Pairing::DegenerateSecond: {
      const double y0 = upper_side.uce(pi_star.atom());
      expected = pi.expect_detailed(
          [&](double p) { return spec.v(lower_side.lce(p), y0); }, outer);
      break;
    }
    case GamblePair::Pairing::DegenerateFirst: {
      const double x0 = lower_side.lce(pi.atom());
      expected = pi_star.expect_upper_detailed(
          [&](double s) { return spec.v(x0, upper_side.uce_tail(s)); }, outer);
      break;
    }
    case GamblePair::Pairing::Independent: {
      if (pi.is_atom()) {
        const double x0 = lower_side.lce(pi.atom());
        expected = pi_star.expect_upper_detailed(
            [&](double s) { return spec.v(x0, upper_side.uce_tail(s)); }, outer);
      } else if (pi_star.is_atom()) {
        const double y0 = upper_side.uce(pi_star.atom());
        expected = pi.expect_detailed(
            [&](double p) { return spec.v(lower_side.lce(p), y0); }, outer);
      } else {
        expected = pi.expect_detailed(
            [&](double p) {
              const double x = lower_side.lce(p);
              return pi_star.expect_upper(
                  [&](double s) { return spec.v(x, upper_side.uce_tail(s)); }, inner);
            },
            outer);
      }
      break;
    }
  }

  IndexResult out;
  out.label = spec.label;
  out.form_values["expected_relative_value"] = expected.value;
  out.value = spec.w(expected.value);
  out.abs_error_estimate = expected.abs_error_estimate;
  return out;
}

GiniForms gini_forms(const Distribution& d, const QuadratureConfig& cfg) {
  const double mu = require_positive_mean(d);
  SocietalFunction s(d, UtilityFn::identity(), cfg);

  const double absolute =
      2.0 * Gamble::beta(1.0, 1.0)
                .expect([&](double p) { return p - s.partial_mean(p) / mu; }, cfg);
  const double relative =
      Gamble::beta(2.0, 1.0)
          .expect([&](double p) { return 1.0 - s.partial_mean(p) / (mu * p); }, cfg);
  return GiniForms{absolute, relative};
}

double gini(const Distribution& d, const QuadratureConfig& cfg) {
  const GiniForms f = gini_forms(d, cfg);
  check_forms("gini", f.absolute, f.relative);
  return f.absolute;
}

double bonferroni_index(const Distribution& d, const QuadratureConfig& cfg) {
  const double mu = require_positive_mean(d);
  SocietalFunction s(d, UtilityFn::identity(), cfg);
  return Gamble::beta(1.0, 1.0)
      .expect([&](double p) { return 1.0 - s.partial_mean(p) / (mu * p); }, cfg);
}

ChakravartyForms chakravarty_forms(const Distribution& d, double alpha,
                                   const QuadratureConfig& cfg) {
  if (!(alpha >= 1.0)) throw DomainError("chakravarty: alpha must be >= 1");
  const double mu = require_positive_mean(d);
  SocietalFunction s(d, UtilityFn::identity(), cfg);

  const double gap_integral =
      integrate_unit([&](double t) {
        return std::pow(t - s.partial_mean(t) / mu, alpha);
      }, cfg).value;
  const double direct = 2.0 * std::pow(gap_integral, 1.0 / alpha);
  const double tilde = std::pow((alpha + 1.0) * gap_integral, 1.0 / alpha);

  const double expectation =
      Gamble::beta(alpha + 1.0, 1.0)
          .expect([&](double p) {
            return std::pow(1.0 - s.partial_mean(p) / (mu * p), alpha);
          }, cfg);
  const double engine = NormalizingFn::chakravarty(alpha)(expectation);

  return ChakravartyForms{direct, engine, tilde};
}

double chakravarty(const Distribution& d, double alpha, const QuadratureConfig& cfg) {
  const ChakravartyForms f = chakravarty_forms(d, alpha, cfg);
  check_forms("chakravarty", f.direct, f.engine);
  return f.direct;
}

double chakravarty_tilde(const Distribution& d, double alpha, const QuadratureConfig& cfg) {
  return chakravarty_forms(d, alpha, cfg).tilde;
}

AtkinsonForms atkinson_forms(const Distribution& d, double gamma,
                             const QuadratureConfig& cfg) {
  const double mu = require_positive_mean(d);
  const double closed_moment = moment_power(d, gamma, cfg);
  if (!std::isfinite(closed_moment))
    throw DomainError("atkinson: E[X^gamma] is not finite");
  const double closed = 1.0 - std::pow(closed_moment, 1.0 / gamma) / mu;

  // Independent route: the utility-transformed societal mean.
  SocietalFunction su(d, UtilityFn::power(gamma), cfg);
  const double engine =
      NormalizingFn::atkinson(gamma, mu)(1.0 - su.mean() / mu);

  return AtkinsonForms{closed, engine};
}

double atkinson(const Distribution& d, double gamma, const QuadratureConfig& cfg) {
  const AtkinsonForms f = atkinson_forms(d, gamma, cfg);
  check_forms("atkinson", f.closed, f.engine);
  return f.closed;
}

double palma(const Distribution& d, const QuadratureConfig& cfg) {
  require_positive_mean(d);
  SocietalFunction s(d, UtilityFn::identity(), cfg);
  const double bottom = s.lce(0.4);
  if (!(bottom > 0.0)) throw ZeroLowerMean("palma: bottom-40% mean is zero");
  return s.uce(0.9) / bottom;
}

DwkForms dwk_forms(const Distribution& d, double alpha, const QuadratureConfig& cfg) {
  if (!(alpha > 1.0)) throw DomainError("dwk: alpha must exceed 1");
  const double mu = require_positive_mean(d);
  SocietalFunction s(d, UtilityFn::identity(), cfg);

  const double survival_form =
      1.0 - survival_distortion_integral(d, [alpha](double u) { return std::pow(u, alpha); },
                                         cfg) /
                mu;

  double quantile_integral;
  if (const auto* values = d.empirical_values()) {
    const double n = static_cast<double>(values->size());
    quantile_integral = 0.0;
    for (std::size_t k = 1; k <= values->size(); ++k) {
      const double hi = 1.0 - (static_cast<double>(k) - 1.0) / n;
      const double lo = 1.0 - static_cast<double>(k) / n;
      quantile_integral += (*values)[k - 1] * (std::pow(hi, alpha) - std::pow(lo, alpha)) / alpha;
    }
  } else if (const auto a = d.atom()) {
    quantile_integral = *a / alpha;
  } else {
    quantile_integral =
        integrate_unit([&](double t) {
          return d.quantile(t) * std::pow(1.0 - t, alpha - 1.0);
        }, cfg).value;
  }
  const double quantile_form = 1.0 - alpha / mu * quantile_integral;

  const double gamble_form =
      Gamble::beta(2.0, alpha - 1.0)
          .expect([&](double p) { return 1.0 - s.partial_mean(p) / (mu * p); }, cfg);

  return DwkForms{survival_form, quantile_form, gamble_form};
}

double dwk(const Distribution& d, double alpha, const QuadratureConfig& cfg) {
  const DwkForms f = dwk_forms(d, alpha, cfg);
  check_forms("dwk (survival vs quantile)", f.survival_form, f.quantile_form);
  check_forms("dwk (survival vs gamble)", f.survival_form, f.gamble_form);
  return f.survival_form;
}

DwkhForms dwk_h_forms(const Distribution& d, const GeneratorFn& h,
                      const QuadratureConfig& cfg) {
  const double mu = require_positive_mean(d);
  const Gamble pi_h = Gamble::h_generated(h);  // throws InvalidGenerator on class failure
  SocietalFunction s(d, UtilityFn::identity(), cfg);
  const double denom = 1.0 - h.slope_at_zero();

  const double survival_form =
      (1.0 - survival_distortion_integral(d, h.value, cfg) / mu) / denom;

  double quantile_integral;
  if (const auto* values = d.empirical_values()) {
    const double n = static_cast<double>(values->size());
    quantile_integral = 0.0;
    for (std::size_t k = 1; k <= values->size(); ++k) {
      const double hi = 1.0 - (static_cast<double>(k) - 1.0) / n;
      const double lo = 1.0 - static_cast<double>(k) / n;
      quantile_integral += (*values)[k - 1] * (h.value(hi) - h.value(lo));
    }
  } else if (const auto a = d.atom()) {
    quantile_integral = *a;
  } else {
    quantile_integral =
        integrate_unit([&](double t) { return d.quantile(t) * h.d1(1.0 - t); }, cfg).value;
  }
  const double quantile_form = (1.0 - quantile_integral / mu) / denom;

  const double gamble_form =
      pi_h.expect([&](double p) { return 1.0 - s.partial_mean(p) / (mu * p); }, cfg);

  return DwkhForms{survival_form, quantile_form, gamble_form};
}

double dwk_h(const Distribution& d, const GeneratorFn& h, const QuadratureConfig& cfg) {
  const DwkhForms f = dwk_h_forms(d, h, cfg);
  check_forms("dwk_h (survival vs quantile)", f.survival_form, f.quantile_form);
  check_forms("dwk_h (survival vs gamble)", f.survival_form, f.gamble_form);
  return f.survival_form;
}

WangForms wang_forms(const Distribution& d, const GeneratorFn& g,
                     const QuadratureConfig& cfg) {
  const double mu = require_positive_mean(d);
  check_distortion_integrable(d, g.value, "wang");

  WangForms out{};
  out.direct = survival_distortion_integral(d, g.value, cfg);

  const auto report = validate_generator(g, GeneratorClass::G);
  out.has_reconstruction = report.valid;
  if (report.valid) {
    SocietalFunction s(d, UtilityFn::identity(), cfg);
    const Gamble pi_g = Gamble::g_generated(g);
    const double expectation =
        pi_g.expect_upper([&](double tail) { return s.uce_tail(tail) / mu - 1.0; }, cfg);
    out.reconstructed = mu * (expectation * (1.0 - g.slope_at_one()) + 1.0);
  } else {
    out.reconstructed = out.direct;
  }
  return out;
}

double wang(const Distribution& d, const GeneratorFn& g, const QuadratureConfig& cfg) {
  const WangForms f = wang_forms(d, g, cfg);
  if (f.has_reconstruction) check_forms("wang", f.direct, f.reconstructed);
  return f.direct;
}

PhtForms pht_forms(const Distribution& d, double alpha, const QuadratureConfig& cfg) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) throw DomainError("pht: alpha must lie in (0, 1)");
  if (const auto eta = d.tail_exponent(); eta && alpha * *eta <= 1.0)
    throw InfiniteRiskMeasure("pht: alpha * tail exponent = " + fmt_g(alpha * *eta) +
                              " <= 1, integral diverges");
  const WangForms f = wang_forms(d, make_power_g(alpha), cfg);
  return PhtForms{f.direct, f.reconstructed};
}

double pht(const Distribution& d, double alpha, const QuadratureConfig& cfg) {
  const PhtForms f = pht_forms(d, alpha, cfg);
  check_forms("pht", f.direct, f.reconstructed);
  return f.direct;
}

double zenga_index(const Distribution& d, const QuadratureConfig& cfg) {
  const double mu = require_positive_mean(d);
  SocietalFunction s(d, UtilityFn::identity(), cfg);
  return Gamble::beta(1.0, 1.0)
      .expect(
          [&](double p) {
            const double pm = s.partial_mean(p);
            const double lower = pm / p;
            const double upper = (mu - pm) / (1.0 - p);
            return 1.0 - lower / upper;
          },
          cfg);
}

double relative_risk(const Distribution& d, const Gamble& pi, const QuadratureConfig& cfg) {
  require_positive_mean(d);
  SocietalFunction s(d, UtilityFn::identity(), cfg);
  return pi.expect([&](double p) { return s.risk_function(p); }, cfg);
}

double moment_power(const Distribution& d, double gamma, const QuadratureConfig& cfg) {
  if (!(gamma > 0.0) || !(gamma < 1.0))
    throw DomainError("moment_power: gamma must lie in (0, 1)");
  if (const auto closed = d.closed_power_moment(gamma)) return *closed;
  return integrate_unit([&](double t) { return std::pow(d.quantile(t), gamma); }, cfg).value;
}

double survival_distortion_integral(const Distribution& d,
                                    const std::function<double(double)>& g,
                                    const QuadratureConfig& cfg) {
  // Exact step sums for purely atomic laws.
  std::vector<double> atoms;
  if (const auto a = d.atom()) {
    atoms.push_back(*a);
  } else if (const auto* values = d.empirical_values()) {
    atoms = *values;
  }
  if (!atoms.empty()) {
    const double n = static_cast<double>(atoms.size());
    double total = g(1.0) * atoms.front();
    for (std::size_t k = 1; k < atoms.size(); ++k)
      total += g((n - static_cast<double>(k)) / n) * (atoms[k] - atoms[k - 1]);
    return total;
  }
  return integrate_halfline([&](double x) { return g(d.survival(x)); }, cfg).value;
}

// ---------------------------------------------------------------------------
// Table-1 registry
// ---------------------------------------------------------------------------

std::vector<Table1Entry> make_table1(const Distribution& d, const Table1Params& params,
                                     const QuadratureConfig& cfg) {
  const double mu = require_positive_mean(d);
  std::vector<Table1Entry> rows;

  const auto id = NormalizingFn::identity();
  const auto one_minus = RelativeValueFn::one_minus_ratio();

  rows.push_back(
      {"atkinson",
       IndexSpec{"atkinson", GamblePair::degenerate_second(Gamble::point(1.0), 0.0),
                 NormalizingFn::atkinson(params.atkinson_gamma, mu), one_minus,
                 UtilityFn::power(params.atkinson_gamma), UtilityFn::identity()},
       [d, &params, cfg] { return atkinson(d, params.atkinson_gamma, cfg); }});

  rows.push_back({"bonferroni",
                  IndexSpec{"bonferroni",
                            GamblePair::degenerate_second(Gamble::beta(1.0, 1.0), 0.0), id,
                            one_minus},
                  [d, cfg] { return bonferroni_index(d, cfg); }});

  rows.push_back(
      {"chakravarty",
       IndexSpec{"chakravarty",
                 GamblePair::degenerate_second(
                     Gamble::beta(params.chakravarty_alpha + 1.0, 1.0), 0.0),
                 NormalizingFn::chakravarty(params.chakravarty_alpha),
                 RelativeValueFn::pow_one_minus_ratio(params.chakravarty_alpha)},
       [d, &params, cfg] { return chakravarty(d, params.chakravarty_alpha, cfg); }});

  rows.push_back(
      {"chakravarty_tilde",
       IndexSpec{"chakravarty_tilde",
                 GamblePair::degenerate_second(
                     Gamble::beta(params.chakravarty_alpha + 1.0, 1.0), 0.0),
                 NormalizingFn::root(params.chakravarty_alpha),
                 RelativeValueFn::pow_one_minus_ratio(params.chakravarty_alpha)},
       [d, &params, cfg] { return chakravarty_tilde(d, params.chakravarty_alpha, cfg); }});

  rows.push_back(
      {"dwk",
       IndexSpec{"dwk",
                 GamblePair::degenerate_second(
                     Gamble::beta(2.0, params.dwk_alpha - 1.0), 0.0),
                 id, one_minus},
       [d, &params, cfg] { return dwk(d, params.dwk_alpha, cfg); }});

  {
    GeneratorFn h = make_power_h(params.dwk_h_alpha);
    rows.push_back(
        {"dwk_h",
         IndexSpec{"dwk_h",
                   GamblePair::degenerate_second(Gamble::h_generated(h), 0.0), id, one_minus},
         [d, h, cfg] { return dwk_h(d, h, cfg); }});
  }

  rows.push_back({"gini",
                  IndexSpec{"gini", GamblePair::degenerate_second(Gamble::beta(2.0, 1.0), 0.0),
                            id, one_minus},
                  [d, cfg] { return gini(d, cfg); }});

  rows.push_back({"palma",
                  IndexSpec{"palma", GamblePair::degenerate_second(Gamble::point(0.4), 0.9), id,
                            RelativeValueFn::ratio_yx()},
                  [d, cfg] { return palma(d, cfg); }});

  rows.push_back({"relative_risk",
                  IndexSpec{"relative_risk", GamblePair::identical(params.risk_gamble), id,
                            RelativeValueFn::ratio_yx_minus_one()},
                  [d, &params, cfg] { return relative_risk(d, params.risk_gamble, cfg); }});

  {
    GeneratorFn g = make_power_g(params.wang_alpha);
    rows.push_back(
        {"wang",
         IndexSpec{"wang", GamblePair::degenerate_first(1.0, Gamble::g_generated(g)),
                   NormalizingFn::wang(mu, 1.0 - g.slope_at_one()),
                   RelativeValueFn::ratio_yx_minus_one()},
         [d, g, cfg] { return wang(d, g, cfg); }});
  }

  rows.push_back(
      {"pht",
       IndexSpec{"pht",
                 GamblePair::degenerate_first(1.0, Gamble::beta(1.0, params.pht_alpha)),
                 NormalizingFn::wang(mu, 1.0 - params.pht_alpha),
                 RelativeValueFn::ratio_yx_minus_one()},
       [d, &params, cfg] { return pht(d, params.pht_alpha, cfg); }});

  rows.push_back({"zenga",
                  IndexSpec{"zenga", GamblePair::identical(Gamble::beta(1.0, 1.0)), id,
                            one_minus},
                  [d, cfg] { return zenga_index(d, cfg); }});

  return rows;
}

std::vector<Table1Row> table1_crosscheck(const Distribution& d, const Table1Params& params,
                                         double tol, const QuadratureConfig& cfg) {
  std::vector<Table1Row> report;
  for (const auto& entry : make_table1(d, params, cfg)) {
    Table1Row row;
    row.label = entry.label;
    try {
      row.engine = general_index(entry.spec, d, cfg).value;
      row.closed = entry.closed_form();
      row.abs_diff = std::abs(row.engine - row.closed);
      row.pass = row.abs_diff <= tol;
    } catch (const Error& e) {
      row.error = e.what();
      row.pass = false;
    }
    report.push_back(std::move(row));
  }
  return report;
}

}  // namespace ineqlab
