#include "ineqlab/spec_parse.hpp"

#include <charconv>
#include <vector>

namespace ineqlab {

namespace {

struct SpecParts {
  std::string head;
  std::vector<double> args;
  std::string raw_tail;
};

double parse_number(const std::string& token, const std::string& spec) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError("'" + spec + "': not a number: '" + token + "'");
  return v;
}

SpecParts split_spec(const std::string& spec) {
  SpecParts parts;
  const auto colon = spec.find(':');
  parts.head = spec.substr(0, colon);
  if (colon == std::string::npos) return parts;
  parts.raw_tail = spec.substr(colon + 1);
  std::size_t pos = 0;
  while (pos <= parts.raw_tail.size()) {
    const auto comma = parts.raw_tail.find(',', pos);
    const std::string token =
        parts.raw_tail.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    parts.args.push_back(parse_number(token, spec));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return parts;
}

void need_args(const SpecParts& parts, std::size_t n, const std::string& spec) {
  if (parts.args.size() != n)
    throw ParseError("'" + spec + "': expected " + std::to_string(n) + " parameter(s)");
}

double keyed_number(const std::string& tail, const std::string& key, const std::string& spec) {
  const std::string prefix = key + "=";
  if (tail.compare(0, prefix.size(), prefix) != 0)
    throw ParseError("'" + spec + "': expected '" + key + "=<value>'");
  return parse_number(tail.substr(prefix.size()), spec);
}

}  // namespace

Distribution parse_distribution(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  if (head == "csv") {
    if (colon == std::string::npos || colon + 1 == spec.size())
      throw ParseError("'" + spec + "': csv needs a path");
    return empirical_from_csv(spec.substr(colon + 1));
  }

  const SpecParts parts = split_spec(spec);
  if (parts.head == "unif") {
    need_args(parts, 2, spec);
    return Distribution::uniform(parts.args[0], parts.args[1]);
  }
  if (parts.head == "exp") {
    need_args(parts, 1, spec);
    return Distribution::exponential(parts.args[0]);
  }
  if (parts.head == "pareto") {
    need_args(parts, 2, spec);
    return Distribution::pareto(parts.args[0], parts.args[1]);
  }
  if (parts.head == "lognorm") {
    need_args(parts, 2, spec);
    return Distribution::lognormal(parts.args[0], parts.args[1]);
  }
  if (parts.head == "point") {
    need_args(parts, 1, spec);
    return Distribution::point_mass(parts.args[0]);
  }
  if (parts.head == "zenga") {
    need_args(parts, 3, spec);
    return Distribution::zenga(parts.args[0], parts.args[1], parts.args[2]);
  }
  throw ParseError("unknown distribution spec '" + spec +
                   "' (expected unif | exp | pareto | lognorm | point | zenga | csv)");
}

Gamble parse_gamble(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  if (head == "hgen" || head == "ggen") {
    if (colon == std::string::npos)
      throw ParseError("'" + spec + "': generator gambles need parameters");
    const std::string tail = spec.substr(colon + 1);
    if (head == "hgen")
      return Gamble::h_generated(make_power_h(keyed_number(tail, "poly_alpha", spec)));
    return Gamble::g_generated(make_power_g(keyed_number(tail, "pht_alpha", spec)));
  }

  const SpecParts parts = split_spec(spec);
  if (parts.head == "beta") {
    need_args(parts, 2, spec);
    return Gamble::beta(parts.args[0], parts.args[1]);
  }
  if (parts.head == "point") {
    need_args(parts, 1, spec);
    return Gamble::point(parts.args[0]);
  }
  throw ParseError("unknown gamble spec '" + spec +
                   "' (expected beta:a,b | point:p | hgen:poly_alpha=a | ggen:pht_alpha=a)");
}

RelativeValueFn parse_value_fn(const std::string& spec) {
  const SpecParts parts = split_spec(spec);
  if (parts.head == "one_minus_ratio") return RelativeValueFn::one_minus_ratio();
  if (parts.head == "pow_one_minus_ratio") {
    need_args(parts, 1, spec);
    return RelativeValueFn::pow_one_minus_ratio(parts.args[0]);
  }
  if (parts.head == "y_over_x") return RelativeValueFn::ratio_yx();
  if (parts.head == "y_over_x_minus_1") return RelativeValueFn::ratio_yx_minus_one();
  if (parts.head == "x_over_y_minus_1") return RelativeValueFn::ratio_xy_minus_one();
  throw ParseError("unknown relative-value spec '" + spec + "'");
}

NormalizingFn parse_normalizing_fn(const std::string& spec, double reference_mean) {
  const SpecParts parts = split_spec(spec);
  if (parts.head == "identity") return NormalizingFn::identity();
  if (parts.head == "atkinson") {
    need_args(parts, 1, spec);
    return NormalizingFn::atkinson(parts.args[0]);
  }
  if (parts.head == "chakravarty") {
    need_args(parts, 1, spec);
    return NormalizingFn::chakravarty(parts.args[0]);
  }
  if (parts.head == "root") {
    need_args(parts, 1, spec);
    return NormalizingFn::root(parts.args[0]);
  }
  if (parts.head == "wang") {
    need_args(parts, 1, spec);
    return NormalizingFn::wang(reference_mean, parts.args[0]);
  }
  throw ParseError("unknown normalizing spec '" + spec + "'");
}

UtilityFn parse_utility_fn(const std::string& spec) {
  const SpecParts parts = split_spec(spec);
  if (parts.head == "identity") return UtilityFn::identity();
  if (parts.head == "power") {
    need_args(parts, 1, spec);
    return UtilityFn::power(parts.args[0]);
  }
  throw ParseError("unknown utility spec '" + spec + "'");
}

}  // namespace ineqlab
