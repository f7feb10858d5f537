#ifndef INEQLAB_SPEC_PARSE_HPP
#define INEQLAB_SPEC_PARSE_HPP

#include <string>

#include "ineqlab/distribution.hpp"
#include "ineqlab/gamble.hpp"
#include "ineqlab/value_functions.hpp"

namespace ineqlab {

/// `unif:a,b | exp:rate | pareto:xm,a | lognorm:m,s | point:c |
///  zenga:mu,alpha,theta | csv:PATH`
Distribution parse_distribution(const std::string& spec);

/// `beta:a,b | point:p | hgen:poly_alpha=a | ggen:pht_alpha=a`
Gamble parse_gamble(const std::string& spec);

/// `one_minus_ratio | pow_one_minus_ratio:a | y_over_x | y_over_x_minus_1 |
///  x_over_y_minus_1`
RelativeValueFn parse_value_fn(const std::string& spec);

/// `identity | atkinson:g | chakravarty:a | root:a | wang:c`; the Wang kind
/// multiplies by the reference mean, supplied by the caller.
NormalizingFn parse_normalizing_fn(const std::string& spec, double reference_mean);

/// `identity | power:g`
UtilityFn parse_utility_fn(const std::string& spec);

}  // namespace ineqlab

#endif
