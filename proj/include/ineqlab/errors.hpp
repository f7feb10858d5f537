#ifndef INEQLAB_ERRORS_HPP
#define INEQLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ineqlab {

/// Base class for every error the library throws.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An argument is outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Adaptive integration or root bracketing exhausted its budget above tolerance.
class NonConvergence : public Error {
 public:
  explicit NonConvergence(const std::string& msg) : Error(msg) {}
};

/// An integrand returned NaN or infinity at an interior node.
class NonFiniteError : public Error {
 public:
  explicit NonFiniteError(const std::string& msg) : Error(msg) {}
};

/// A distribution has no finite mean (e.g. Pareto shape <= 1).
class InfiniteMeanError : public Error {
 public:
  explicit InfiniteMeanError(const std::string& msg) : Error(msg) {}
};

/// A relative-value function was evaluated with a vanishing denominator.
class DivisionByZero : public Error {
 public:
  explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

/// The lower conditional expectation vanished where a ratio needs it positive.
class ZeroLowerMean : public Error {
 public:
  explicit ZeroLowerMean(const std::string& msg) : Error(msg) {}
};

/// A density was requested from a gamble that is a point mass.
class AtomicGamble : public Error {
 public:
  explicit AtomicGamble(const std::string& msg) : Error(msg) {}
};

/// A generator function fails its class (H) or (G) conditions.
class InvalidGenerator : public Error {
 public:
  explicit InvalidGenerator(const std::string& msg) : Error(msg) {}
};

/// Two algebraically equivalent routes to the same index disagree.
class FormMismatch : public Error {
 public:
  explicit FormMismatch(const std::string& msg) : Error(msg) {}
};

/// A density was requested from a distribution that has none.
class NoDensity : public Error {
 public:
  explicit NoDensity(const std::string& msg) : Error(msg) {}
};

/// A distortion risk measure diverges for the given tail/parameter pair.
class InfiniteRiskMeasure : public Error {
 public:
  explicit InfiniteRiskMeasure(const std::string& msg) : Error(msg) {}
};

/// Malformed input: spec grammar strings, CSV rows, CLI configuration.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace ineqlab

#endif
