#ifndef CURVEGROWTH_ERRORS_HPP
#define CURVEGROWTH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace curvegrowth {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DivisionByZero final : public Error {
 public:
  using Error::Error;
};

class VariableMismatch final : public Error {
 public:
  using Error::Error;
};

class ArityMismatch final : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial final : public Error {
 public:
  using Error::Error;
};

class NameCollision final : public Error {
 public:
  using Error::Error;
};

class BothConstant final : public Error {
 public:
  using Error::Error;
};

/// The drawn projection does not expose the generic structure of the curve;
/// callers retry with a fresh draw from the seed stream.
class NonGenericProjection final : public Error {
 public:
  using Error::Error;
};

class NotSquarefree final : public Error {
 public:
  using Error::Error;
};

/// All seeded probes hit degenerate configurations.
class InconclusiveAfterRetries final : public Error {
 public:
  using Error::Error;
};

class DenominatorVanishesOnCurve final : public Error {
 public:
  using Error::Error;
};

/// The rational function does not restrict to a polynomial pullback on the
/// curve: its graph over the curve is not an algebraic function graph.
class NotCHolomorphic final : public Error {
 public:
  using Error::Error;
};

class ConstantFunction final : public Error {
 public:
  using Error::Error;
};

class ConstantPolynomial final : public Error {
 public:
  using Error::Error;
};

class NoRepresentativeFound final : public Error {
 public:
  using Error::Error;
};

class AllConstant final : public Error {
 public:
  using Error::Error;
};

class OverflowAtSample final : public Error {
 public:
  using Error::Error;
};

/// The curve is not generically injective, so it is not a normalization of
/// its image; theorem-level operations refuse to run on it.
class CurveNotNormalized final : public Error {
 public:
  using Error::Error;
};

/// Function synthesis needs the parametrization to be injective everywhere,
/// not just generically; glued parameters make pullbacks ambiguous.
class CurveNotInjective final : public Error {
 public:
  using Error::Error;
};

/// Every component of a would-be parametrization is constant.
class DegenerateCurve final : public Error {
 public:
  using Error::Error;
};

/// A cross-checked identity failed; the message names the failing stage.
class InvariantViolation final : public Error {
 public:
  using Error::Error;
};

/// Expression or file syntax error with the byte offset of the offender.
class SyntaxError final : public Error {
 public:
  SyntaxError(const std::string& msg, std::size_t offset)
      : Error(msg + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownVariable final : public Error {
 public:
  UnknownVariable(const std::string& name, std::size_t offset)
      : Error("unknown variable '" + name + "' at offset " + std::to_string(offset)),
        name_(name),
        offset_(offset) {}
  const std::string& name() const noexcept { return name_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::string name_;
  std::size_t offset_;
};

}  // namespace curvegrowth

#endif  // CURVEGROWTH_ERRORS_HPP
