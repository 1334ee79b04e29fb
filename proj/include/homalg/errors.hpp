#ifndef HOMALG_ERRORS_HPP
#define HOMALG_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace homalg {

/// Base class of every error this library reports. Nothing here aborts;
/// all failure modes surface as exceptions carrying a message.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands of a contraction / composition do not conform.
struct DimensionMismatch : Error {
  using Error::Error;
};

/// Exact division by zero.
struct DivisionByZero : Error {
  using Error::Error;
};

/// A construction-time invariant failed (multiplicativity, structure-map
/// twist compatibility, ...). Carries the axiom name and the basis tuple
/// where it first failed.
struct InvariantViolation : Error {
  std::string axiom;
  std::vector<std::string> where;
  InvariantViolation(std::string axiom_, std::vector<std::string> where_,
                     const std::string& message)
      : Error(message), axiom(std::move(axiom_)), where(std::move(where_)) {}
};

/// A stated precondition of an operation does not hold for the given input.
struct PreconditionFailed : Error {
  std::string condition;
  PreconditionFailed(std::string condition_, const std::string& message)
      : Error(message), condition(std::move(condition_)) {}
};

/// A constructor re-validated its own output and the validation failed.
/// Distinct from PreconditionFailed: with valid inputs this cannot happen.
struct InternalCheckFailure : Error {
  using Error::Error;
};

/// Malformed textual input (identity DSL or a JSON document).
struct ParseError : Error {
  std::size_t position;  // byte offset when known, 0 otherwise
  explicit ParseError(const std::string& message, std::size_t position_ = 0)
      : Error(message), position(position_) {}
};

/// A well-formed expression with an ill-sorted node.
struct SortError : Error {
  using Error::Error;
};

/// An unknown builtin / corpus name.
struct LookupError : Error {
  using Error::Error;
};

}  // namespace homalg

#endif
