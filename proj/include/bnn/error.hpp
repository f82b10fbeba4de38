#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bnn {

enum class ErrorKind {
  ComponentOutOfRange,
  NonFiniteComponent,
  NonPositiveLambda,
  DuplicateLabel,
  MissingAssignment,
  UnknownLabel,
  UniverseMismatch,
  EmptyWeights,
  WeightOutOfRange,
  WeightsDontSumToOne,
  ZeroWeightSum,
  LengthMismatch,
  EmptyFamily,
  DimensionMismatch,
  MalformedDocument,
  WrongTupleArity,
  Io,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library. `what()` is a human readable message that
// already includes any location (cell coordinates, file line) the raiser knew about.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Re-raise `e` with `context` prepended to the message, keeping its kind.
[[noreturn]] void rethrow_with_context(const Error& e, std::string_view context);

}  // namespace bnn
