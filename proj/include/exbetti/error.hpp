#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace exbetti {

enum class ErrorKind {
  Parse,
  DegreeMismatch,
  InvalidMove,
  EmptyAmbient,
  EmptyIdeal,
  BadRange,
  MixedDegrees,
  BadDegree,
  RankOutOfRange,
  NotStable,
  InvalidSpec,
  InfeasibleSpec,
  Uncovered,
  VerificationFailed,
  CapTooLow,
  BudgetExceeded,
  Overflow,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind so the
/// CLI can map it onto exit codes and structured error output.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace exbetti
