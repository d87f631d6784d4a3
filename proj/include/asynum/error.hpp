#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace asynum {

enum class ErrorCode {
  HeterogeneousUnion,
  DimensionMismatch,
  WorkBudgetExceeded,
  InconsistentCommitment,
  FiniteSetCommitted,
  NotAMember,
  PreconditionNotMember,
  HorizonTooSmall,
  NotEquinumerous,
  NoWitnessWithinHorizon,
  NotNondecreasing,
  NotIntervalToOne,
  OutOfDomain,
  EmptySet,
  BoundExceeded,
  ParseError,
  InvalidArgument,
  UnknownCommand,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above; the
/// CLI maps them onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with byte offset into the input text.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error(ErrorCode::ParseError, "at offset " + std::to_string(offset) + ": " + message),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace asynum
