#include "asynum/error.hpp"

namespace asynum {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::HeterogeneousUnion: return "HeterogeneousUnion";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::WorkBudgetExceeded: return "WorkBudgetExceeded";
    case ErrorCode::InconsistentCommitment: return "InconsistentCommitment";
    case ErrorCode::FiniteSetCommitted: return "FiniteSetCommitted";
    case ErrorCode::NotAMember: return "NotAMember";
    case ErrorCode::PreconditionNotMember: return "PreconditionNotMember";
    case ErrorCode::HorizonTooSmall: return "HorizonTooSmall";
    case ErrorCode::NotEquinumerous: return "NotEquinumerous";
    case ErrorCode::NoWitnessWithinHorizon: return "NoWitnessWithinHorizon";
    case ErrorCode::NotNondecreasing: return "NotNondecreasing";
    case ErrorCode::NotIntervalToOne: return "NotIntervalToOne";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UnknownCommand: return "UnknownCommand";
  }
  return "Unknown";
}

}  // namespace asynum
