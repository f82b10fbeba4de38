#include "bnn/error.hpp"

namespace bnn {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ComponentOutOfRange: return "ComponentOutOfRange";
    case ErrorKind::NonFiniteComponent: return "NonFiniteComponent";
    case ErrorKind::NonPositiveLambda: return "NonPositiveLambda";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::MissingAssignment: return "MissingAssignment";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::UniverseMismatch: return "UniverseMismatch";
    case ErrorKind::EmptyWeights: return "EmptyWeights";
    case ErrorKind::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorKind::WeightsDontSumToOne: return "WeightsDontSumToOne";
    case ErrorKind::ZeroWeightSum: return "ZeroWeightSum";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::MalformedDocument: return "MalformedDocument";
    case ErrorKind::WrongTupleArity: return "WrongTupleArity";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

void rethrow_with_context(const Error& e, std::string_view context) {
  throw Error(e.kind(), std::string(context) + ": " + e.what());
}

}  // namespace bnn
