#include "rbd/error.hpp"

namespace rbd {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::InvalidFraction: return "InvalidFraction";
    case ErrorCode::InvalidPQ: return "InvalidPQ";
    case ErrorCode::NonIsolatedFixedLocus: return "NonIsolatedFixedLocus";
    case ErrorCode::SmoothInput: return "SmoothInput";
    case ErrorCode::NotTType: return "NotTType";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::BadWeight: return "BadWeight";
    case ErrorCode::NotLinearChain: return "NotLinearChain";
    case ErrorCode::NotAllRational: return "NotAllRational";
    case ErrorCode::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorCode::MixedSurfaces: return "MixedSurfaces";
    case ErrorCode::NonIntegralGenus: return "NonIntegralGenus";
    case ErrorCode::IneffectiveBranch: return "IneffectiveBranch";
    case ErrorCode::MeetsBranch: return "MeetsBranch";
    case ErrorCode::InsufficientNegativePart: return "InsufficientNegativePart";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::IrreducibleFactor: return "IrreducibleFactor";
    case ErrorCode::NonIntegerResult: return "NonIntegerResult";
    case ErrorCode::NonIntegralLefschetz: return "NonIntegralLefschetz";
    case ErrorCode::NotClassT: return "NotClassT";
    case ErrorCode::ConsistencyFailure: return "ConsistencyFailure";
  }
  return "Unknown";
}

}  // namespace rbd
