#include "common/error.hpp"

namespace covdim {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotMultihomogeneous: return "NotMultihomogeneous";
    case ErrorCode::ZeroComponent: return "ZeroComponent";
    case ErrorCode::BetaNotSeparating: return "BetaNotSeparating";
    case ErrorCode::BlockMismatch: return "BlockMismatch";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::MuNotInColumnSpace: return "MuNotInColumnSpace";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::ChartDegenerate: return "ChartDegenerate";
    case ErrorCode::NoFreePoint: return "NoFreePoint";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotFaithfulFactor: return "NotFaithfulFactor";
    case ErrorCode::InconsistentDerivation: return "InconsistentDerivation";
    case ErrorCode::OracleDisagreement: return "OracleDisagreement";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SemanticError: return "SemanticError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::FormatError: return "FormatError";
  }
  return "Unknown";
}

}  // namespace covdim
