#include "wsc/error.hpp"

namespace wsc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::LoopyGraph: return "LoopyGraph";
    case ErrorCode::BadSize: return "BadSize";
    case ErrorCode::BadGraph: return "BadGraph";
    case ErrorCode::NonIntegerResult: return "NonIntegerResult";
    case ErrorCode::NotExpressible: return "NotExpressible";
    case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::BadDecomposition: return "BadDecomposition";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::IdentityFailed: return "IdentityFailed";
    case ErrorCode::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace wsc
