#include "sl2real/errors.hpp"

namespace sl2real {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NotARealStructure: return "NotARealStructure";
    case ErrorCode::NotSL2: return "NotSL2";
    case ErrorCode::NotElliptic: return "NotElliptic";
    case ErrorCode::NotParabolic: return "NotParabolic";
    case ErrorCode::NotHyperbolic: return "NotHyperbolic";
    case ErrorCode::NotFactorable: return "NotFactorable";
    case ErrorCode::ReductionOverflow: return "ReductionOverflow";
    case ErrorCode::NotReal: return "NotReal";
    case ErrorCode::CentralInput: return "CentralInput";
    case ErrorCode::DepthTooLarge: return "DepthTooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace sl2real
