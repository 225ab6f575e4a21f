#include "pirlab/errors.hpp"

namespace pirlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonUnit: return "NonUnit";
    case ErrorCode::NoSuchElement: return "NoSuchElement";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ParamError: return "ParamError";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::MalformedQuery: return "MalformedQuery";
    case ErrorCode::InconsistentAnswer: return "InconsistentAnswer";
    case ErrorCode::Exhausted: return "Exhausted";
    case ErrorCode::SingularM: return "SingularM";
    case ErrorCode::NiceSetError: return "NiceSetError";
    case ErrorCode::NoNiceS0: return "NoNiceS0";
    case ErrorCode::DecodingPolyInvalid: return "DecodingPolyInvalid";
    case ErrorCode::NoMuNu: return "NoMuNu";
    case ErrorCode::InterpolationSetInvalid: return "InterpolationSetInvalid";
    case ErrorCode::Timeout: return "Timeout";
    case ErrorCode::ParamDigestMismatch: return "ParamDigestMismatch";
    case ErrorCode::Transport: return "Transport";
  }
  return "Unknown";
}

}  // namespace pirlab
