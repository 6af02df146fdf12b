#include "qscatter/error.hpp"

namespace qscatter {

const char *to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::InvalidArgument: return "invalid argument";
  case ErrorCode::NonEvaluableProfile: return "non-evaluable singular profile";
  case ErrorCode::WindowCapExceeded: return "window cap exceeded";
  case ErrorCode::NonPositiveEnergy: return "nonpositive energy";
  case ErrorCode::NonFiniteState: return "non-finite state";
  case ErrorCode::DegenerateWindow: return "degenerate window";
  case ErrorCode::SingularMatching: return "singular matching system";
  case ErrorCode::UnitarityViolation: return "unitarity violation";
  case ErrorCode::NonFiniteMatrix: return "non-finite matrix product";
  case ErrorCode::GridTooCoarse: return "grid too coarse";
  case ErrorCode::SweepFailure: return "sweep failure";
  case ErrorCode::Parse: return "parse error";
  case ErrorCode::UnknownFigure: return "unknown figure";
  }
  return "unknown error";
}

} // namespace qscatter
