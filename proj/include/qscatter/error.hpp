#pragma once

#include <stdexcept>
#include <string>

namespace qscatter {

enum class ErrorCode {
  InvalidArgument,
  NonEvaluableProfile,
  WindowCapExceeded,
  NonPositiveEnergy,
  NonFiniteState,
  DegenerateWindow,
  SingularMatching,
  UnitarityViolation,
  NonFiniteMatrix,
  GridTooCoarse,
  SweepFailure,
  Parse,
  UnknownFigure,
};

const char *to_string(ErrorCode code);

//! Every failure raised by the library carries one of the codes above so
//! callers (and tests) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace qscatter
