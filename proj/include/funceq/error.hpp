#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace funceq {

enum class ErrorCode {
  NoFixedPoint,
  NotRepelling,
  DegenerateSpec,
  BadArity,
  SignConventionMismatch,
  NoConvergence,
  NewtonDiverged,
  DepthExceeded,
  AtSingularity,
  BadShift,
  PoleOfGamma,
  ZeroCoefficient,
  UnsupportedSpec,
  WrongSpec,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoFixedPoint: return "NoFixedPoint";
    case ErrorCode::NotRepelling: return "NotRepelling";
    case ErrorCode::DegenerateSpec: return "DegenerateSpec";
    case ErrorCode::BadArity: return "BadArity";
    case ErrorCode::SignConventionMismatch: return "SignConventionMismatch";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NewtonDiverged: return "NewtonDiverged";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::AtSingularity: return "AtSingularity";
    case ErrorCode::BadShift: return "BadShift";
    case ErrorCode::PoleOfGamma: return "PoleOfGamma";
    case ErrorCode::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorCode::UnsupportedSpec: return "UnsupportedSpec";
    case ErrorCode::WrongSpec: return "WrongSpec";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace funceq
