#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spinvol {

enum class ErrorCode {
  NotSquare,
  NotSymmetric,
  DimensionMismatch,
  InvalidParameter,
  NotEven,
  NotUnimodular,
  NotIndefinite,
  SignatureNotMultipleOf8,
  NotInvolution,
  NotIsometry,
  OddN,
  FurutaViolation,
  BadR,
  OddFraming,
  SigmaNotSpin,
  DeductionFailed,
  MalformedInput,
  Internal,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::NotSquare: return "NotSquare";
  case ErrorCode::NotSymmetric: return "NotSymmetric";
  case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  case ErrorCode::InvalidParameter: return "InvalidParameter";
  case ErrorCode::NotEven: return "NotEven";
  case ErrorCode::NotUnimodular: return "NotUnimodular";
  case ErrorCode::NotIndefinite: return "NotIndefinite";
  case ErrorCode::SignatureNotMultipleOf8: return "SignatureNotMultipleOf8";
  case ErrorCode::NotInvolution: return "NotInvolution";
  case ErrorCode::NotIsometry: return "NotIsometry";
  case ErrorCode::OddN: return "OddN";
  case ErrorCode::FurutaViolation: return "FurutaViolation";
  case ErrorCode::BadR: return "BadR";
  case ErrorCode::OddFraming: return "OddFraming";
  case ErrorCode::SigmaNotSpin: return "SigmaNotSpin";
  case ErrorCode::DeductionFailed: return "DeductionFailed";
  case ErrorCode::MalformedInput: return "MalformedInput";
  case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it onto a stable exit status.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace spinvol
