#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ztop {

enum class ErrorCode {
  Parse,
  BadData,
  EvalAtPole,
  NotAPole,
  HigherOrderPole,
  UnknownId,
  EmptyFiber,
  BadGraph,
  BadParams,
  OutOfRange,
  BadDim,
  InternalVerificationFailure,
};

std::string_view error_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above; the CLI
// maps them onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::BadData: return "BadData";
    case ErrorCode::EvalAtPole: return "EvalAtPole";
    case ErrorCode::NotAPole: return "NotAPole";
    case ErrorCode::HigherOrderPole: return "HigherOrderPole";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::EmptyFiber: return "EmptyFiber";
    case ErrorCode::BadGraph: return "BadGraph";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::BadDim: return "BadDim";
    case ErrorCode::InternalVerificationFailure: return "InternalVerificationFailure";
  }
  return "Unknown";
}

}  // namespace ztop
