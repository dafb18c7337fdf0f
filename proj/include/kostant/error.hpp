#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kostant {

enum class ErrorCode {
  EmptyInput,
  NotABijection,
  NotAnInvolution,
  DegreeTooLarge,
  DegreeTooSmall,
  BlockOutOfRange,
  InvalidCaseId,
  ShapeMismatch,
  NotStandard,
  ZeroTrials,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NotABijection: return "NotABijection";
    case ErrorCode::NotAnInvolution: return "NotAnInvolution";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::BlockOutOfRange: return "BlockOutOfRange";
    case ErrorCode::InvalidCaseId: return "InvalidCaseId";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotStandard: return "NotStandard";
    case ErrorCode::ZeroTrials: return "ZeroTrials";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Enumeration caps. Defaults finish full runs in minutes on one core.
struct Limits {
  int max_perm_degree = 12;
  int max_involution_degree = 16;
  int max_cell_degree = 9;
};

inline void require_degree_at_most(int n, int cap, std::string_view what) {
  if (n > cap) {
    throw Error(ErrorCode::DegreeTooLarge,
                std::string(what) + ": degree " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace kostant
