#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace singknot {

enum class ErrorCode {
  MalformedLine,
  EdgeMultiplicity,
  OrientationConflict,
  NonPlanar,
  Disconnected,
  NotLong,
  ArityMismatch,
  PatternOverflow,
  NegativeExponentAtZero,
  NonIntegralSubstitution,
  StaleSite,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::EdgeMultiplicity: return "EdgeMultiplicity";
    case ErrorCode::OrientationConflict: return "OrientationConflict";
    case ErrorCode::NonPlanar: return "NonPlanar";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotLong: return "NotLong";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::PatternOverflow: return "PatternOverflow";
    case ErrorCode::NegativeExponentAtZero: return "NegativeExponentAtZero";
    case ErrorCode::NonIntegralSubstitution: return "NonIntegralSubstitution";
    case ErrorCode::StaleSite: return "StaleSite";
  }
  return "Unknown";
}

/// True for errors raised while reading or validating a diagram.
inline bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedLine:
    case ErrorCode::EdgeMultiplicity:
    case ErrorCode::OrientationConflict:
    case ErrorCode::NonPlanar:
    case ErrorCode::Disconnected:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int line = 0)
      : std::runtime_error(format(code, message, line)), code_(code), line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  /// 1-based source line for parse errors, 0 otherwise.
  int line() const noexcept { return line_; }

 private:
  static std::string format(ErrorCode code, const std::string& message, int line) {
    std::string out(to_string(code));
    if (line > 0) out += " (line " + std::to_string(line) + ")";
    if (!message.empty()) out += ": " + message;
    return out;
  }

  ErrorCode code_;
  int line_;
};

}  // namespace singknot
