#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cjsp {

enum class ErrorKind {
  MalformedHeader,
  WrongTokenCount,
  MachineOutOfRange,
  NegativeDuration,
  BadDuration,
  BadOpCount,
  OrderZero,
  PermutationMismatch,
  IndexOutOfRange,
  EmptySchedule,
  InvalidConfig,
  NonPositiveDenominator,
  ZeroBaseline,
  EmptyReport,
  Io,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedHeader: return "MalformedHeader";
    case ErrorKind::WrongTokenCount: return "WrongTokenCount";
    case ErrorKind::MachineOutOfRange: return "MachineOutOfRange";
    case ErrorKind::NegativeDuration: return "NegativeDuration";
    case ErrorKind::BadDuration: return "BadDuration";
    case ErrorKind::BadOpCount: return "BadOpCount";
    case ErrorKind::OrderZero: return "OrderZero";
    case ErrorKind::PermutationMismatch: return "PermutationMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::EmptySchedule: return "EmptySchedule";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::NonPositiveDenominator: return "NonPositiveDenominator";
    case ErrorKind::ZeroBaseline: return "ZeroBaseline";
    case ErrorKind::EmptyReport: return "EmptyReport";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

// Every failure raised by the library. `line()` is the 1-based input line for
// parse errors and 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        kind_(kind),
        line_(line) {}

  ErrorKind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }

  bool is_parse_error() const noexcept {
    switch (kind_) {
      case ErrorKind::MalformedHeader:
      case ErrorKind::WrongTokenCount:
      case ErrorKind::MachineOutOfRange:
      case ErrorKind::NegativeDuration:
      case ErrorKind::BadDuration:
      case ErrorKind::BadOpCount:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorKind kind_;
  int line_;
};

}  // namespace cjsp
