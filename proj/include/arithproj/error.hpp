#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arithproj {

enum class ErrorKind {
  InstanceTooLarge,
  OutOfRange,
  MalformedInstance,
  EnumerationCapExceeded,
  EmptyLabelSet,
  NotDifferenceInjective,
  NoPreimage,
  HypothesisViolated,
  InvalidBase,
  InvalidDimension,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::MalformedInstance: return "MalformedInstance";
    case ErrorKind::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorKind::EmptyLabelSet: return "EmptyLabelSet";
    case ErrorKind::NotDifferenceInjective: return "NotDifferenceInjective";
    case ErrorKind::NoPreimage: return "NoPreimage";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::InvalidBase: return "InvalidBase";
    case ErrorKind::InvalidDimension: return "InvalidDimension";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Single exception type for the library; callers switch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace arithproj
