#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace solenoid {

enum class ErrorCode {
  Syntax,
  RepresentationOverflow,
  EndpointNotInDomain,
  InvalidPoint,
  LevelMismatch,
  NotSameOrbit,
  DomainError,
  UnsupportedTranslation,
  TokenUndefined,
  ThreadMismatch,
  InvalidWitnessInput,
  InvalidDescriptor,
  BoundExceeded,
  Usage,
};

/// Stable kebab-case name used in structured error output.
std::string_view to_string(ErrorCode code);

/// Every failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(message), code_(code), position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace solenoid
