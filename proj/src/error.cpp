#include "solenoid/error.hpp"

namespace solenoid {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "syntax-error";
    case ErrorCode::RepresentationOverflow: return "representation-overflow";
    case ErrorCode::EndpointNotInDomain: return "endpoint-not-in-domain";
    case ErrorCode::InvalidPoint: return "invalid-point";
    case ErrorCode::LevelMismatch: return "level-mismatch";
    case ErrorCode::NotSameOrbit: return "not-same-orbit";
    case ErrorCode::DomainError: return "domain-error";
    case ErrorCode::UnsupportedTranslation: return "unsupported-translation";
    case ErrorCode::TokenUndefined: return "token-undefined";
    case ErrorCode::ThreadMismatch: return "thread-mismatch";
    case ErrorCode::InvalidWitnessInput: return "invalid-witness-input";
    case ErrorCode::InvalidDescriptor: return "invalid-descriptor";
    case ErrorCode::BoundExceeded: return "bound-exceeded";
    case ErrorCode::Usage: return "usage";
  }
  return "unknown";
}

}  // namespace solenoid
