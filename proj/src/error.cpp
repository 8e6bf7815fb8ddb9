#include "kappa/error.hpp"

namespace kappa {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::Syntax: return "syntax";
    case ErrorCode::UnknownIdentifier: return "unknown-identifier";
    case ErrorCode::IllSorted: return "ill-sorted";
    case ErrorCode::RuleMismatch: return "rule-mismatch";
    case ErrorCode::Eigenvariable: return "eigenvariable";
    case ErrorCode::Polarity: return "polarity";
    case ErrorCode::UnknownAxiom: return "unknown-axiom";
    case ErrorCode::BadInstance: return "bad-instance";
    case ErrorCode::IllTyped: return "ill-typed";
    case ErrorCode::Shape: return "shape";
    case ErrorCode::MissingRealizer: return "missing-realizer";
    case ErrorCode::Timeout: return "timeout";
    case ErrorCode::Io: return "io";
    case ErrorCode::Internal: return "internal";
  }
  return "internal";
}

int exit_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::Timeout: return 2;
    case ErrorCode::Internal: return 3;
    default: return 1;
  }
}

}  // namespace kappa
