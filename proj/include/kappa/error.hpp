#pragma once

#include <stdexcept>
#include <string>

namespace kappa {

// Stable category codes. The string form is what structured output reports.
enum class ErrorCode {
  Syntax,
  UnknownIdentifier,
  IllSorted,
  RuleMismatch,
  Eigenvariable,
  Polarity,
  UnknownAxiom,
  BadInstance,
  IllTyped,
  Shape,
  MissingRealizer,
  Timeout,
  Io,
  Internal,
};

const char* error_code_name(ErrorCode c);

// Process exit status for the error: 1 user error, 2 timeout, 3 internal.
int exit_status(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode c, const std::string& msg) { throw Error(c, msg); }

}  // namespace kappa
