#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kappa/error.hpp"
#include "kappa/extract.hpp"
#include "kappa/workspace.hpp"

namespace kappa {

struct CheckOutcome {
  std::string name;
  bool ok = false;
  Formula concl;
  ErrorCode code = ErrorCode::Internal;
  std::string message;
};

// Checks every proof of the workspace; results are in file order.
std::vector<CheckOutcome> check_all_serial(const Workspace& ws);
std::vector<CheckOutcome> check_all_parallel(const Workspace& ws);

// Runs the extracted program on inputs lo..hi inclusive; rows are in input order.
ExtractionReport run_inputs_serial(const Extraction& ex, std::uint64_t lo, std::uint64_t hi, size_t fuel);
ExtractionReport run_inputs_parallel(const Extraction& ex, std::uint64_t lo, std::uint64_t hi, size_t fuel);

}  // namespace kappa
