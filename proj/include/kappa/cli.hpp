#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kappa {

inline constexpr size_t kDefaultFuel = 100000;

// Runs one kappa command. Returns the process exit status: 0 ok, 1 user
// error, 2 timeout, 3 internal error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kappa
