#include <iostream>

#include "kappa/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kappa::run_cli(args, std::cout, std::cerr);
}
