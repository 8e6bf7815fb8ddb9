// Builds the equality-heavy corpus proofs and prints or writes them.
//   gen_corpus            print every generated module
//   gen_corpus DIR        write DIR/<name>.proof for each module

#include <fstream>
#include <iostream>

#include "kappa/corpus.hpp"
#include "kappa/workspace.hpp"

int main(int argc, char** argv) {
  for (const auto& [name, ws] : kappa::generated_corpus()) {
    std::string text = kappa::module_to_string(ws);
    if (argc < 2) {
      std::cout << ";; " << name << ".proof\n" << text << "\n";
      continue;
    }
    std::string path = std::string(argv[1]) + "/" + name + ".proof";
    std::ofstream f(path);
    if (!f) {
      std::cerr << "cannot write " << path << "\n";
      return 1;
    }
    f << text;
  }
  return 0;
}
