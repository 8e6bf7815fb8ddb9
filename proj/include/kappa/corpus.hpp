#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kappa/workspace.hpp"

namespace kappa {

// Proofs too long to write by hand, built with EqDeriver.
//   add0     forall x exists y (rec 0 (k S) x = y), by induction
//   sym      forall x y (x = y -> y = x)
//   choice   the dc instance for z = S y, in CAw
std::vector<std::pair<std::string, Workspace>> generated_corpus();

Proof add0_proof();
Proof sym_proof();
Proof choice_proof();

}  // namespace kappa
