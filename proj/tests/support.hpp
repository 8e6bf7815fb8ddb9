#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "kappa/logic.hpp"
#include "kappa/proof.hpp"
#include "kappa/theory.hpp"
#include "kappa/workspace.hpp"

namespace kappa::test {

std::string corpus_path(const std::string& file);

// Every corpus proof expected to check, with its file and theory.
struct CorpusProof {
  std::string file;
  Theory theory;
  ProofEntry entry;
};
std::vector<CorpusProof> corpus_proofs();

// The Pi02 corpus proofs extraction must handle.
const std::vector<std::string>& pi02_files();

// A random formula over the given signature; atoms are neq, r and the
// nullary predicates A (negative) and B (positive) when declared.
class FormulaGen {
 public:
  FormulaGen(std::uint64_t seed, const Theory& th) : rng_(seed), th_(th) {}
  Formula formula(int depth = 4);

 private:
  std::mt19937_64 rng_;
  const Theory& th_;
  std::vector<std::pair<std::string, Sort>> scope_;
  int fresh_ = 0;

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  Sort sort(int depth);
  Individual individual(const Sort& s, int depth);
  Formula atom();
};

// A lambda-mu equation instance with its free variables and labels.
struct LmEquation {
  std::string name;
  LmTerm lhs, rhs;
  LmCtx lctx, mctx;
};

// The nine lambda-mu equations instantiated at types a and b with free
// variables standing for the metavariables.
std::vector<LmEquation> nine_equations(const LmType& a, const LmType& b);

// Pools of numeric combinators for the recursor laws, with native oracles.
struct RecCase {
  std::string name;
  LmTerm a, b;
  std::function<std::uint64_t(std::uint64_t)> oracle;  // value of rec a b n
};
std::vector<RecCase> rec_pool();

LmTerm numeral_list(const std::vector<std::uint64_t>& xs);

}  // namespace kappa::test
