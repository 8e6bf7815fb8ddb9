#pragma once

#include <cstdint>
#include <random>

#include "kappa/lambdamu.hpp"

namespace kappa {

// Random well-typed closed lambda-mu terms with plenty of redexes.
struct TermGenOptions {
  int max_depth = 8;
  bool allow_fix = true;
};

class TermGen {
 public:
  explicit TermGen(std::uint64_t seed, TermGenOptions opt = {}) : rng_(seed), opt_(opt) {}

  // A small random type built from nat, bot, arrows and products.
  LmType type(int depth = 2);

  // A closed term of type t (t must not be bot).
  LmTerm term(const LmType& t);

  // A closed term of a random non-bot type.
  LmTerm term();

 private:
  std::mt19937_64 rng_;
  TermGenOptions opt_;
  int fresh_ = 0;
  LmCtx vars_, labels_;

  int pick(int n);
  bool coin(double p);
  std::string fresh(const char* base);
  LmTerm gen(const LmType& t, int depth);
  LmTerm leaf(const LmType& t, int depth);
  LmTerm with_var(const std::string& x, const LmType& a, const LmType& t, int depth);
  LmTerm with_label(const std::string& a, const LmType& at, int depth);
};

}  // namespace kappa
