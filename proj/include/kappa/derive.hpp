#pragma once

#include <set>
#include <string>

#include "kappa/logic.hpp"
#include "kappa/proof.hpp"
#include "kappa/theory.hpp"

namespace kappa {

// Equality reasoning built from refl and leib. Every hypothesis, label and
// bound variable it introduces is fresh with respect to the seeded names and
// to everything it handed out before.
class EqDeriver {
 public:
  explicit EqDeriver(std::set<std::string> used = {}) { pool_.used = std::move(used); }

  NamePool& pool() { return pool_; }

  Proof refl(const Individual& t);  // t = t

  // From e : a = b and p : P[a/w], a proof of P[b/w]. P must be negative.
  Proof transport(const Proof& e, const Individual& a, const Individual& b, const std::string& w, const Formula& P,
                  const Proof& p);

  Proof sym(const Proof& e, const Individual& a, const Individual& b);  // b = a
  Proof trans(const Proof& e1, const Proof& e2, const Individual& a, const Individual& b,
              const Individual& c);                                                          // a = c
  Proof cong(const Proof& e, const Individual& a, const Individual& b, const Individual& f);  // f a = f b
  Proof fun_cong(const Proof& e, const Individual& f, const Individual& g, const Individual& c);  // f c = g c

 private:
  NamePool pool_;

  std::string fresh_var(const std::string& base, const std::vector<const Individual*>& avoid);
};

}  // namespace kappa
