#pragma once

#include <map>
#include <string>
#include <vector>

#include "kappa/logic.hpp"
#include "kappa/proof.hpp"
#include "kappa/theory.hpp"

namespace kappa {

// r at sort s: r(t) at i, forall x:s (r(x) -> r(t x)) at arrows.
Formula rel_sort_pred(const Individual& t, const Sort& s);

Formula rel_formula(const Formula& a);

// The closed individual 0^s: 0 at i, k 0^t at s -> t.
Individual zero_of(const Sort& s);

// Variable -> name of the hypothesis r(variable) in the current context.
using RelEnv = std::map<std::string, std::string>;

// A proof of rel_sort_pred(t, sort of t) whose free variables are covered by
// `env`. User constants c need a user axiom named rel-c of the right shape.
Proof rel_individual_proof(const Individual& t, const RelEnv& env, const Theory& rel_theory);

// The closed proof of forall^r xs. r(t), xs the free variables of t by name.
Proof rel_individual_proof(const Individual& t, const Theory& rel_theory);

// From a proof P of `from` (a formula of uniform quantifiers) build a proof of
// `to`, where `to` relativizes some prefix of those quantifiers and is
// otherwise alpha-equal. Fresh names come from `pool`.
Proof relativize_prefix(const Proof& p, const Formula& from, const Formula& to, NamePool& pool);

// Translates a proof of a closed sequent of paw/caw into a proof of the
// relativized sequent in pawr/cawr.
Proof rel_proof(const Proof& p, const Theory& theory, const Sequent& goal);
Sequent rel_sequent(const Sequent& s);

// The proof of (dc_unrel[B])^r from dc[r(z) & (r(y) & B^r)], for the instance `inst`.
Proof dc_relativized_proof(const AxiomInstance& inst, const Theory& source, NamePool& pool);

}  // namespace kappa
