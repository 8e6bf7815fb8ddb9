#pragma once

#include "kappa/lambdamu.hpp"
#include "kappa/logic.hpp"
#include "kappa/proof.hpp"
#include "kappa/theory.hpp"

namespace kappa {

// The output channel appended to every interpreted judgment.
inline const char* kKappa = "kappa";

// |A|: inequalities and negative user predicates are bot, r is nat,
// quantifiers are erased.
LmType interp_type(const Formula& a, const Theory& th);

// |r_s|, the type of realizers of r at sort s.
LmType rel_type(const Sort& s);

// A closed numeral-like inhabitant of |r_s|: 0 at nat, lam x. 0 at arrows.
LmTerm rel_zero(const Sort& s);

struct Interpretation {
  LmTerm term;
  Judgment judgment;  // |gamma| |- term : |A| | |delta|, kappa:nat
};

// Checks `p` against `goal` and translates it rule by rule. Hypothesis names
// become lambda-variables and labels become mu-variables.
Interpretation interp_proof(const Proof& p, const Theory& th, const Sequent& goal);

// Translation without checking; the caller guarantees `p` is a proof.
LmTerm interp_term(const Proof& p, const Theory& th);

LmTerm axiom_realizer(const AxiomInstance& in, const Theory& th);

}  // namespace kappa
