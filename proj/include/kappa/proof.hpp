#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "kappa/logic.hpp"
#include "kappa/theory.hpp"

namespace kappa {

using Context = std::map<std::string, Formula>;

struct Sequent {
  Context gamma;  // hypothesis name -> formula
  Formula concl;
  Context delta;  // mu-label -> formula, all negative
};

// Equal contexts and alpha-equal formulas.
bool sequent_alpha_eq(const Sequent& a, const Sequent& b);

class Proof {
 public:
  enum class Rule {
    Id, Ax, ImpIntro, ImpElim, AndIntro, AndElim, ForallIntro, ForallElim, BotIntro, BotElim
  };
  struct Node;

  Proof() = default;
  static Proof id(const std::string& hyp);
  static Proof ax(AxiomInstance inst);
  static Proof imp_intro(const std::string& hyp, const Formula& a, const Proof& p);
  static Proof imp_elim(const Proof& p, const Proof& q);
  static Proof and_intro(const Proof& p, const Proof& q);
  static Proof and_elim(int i, const Proof& p);
  static Proof forall_intro(const std::string& var, const Sort& sort, const Proof& p);
  static Proof forall_elim(const Proof& p, const Individual& t);
  static Proof bot_intro(const std::string& label, const Proof& p);
  static Proof bot_elim(const std::string& label, const Formula& a, const Proof& p);

  explicit operator bool() const { return node_ != nullptr; }
  Rule rule() const;
  // Hypothesis name (Id, ImpIntro), eigenvariable (ForallIntro) or label (Bot*).
  const std::string& name() const;
  const Formula& formula() const;  // ImpIntro, BotElim
  const Sort& sort() const;        // ForallIntro
  const Individual& term() const;  // ForallElim
  int index() const;               // AndElim
  const AxiomInstance& axiom() const;
  const Proof& left() const;   // the only or first premise
  const Proof& right() const;  // second premise of ImpElim / AndIntro

  size_t size() const;
  friend bool operator==(const Proof& a, const Proof& b);

 private:
  std::shared_ptr<const Node> node_;
};

struct Proof::Node {
  Proof::Rule rule;
  std::string name;
  Formula formula;
  Sort sort;
  Individual term;
  int index = 0;
  AxiomInstance axiom;
  Proof a, b;
};

const char* rule_name(Proof::Rule r);

// Infers the conclusion of `p` under the given contexts (no goal needed).
Formula infer_conclusion(const Proof& p, const Theory& th, const Context& gamma = {},
                         const Context& delta = {});

// Checks `p` against `goal`; returns the checked sequent (goal's contexts,
// inferred conclusion). Premises may use any subset of the contexts.
Sequent check_proof(const Proof& p, const Theory& th, const Sequent& goal);

// Every hypothesis name, label and eigenvariable name used in the proof.
void proof_names(const Proof& p, std::set<std::string>& out);

}  // namespace kappa
