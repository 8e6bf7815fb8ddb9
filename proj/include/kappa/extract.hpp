#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kappa/lambdamu.hpp"
#include "kappa/logic.hpp"
#include "kappa/proof.hpp"
#include "kappa/theory.hpp"

namespace kappa {

// forall x:i exists y:i (t = u), as read off a conclusion.
struct Pi02Goal {
  std::string x, y;
  Individual t, u;
  Sort sigma;  // sort of the equation
  bool double_negated = true;  // the ~~(t != u) form rather than (t != u)
};

// Accepts forall x ~forall y ~~(t != u) and forall x ~forall y (t != u).
Pi02Goal read_pi02(const Formula& concl);

// A proof of forall x ~forall y (t != u) from a closed proof of the Pi02
// formula. Passes the proof through when the ~~ is already gone.
Proof prepare_goal(const Proof& p, const Theory& th);

struct Extraction {
  Pi02Goal goal;
  Proof prepared;
  Proof relativized;
  LmTerm program;  // lam d. mu kappa. [[p^r]] d (lam w. [kappa] w) : nat -> nat
};

Extraction extract_program(const Proof& p, const Theory& th);

// The system T reading of a closed individual: 0, S, k, s, rec and application.
LmTerm individual_to_term(const Individual& t);

enum class Verdict { Pass, Fail, Unverifiable };
const char* verdict_name(Verdict v);

struct WitnessCheck {
  Verdict verdict = Verdict::Fail;
  bool timed_out = false;
  std::string note;
};

WitnessCheck verify_witness(const Pi02Goal& goal, std::uint64_t n, std::uint64_t m, size_t fuel);

struct ExtractionRow {
  std::uint64_t input = 0;
  std::optional<std::uint64_t> witness;
  Verdict verdict = Verdict::Fail;
  size_t steps = 0;
  bool timed_out = false;
  std::string note;
};

struct ExtractionReport {
  LmTerm program;
  std::vector<ExtractionRow> rows;
  bool all_pass() const;
};

// Runs the program on one input and verifies the witness.
ExtractionRow run_input(const Extraction& ex, std::uint64_t n, size_t fuel);

}  // namespace kappa
