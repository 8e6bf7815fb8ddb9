#include <doctest.h>

#include "kappa/proof.hpp"
#include "kappa/relativize.hpp"
#include "kappa/syntax.hpp"
#include "support.hpp"

using namespace kappa;

namespace {

const Sort I = Sort::iota();

bool same_shape(const Proof& a, const Proof& b) {
  if (a.rule() != b.rule()) return false;
  switch (a.rule()) {
    case Proof::Rule::Id:
    case Proof::Rule::Ax: return true;
    case Proof::Rule::ImpElim:
    case Proof::Rule::AndIntro: return same_shape(a.left(), b.left()) && same_shape(a.right(), b.right());
    default: return same_shape(a.left(), b.left());
  }
}

}  // namespace

TEST_CASE("relativization of formulas") {
  Individual x = Individual::var("x", I);
  CHECK(rel_formula(Formula::bot()) == Formula::bot());
  Formula a = Formula::forall("x", I, Formula::imp(Formula::neq(x, x), Formula::bot()));
  Formula expect = Formula::forall("x", I, Formula::imp(Formula::rel(x), Formula::imp(Formula::neq(x, x), Formula::bot())));
  CHECK(alpha_eq(rel_formula(a), expect));
}

TEST_CASE("relativization predicate at arrow sorts") {
  Individual f = Individual::var("f", Sort::arrow(I, I));
  Formula got = rel_sort_pred(f, Sort::arrow(I, I));
  Individual y = Individual::var("y", I);
  Formula expect = Formula::forall("y", I, Formula::imp(Formula::rel(y), Formula::rel(Individual::app(f, y))));
  CHECK(alpha_eq(got, expect));
  CHECK(rel_sort_pred(y, I) == Formula::rel(y));
}

TEST_CASE("relativization preserves polarity") {
  Theory th = Theory::paw();
  th.add_predicate({"A", {}, true});
  th.add_predicate({"B", {}, false});
  test::FormulaGen gen(11, th);
  for (int i = 0; i < 100; ++i) {
    Formula a = gen.formula(4);
    Formula r = rel_formula(a);
    CAPTURE(to_string(a));
    CHECK(polarity(r) == polarity(a));
  }
}

TEST_CASE("relativized corpus proofs check and conclude the relativized goal") {
  for (const auto& cp : test::corpus_proofs()) {
    CAPTURE(cp.file);
    Proof r = rel_proof(cp.entry.proof, cp.theory, cp.entry.goal);
    Theory rt = cp.theory.relativize();
    Sequent s = check_proof(r, rt, rel_sequent(cp.entry.goal));
    CHECK(alpha_eq(s.concl, rel_formula(cp.entry.goal.concl)));
  }
}

TEST_CASE("quantifier-free proofs keep their shape") {
  for (const char* f : {"exfalso.proof", "dne.proof", "peirce.proof", "and_comm.proof"}) {
    Workspace ws = parse_file(test::corpus_path(f));
    const auto& pe = ws.proofs[0];
    CHECK(same_shape(rel_proof(pe.proof, ws.theory, pe.goal), pe.proof));
  }
}

TEST_CASE("the relativized snz instance checks") {
  Theory th = Theory::paw();
  Proof p = Proof::ax({"snz", {}, {}, {}, {}});
  Sequent goal{{}, infer_conclusion(p, th), {}};
  Proof r = rel_proof(p, th, goal);
  CHECK(alpha_eq(infer_conclusion(r, th.relativize()), rel_formula(goal.concl)));
}

TEST_CASE("relativized dependent choice instance") {
  Workspace ws = parse_file(test::corpus_path("choice.proof"));
  const auto& pe = ws.proofs[0];
  Proof r = rel_proof(pe.proof, ws.theory, pe.goal);
  CHECK(alpha_eq(infer_conclusion(r, Theory::cawr()), rel_formula(pe.goal.concl)));
}
