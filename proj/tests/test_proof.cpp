#include <doctest.h>

#include <chrono>
#include <functional>

#include "kappa/error.hpp"
#include "kappa/parallel.hpp"
#include "kappa/proof.hpp"
#include "kappa/syntax.hpp"
#include "kappa/workspace.hpp"
#include "support.hpp"

using namespace kappa;

namespace {

const Sort I = Sort::iota();

Theory with_atoms() {
  Theory th = Theory::paw();
  th.add_predicate({"A", {}, true});
  th.add_predicate({"B", {}, true});
  return th;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

void each_node(const Proof& p, const std::function<void(const Proof&)>& f) {
  f(p);
  if (p.rule() == Proof::Rule::Id || p.rule() == Proof::Rule::Ax) return;
  each_node(p.left(), f);
  if (p.rule() == Proof::Rule::ImpElim || p.rule() == Proof::Rule::AndIntro) each_node(p.right(), f);
}

}  // namespace

TEST_CASE("the classical tautologies check quickly") {
  for (const char* f : {"exfalso.proof", "dne.proof", "peirce.proof"}) {
    Workspace ws = parse_file(test::corpus_path(f));
    REQUIRE(ws.proofs.size() == 1);
    auto t0 = std::chrono::steady_clock::now();
    Sequent s = check_proof(ws.proofs[0].proof, ws.theory, ws.proofs[0].goal);
    auto dt = std::chrono::steady_clock::now() - t0;
    CHECK(alpha_eq(s.concl, ws.proofs[0].goal.concl));
    CHECK(dt < std::chrono::seconds(1));
  }
}

TEST_CASE("double negation elimination fails on r(t)") {
  Workspace ws = parse_file(test::corpus_path("positive.proof"));
  CHECK(code_of([&] { check_proof(ws.proofs[0].proof, ws.theory, ws.proofs[0].goal); }) == ErrorCode::Polarity);
}

TEST_CASE("every corpus proof checks against its goal") {
  for (const auto& cp : test::corpus_proofs()) {
    CAPTURE(cp.file);
    CHECK_NOTHROW(check_proof(cp.entry.proof, cp.theory, cp.entry.goal));
  }
}

TEST_CASE("checking is deterministic") {
  for (const auto& cp : test::corpus_proofs()) {
    Formula a = infer_conclusion(cp.entry.proof, cp.theory);
    Formula b = infer_conclusion(cp.entry.proof, cp.theory);
    CHECK(a == b);
  }
}

TEST_CASE("serial and parallel checking agree") {
  for (const char* f : {"exfalso.proof", "add0.proof", "choice.proof", "positive.proof"}) {
    Workspace ws = parse_file(test::corpus_path(f));
    auto a = check_all_serial(ws), b = check_all_parallel(ws);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].name == b[i].name);
      CHECK(a[i].ok == b[i].ok);
      CHECK(a[i].code == b[i].code);
      if (a[i].ok) CHECK(a[i].concl == b[i].concl);
    }
  }
}

TEST_CASE("bot-elim formulas in the corpus are negative") {
  for (const auto& cp : test::corpus_proofs())
    each_node(cp.entry.proof, [](const Proof& p) {
      if (p.rule() == Proof::Rule::BotElim) CHECK(is_negative(p.formula()));
    });
}

TEST_CASE("a positive formula cannot enter the right context") {
  Theory th = Theory::pawr();
  Individual x = Individual::var("x", I);
  Proof p = Proof::imp_intro("h", Formula::rel(x), Proof::bot_elim("a", Formula::rel(x), Proof::bot_intro("a", Proof::id("h"))));
  CHECK(code_of([&] { infer_conclusion(p, th); }) == ErrorCode::Polarity);
  // A positive formula placed in delta from outside is rejected too.
  CHECK(code_of([&] { infer_conclusion(Proof::id("h"), th, {{"h", Formula::rel(x)}}, {{"a", Formula::rel(x)}}); }) ==
        ErrorCode::Polarity);
}

TEST_CASE("rule mismatches") {
  Theory th = with_atoms();
  Formula a = Formula::atom("A", {}, true);
  CHECK(code_of([&] { infer_conclusion(Proof::id("h"), th); }) == ErrorCode::UnknownIdentifier);
  CHECK(code_of([&] { infer_conclusion(Proof::imp_elim(Proof::id("h"), Proof::id("h")), th, {{"h", a}}); }) ==
        ErrorCode::RuleMismatch);
  CHECK(code_of([&] { infer_conclusion(Proof::and_elim(1, Proof::id("h")), th, {{"h", a}}); }) ==
        ErrorCode::RuleMismatch);
}

TEST_CASE("names may not be reused along a path") {
  Theory th = with_atoms();
  Formula a = Formula::atom("A", {}, true);
  Proof p = Proof::imp_intro("h", a, Proof::imp_intro("h", a, Proof::id("h")));
  CHECK_THROWS_AS(infer_conclusion(p, th), Error);
}

TEST_CASE("eigenvariable condition") {
  Theory th = Theory::paw();
  Individual x = Individual::var("x", I);
  Formula fx = Formula::neq(x, x);
  Proof p = Proof::forall_intro("x", I, Proof::id("h"));
  CHECK(code_of([&] { infer_conclusion(p, th, {{"h", fx}}); }) == ErrorCode::Eigenvariable);
}

TEST_CASE("forall-elim substitutes without capture") {
  Theory th = Theory::paw();
  Individual x = Individual::var("x", I), y = Individual::var("y", I);
  // forall x y. x != y -> x != y, instantiated at the free y.
  Formula body = Formula::neq(x, y);
  Proof p = Proof::forall_intro("x", I,
                                Proof::forall_intro("y", I, Proof::imp_intro("h", body, Proof::id("h"))));
  Formula got = infer_conclusion(Proof::forall_elim(p, y), th);
  Individual z = Individual::var("z", I);
  Formula expect = Formula::forall("z", I, Formula::imp(Formula::neq(y, z), Formula::neq(y, z)));
  CHECK(alpha_eq(got, expect));
  CHECK(got.var() != "y");
}

TEST_CASE("proof parse and print round trip") {
  for (const auto& cp : test::corpus_proofs()) {
    Workspace ws;
    ws.theory = cp.theory;
    ws.proofs.push_back(cp.entry);
    Workspace back = parse_module(module_to_string(ws));
    REQUIRE(back.proofs.size() == 1);
    CHECK(back.proofs[0].proof == cp.entry.proof);
    CHECK(back.proofs[0].goal.concl == cp.entry.goal.concl);
  }
}
