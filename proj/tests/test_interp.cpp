#include <doctest.h>

#include <functional>

#include "kappa/error.hpp"
#include "kappa/interp.hpp"
#include "kappa/proof.hpp"
#include "kappa/relativize.hpp"
#include "kappa/syntax.hpp"
#include "support.hpp"

using namespace kappa;

namespace {

const Sort I = Sort::iota();
const LmType nat = LmType::nat();
const LmType bot = LmType::bot();

LmType arr(const LmType& a, const LmType& b) { return LmType::arrow(a, b); }

void each_axiom(const Proof& p, const std::function<void(const AxiomInstance&)>& f) {
  switch (p.rule()) {
    case Proof::Rule::Id: return;
    case Proof::Rule::Ax: f(p.axiom()); return;
    case Proof::Rule::ImpElim:
    case Proof::Rule::AndIntro: each_axiom(p.right(), f); [[fallthrough]];
    default: each_axiom(p.left(), f);
  }
}

struct Relativized {
  Proof proof;
  Theory theory;
  Sequent goal;
};

Relativized relativized(const test::CorpusProof& cp) {
  return {rel_proof(cp.entry.proof, cp.theory, cp.entry.goal), cp.theory.relativize(), rel_sequent(cp.entry.goal)};
}

}  // namespace

TEST_CASE("formula types") {
  Theory th = Theory::pawr();
  Individual x = Individual::var("x", I);
  CHECK(interp_type(Formula::neq(x, x), th) == bot);
  CHECK(interp_type(Formula::rel(x), th) == nat);
  CHECK(interp_type(Formula::bot(), th) == bot);
  CHECK(interp_type(Formula::imp(Formula::rel(x), Formula::bot()), th) == arr(nat, bot));
  CHECK(interp_type(Formula::conj(Formula::rel(x), Formula::bot()), th) == LmType::prod(nat, bot));
  CHECK(interp_type(Formula::forall("x", I, Formula::rel(x)), th) == nat);
  CHECK(rel_type(Sort::arrow(I, I)) == arr(nat, nat));
}

TEST_CASE("interpretations of corpus proofs typecheck at their judgment") {
  for (const auto& cp : test::corpus_proofs()) {
    CAPTURE(cp.file);
    Relativized r = relativized(cp);
    Interpretation in = interp_proof(r.proof, r.theory, r.goal);
    CHECK(in.judgment.mctx.at(kKappa) == nat);
    CHECK(typecheck(in.term, in.judgment.lctx, in.judgment.mctx) == in.judgment.type);
    CHECK(in.judgment.type == interp_type(r.goal.concl, r.theory));
  }
}

TEST_CASE("pure logic interprets without relativization") {
  for (const char* f : {"exfalso.proof", "dne.proof", "peirce.proof", "and_comm.proof", "ident.proof"}) {
    Workspace ws = parse_file(test::corpus_path(f));
    const auto& pe = ws.proofs[0];
    Interpretation in = interp_proof(pe.proof, ws.theory, pe.goal);
    CHECK(typecheck(in.term, in.judgment.lctx, in.judgment.mctx) == interp_type(pe.goal.concl, ws.theory));
  }
}

TEST_CASE("unrelativized induction has no realizer") {
  Workspace ws = parse_file(test::corpus_path("add0.proof"));
  try {
    interp_proof(ws.proofs[0].proof, ws.theory, ws.proofs[0].goal);
    FAIL("expected a missing realizer");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingRealizer);
  }
}

TEST_CASE("quantifiers are erased") {
  Theory th = Theory::paw();
  Individual x = Individual::var("x", I);
  Proof body = Proof::imp_intro("h", Formula::neq(x, x), Proof::id("h"));
  CHECK(interp_term(Proof::forall_intro("x", I, body), th) == interp_term(body, th));
}

TEST_CASE("axiom realizers are closed and typed") {
  for (const auto& cp : test::corpus_proofs()) {
    Relativized r = relativized(cp);
    each_axiom(r.proof, [&](const AxiomInstance& in) {
      CAPTURE(in.name);
      LmTerm t = axiom_realizer(in, r.theory);
      CHECK(free_lam_vars(t).empty());
      CHECK(free_mu_vars(t).empty());
      CHECK(typecheck(t) == interp_type(r.theory.instantiate(in), r.theory));
    });
  }
}

TEST_CASE("refl is realized by the identity") {
  Theory th = Theory::pawr();
  AxiomInstance refl{"refl", {I}, {}, {}, {}};
  LmTerm t = axiom_realizer(refl, th);
  CHECK(alpha_eq(t, LmTerm::lam("x", bot, LmTerm::var("x"))));
  CHECK(typecheck(t) == arr(bot, bot));
}

TEST_CASE("induction on r(x) is realized by the recursor") {
  Theory th = Theory::pawr();
  Individual x = Individual::var("x", I);
  AxiomInstance ind{"ind", {}, Formula::rel(x), {{"x", I}}, {}};
  LmTerm t = axiom_realizer(ind, th);
  CHECK(typecheck(t) == arr(nat, arr(arr(nat, arr(nat, nat)), arr(nat, nat))));
  CHECK(alpha_eq(t, mk_rec(nat)));
}

TEST_CASE("the dependent choice realizer has the bar recursion type") {
  Workspace ws = parse_file(test::corpus_path("choice.proof"));
  const auto& pe = ws.proofs[0];
  Proof r = rel_proof(pe.proof, ws.theory, pe.goal);
  Theory rt = ws.theory.relativize();
  int seen = 0;
  each_axiom(r, [&](const AxiomInstance& in) {
    if (in.name != "dc") return;
    ++seen;
    LmType t = typecheck(axiom_realizer(in, rt));
    CHECK(t == interp_type(rt.instantiate(in), rt));
    // (nat -> X -> (F -> bot) -> F) -> ((nat -> F) -> bot) -> bot
    REQUIRE(t.is(LmType::Kind::Arrow));
    const LmType& h1 = t.left();
    REQUIRE(t.right().is(LmType::Kind::Arrow));
    CHECK(t.right().right() == bot);
    const LmType& h2 = t.right().left();
    REQUIRE(h2.is(LmType::Kind::Arrow));
    CHECK(h2.right() == bot);
    REQUIRE(h2.left().is(LmType::Kind::Arrow));
    CHECK(h2.left().left() == nat);
    LmType f = h2.left().right();
    REQUIRE(h1.is(LmType::Kind::Arrow));
    CHECK(h1.left() == nat);
    REQUIRE(h1.right().is(LmType::Kind::Arrow));
    CHECK(h1.right().right() == arr(arr(f, bot), f));
  });
  CHECK(seen == 1);
}

TEST_CASE("kappa is reserved") {
  Theory th = Theory::pawr();
  th.add_predicate({"A", {}, true});
  Formula a = Formula::atom("A", {}, true);
  Proof p = Proof::imp_intro("h", a, Proof::bot_elim(kKappa, a, Proof::bot_intro(kKappa, Proof::id("h"))));
  Sequent goal{{}, Formula::imp(a, a), {}};
  CHECK_THROWS_AS(interp_proof(p, th, goal), Error);
  Sequent open{{{"h", a}}, a, {{kKappa, a}}};
  CHECK_THROWS_AS(interp_proof(Proof::id("h"), th, open), Error);
}
