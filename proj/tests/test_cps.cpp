#include <doctest.h>

#include "kappa/cps.hpp"
#include "kappa/error.hpp"
#include "kappa/gen.hpp"
#include "kappa/interp.hpp"
#include "kappa/relativize.hpp"
#include "kappa/syntax.hpp"
#include "support.hpp"

using namespace kappa;

namespace {

const LmType nat = LmType::nat();
const LmType bot = LmType::bot();
const LamType R = LamType::answer();
const LamType base = LamType::base();
const LamType unit = LamType::unit();

LamType translated(const LmTerm& m, const LmCtx& l = {}, const LmCtx& mc = {}) {
  return typecheck_lam(cps_term(m, l, mc), cps_ctx(l, mc));
}

}  // namespace

TEST_CASE("type translation") {
  CHECK(cps_type(nat) == base);
  CHECK(cps_type(bot) == unit);
  CHECK(cps_type(LmType::arrow(nat, bot)) == LamType::prod(LamType::arrow(base), unit));
  CHECK(cps_type(LmType::prod(nat, bot)) == LamType::sum(base, unit));
}

TEST_CASE("target typing rules") {
  CHECK(typecheck_lam(LamTerm::star()) == unit);
  LamTerm app_star = LamTerm::lam("x", LamType::arrow(unit), LamTerm::app(LamTerm::var("x"), LamTerm::star()));
  CHECK(typecheck_lam(app_star) == LamType::arrow(LamType::arrow(unit)));
  LamType s = LamType::sum(unit, base);
  CHECK(typecheck_lam(LamTerm::in(1, s, LamTerm::star())) == s);
  CHECK_THROWS_AS(typecheck_lam(LamTerm::in(2, s, LamTerm::star())), Error);
  CHECK_THROWS_AS(typecheck_lam(LamTerm::app(LamTerm::star(), LamTerm::star())), Error);
}

TEST_CASE("mu and naming translate as continuation binders") {
  // mu a. M becomes lam a~. M~ star
  LmTerm m = LmTerm::mu("a", nat, LmTerm::named("a", LmTerm::num(1)));
  LamTerm c = cps_term(m);
  REQUIRE(c.is(LamTerm::Kind::Lam));
  CHECK(c.name() == cps_label("a"));
  REQUIRE(c.a().is(LamTerm::Kind::App));
  CHECK(c.a().b().is(LamTerm::Kind::Star));
  // [a] M becomes lam v. M~ a~
  LamTerm n = cps_term(LmTerm::named("a", LmTerm::num(1)), {}, {{"a", nat}});
  REQUIRE(n.is(LamTerm::Kind::Lam));
  REQUIRE(n.a().is(LamTerm::Kind::App));
  CHECK(n.a().b().is(LamTerm::Kind::Var));
  CHECK(n.a().b().name() == cps_label("a"));
}

TEST_CASE("translation preserves typing on random terms") {
  TermGen gen(31337);
  for (int i = 0; i < 200; ++i) {
    LmTerm m = gen.term();
    LmType t = typecheck(m);
    CHECK(translated(m) == LamType::arrow(cps_type(t)));
  }
}

TEST_CASE("translation preserves typing on corpus interpretations") {
  for (const auto& cp : test::corpus_proofs()) {
    CAPTURE(cp.file);
    Proof r = rel_proof(cp.entry.proof, cp.theory, cp.entry.goal);
    Interpretation in = interp_proof(r, cp.theory.relativize(), rel_sequent(cp.entry.goal));
    CHECK(translated(in.term, in.judgment.lctx, in.judgment.mctx) == LamType::arrow(cps_type(in.judgment.type)));
  }
}

TEST_CASE("peirce translates at its type") {
  Workspace ws = parse_file(test::corpus_path("peirce.proof"));
  Interpretation in = interp_proof(ws.proofs[0].proof, ws.theory, ws.proofs[0].goal);
  CHECK(translated(in.term, in.judgment.lctx, in.judgment.mctx) == LamType::arrow(cps_type(in.judgment.type)));
}

TEST_CASE("unit eta") {
  LamCtx ctx{{"u", unit}};
  CHECK(alpha_eq(normalize_lam(LamTerm::var("u"), ctx), LamTerm::star()));
}

TEST_CASE("beta is preserved") {
  LmTerm id = LmTerm::lam("x", nat, LmTerm::var("x"));
  LmCtx l{{"y", nat}};
  LamTerm a = cps_term(LmTerm::app(id, LmTerm::var("y")), l);
  LamTerm b = cps_term(LmTerm::var("y"), l);
  CHECK(lam_equal(a, b, cps_ctx(l, {})));
}

TEST_CASE("the nine equations translate to beta-eta equal terms") {
  std::vector<std::pair<LmType, LmType>> types{
      {nat, nat},
      {bot, nat},
      {LmType::arrow(nat, nat), bot},
      {LmType::prod(nat, bot), LmType::arrow(bot, nat)},
  };
  TermGen gen(5);
  for (int i = 0; i < 6; ++i) types.push_back({gen.type(2), gen.type(2)});
  for (const auto& [a, b] : types) {
    for (const auto& eq : test::nine_equations(a, b)) {
      CAPTURE(eq.name);
      CAPTURE(to_string(a));
      CAPTURE(to_string(b));
      LmType t = typecheck(eq.lhs, eq.lctx, eq.mctx);
      REQUIRE(typecheck(eq.rhs, eq.lctx, eq.mctx) == t);
      LamCtx ctx = cps_ctx(eq.lctx, eq.mctx);
      CHECK(lam_equal(cps_term(eq.lhs, eq.lctx, eq.mctx), cps_term(eq.rhs, eq.lctx, eq.mctx), ctx));
    }
  }
}

TEST_CASE("distinct terms stay distinct") {
  LmCtx l{{"f", LmType::arrow(nat, nat)}, {"y", nat}};
  LamTerm a = cps_term(LmTerm::var("y"), l);
  LamTerm b = cps_term(LmTerm::app(LmTerm::var("f"), LmTerm::var("y")), l);
  CHECK_FALSE(lam_equal(a, b, cps_ctx(l, {})));
  LmCtx p{{"p", LmType::prod(nat, nat)}};
  CHECK_FALSE(lam_equal(cps_term(LmTerm::proj(1, LmTerm::var("p")), p), cps_term(LmTerm::proj(2, LmTerm::var("p")), p),
                        cps_ctx(p, {})));
}

TEST_CASE("translation is deterministic") {
  TermGen gen(8);
  for (int i = 0; i < 20; ++i) {
    LmTerm m = gen.term();
    CHECK(alpha_eq(cps_term(m), cps_term(m)));
    CHECK(to_string(cps_term(m)) == to_string(cps_term(m)));
  }
}
