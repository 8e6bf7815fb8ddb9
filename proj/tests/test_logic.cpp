#include <doctest.h>

#include "kappa/error.hpp"
#include "kappa/logic.hpp"
#include "kappa/sexpr.hpp"
#include "kappa/syntax.hpp"
#include "kappa/theory.hpp"
#include "support.hpp"

using namespace kappa;

namespace {

const Sort I = Sort::iota();
Individual x() { return Individual::var("x", I); }
Individual y() { return Individual::var("y", I); }
Individual S(const Individual& t) { return Individual::app(Individual::constant("S"), t); }

Formula parse(const std::string& text, const Theory& th = Theory::paw(), Scope scope = {}) {
  return parse_formula(parse_one_sexpr(text), scope, th);
}

}  // namespace

TEST_CASE("arrow sorts associate to the right") {
  Sort s = Sort::arrows({I, I}, I);
  CHECK(s == Sort::arrow(I, Sort::arrow(I, I)));
  CHECK(s != Sort::arrow(Sort::arrow(I, I), I));
  CHECK(parse_sort(parse_one_sexpr("(-> i i i)")) == s);
}

TEST_CASE("builtin constant sorts") {
  CHECK(infer_sort(Individual::constant("0")) == I);
  CHECK(infer_sort(S(Individual::constant("0"))) == I);
  Sort k = constant_sort("k", {I, Sort::arrow(I, I)});
  CHECK(k == Sort::arrows({I, Sort::arrow(I, I)}, I));
  Sort rec = constant_sort("rec", {I});
  CHECK(rec == Sort::arrows({I, Sort::arrows({I, I}, I), I}, I));
}

TEST_CASE("ill-sorted application is rejected") {
  Individual bad = Individual::app(Individual::constant("0"), Individual::constant("0"));
  CHECK_THROWS_AS(infer_sort(bad), Error);
  CHECK_THROWS_AS(parse("(neq (S S) 0)"), Error);
}

TEST_CASE("derived connectives desugar") {
  Formula a = Formula::atom("A", {}, true);
  CHECK(f_not(a) == Formula::imp(a, Formula::bot()));
  CHECK(f_eq(x(), y()) == f_not(Formula::neq(x(), y())));
  CHECK(f_exists("x", I, a) == f_not(Formula::forall("x", I, f_not(a))));
  CHECK(f_or(a, a) == f_not(Formula::conj(f_not(a), f_not(a))));
}

TEST_CASE("polarity") {
  Formula neg = Formula::atom("A", {}, true);
  Formula pos = Formula::rel(x());
  CHECK(is_negative(Formula::bot()));
  CHECK(is_negative(Formula::neq(x(), y())));
  CHECK(is_positive(pos));
  CHECK_FALSE(is_negative(pos));
  CHECK(is_negative(Formula::imp(pos, neg)));
  CHECK_FALSE(is_negative(Formula::imp(neg, pos)));
  CHECK_FALSE(is_negative(Formula::conj(neg, pos)));
  CHECK(is_negative(Formula::forall("x", I, neg)));
  CHECK(is_positive(Formula::forall("x", I, pos)));
}

TEST_CASE("substitution avoids capture") {
  // (forall y. x != y)[S y / x] renames the bound y.
  Formula a = Formula::forall("y", I, Formula::neq(x(), y()));
  Formula b = subst1(a, "x", S(y()));
  REQUIRE(b.is(Formula::Kind::Forall));
  CHECK(b.var() != "y");
  CHECK(occurs_free("y", b));
  Formula expect = Formula::forall("z", I, Formula::neq(S(y()), Individual::var("z", I)));
  CHECK(alpha_eq(b, expect));
}

TEST_CASE("substitution stops at a shadowing binder") {
  Formula a = Formula::imp(Formula::neq(x(), x()), Formula::forall("x", I, Formula::neq(x(), x())));
  Formula b = subst1(a, "x", Individual::constant("0"));
  Formula zero_neq = Formula::neq(Individual::constant("0"), Individual::constant("0"));
  CHECK(alpha_eq(b, Formula::imp(zero_neq, Formula::forall("x", I, Formula::neq(x(), x())))));
}

TEST_CASE("alpha equivalence") {
  Formula a = Formula::forall("x", I, Formula::neq(x(), Individual::constant("0")));
  Formula b = Formula::forall("y", I, Formula::neq(y(), Individual::constant("0")));
  CHECK(alpha_eq(a, b));
  CHECK_FALSE(alpha_eq(a, Formula::forall("x", I, Formula::neq(Individual::constant("0"), x()))));
}

TEST_CASE("formula parse and print round trip") {
  Theory th = Theory::pawr();
  th.add_predicate({"A", {}, true});
  th.add_predicate({"B", {}, false});
  test::FormulaGen gen(7, th);
  for (int i = 0; i < 200; ++i) {
    Formula a = gen.formula(4);
    Formula b = parse_formula(to_sexpr(a), {}, th);
    CHECK_MESSAGE(a == b, to_string(a));
  }
}

TEST_CASE("parse errors carry the syntax code") {
  try {
    parse("(forall (x) (eq x x))");
    FAIL("expected a syntax error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Syntax);
  }
}

TEST_CASE("theories") {
  CHECK(Theory::paw().has_axiom("ind"));
  CHECK_FALSE(Theory::paw().has_axiom("dc"));
  CHECK(Theory::caw().has_axiom("dc"));
  CHECK(Theory::pawr().has_axiom("rel0"));
  CHECK_FALSE(Theory::paw().has_axiom("rel0"));
  CHECK(Theory::paw().relativize().name() == "pawr");
  CHECK(Theory::caw().relativize().name() == "cawr");
}

TEST_CASE("axiom instances") {
  Theory th = Theory::paw();
  AxiomInstance refl{"refl", {I}, {}, {}, {}};
  CHECK(alpha_eq(th.instantiate(refl), Formula::forall("x", I, f_eq(x(), x()))));
  AxiomInstance snz{"snz", {}, {}, {}, {}};
  CHECK(alpha_eq(th.instantiate(snz),
                 Formula::forall("x", I, f_not(f_eq(S(x()), Individual::constant("0"))))));
  AxiomInstance bad{"refl", {}, {}, {}, {}};
  CHECK_THROWS_AS(th.instantiate(bad), Error);
  AxiomInstance unknown{"nope", {}, {}, {}, {}};
  try {
    th.instantiate(unknown);
    FAIL("expected unknown axiom");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownAxiom);
  }
}

TEST_CASE("induction instance") {
  Theory th = Theory::paw();
  AxiomInstance ind{"ind", {}, Formula::neq(x(), x()), {{"x", I}}, {}};
  Formula got = th.instantiate(ind);
  Formula a0 = Formula::neq(Individual::constant("0"), Individual::constant("0"));
  Formula step = Formula::forall("x", I, Formula::imp(Formula::neq(x(), x()), Formula::neq(S(x()), S(x()))));
  CHECK(alpha_eq(got, Formula::imp(a0, Formula::imp(step, Formula::forall("x", I, Formula::neq(x(), x()))))));
}

TEST_CASE("dc needs x:i and equal sorts for y and z") {
  Theory th = Theory::caw();
  AxiomInstance dc{"dc", {}, Formula::neq(x(), x()), {{"x", I}, {"y", I}, {"z", Sort::arrow(I, I)}}, {}};
  CHECK_THROWS_AS(th.instantiate(dc), Error);
}
