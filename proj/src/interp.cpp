#include "kappa/interp.hpp"

#include "kappa/error.hpp"
#include "kappa/syntax.hpp"

namespace kappa {

LmType interp_type(const Formula& a, const Theory& th) {
  using K = Formula::Kind;
  switch (a.kind()) {
    case K::Bot: return LmType::bot();
    case K::Atom: {
      if (a.pred() == kNeq) return LmType::bot();
      if (a.pred() == kRel) return LmType::nat();
      auto it = th.predicates().find(a.pred());
      if (it == th.predicates().end()) fail(ErrorCode::UnknownIdentifier, "unknown predicate " + a.pred());
      if (!it->second.negative)
        fail(ErrorCode::MissingRealizer, "positive predicate " + a.pred() + " has no realizer type");
      return LmType::bot();
    }
    case K::Imp: return LmType::arrow(interp_type(a.lhs(), th), interp_type(a.rhs(), th));
    case K::And: return LmType::prod(interp_type(a.lhs(), th), interp_type(a.rhs(), th));
    case K::Forall: return interp_type(a.body(), th);
  }
  fail(ErrorCode::Internal, "bad formula");
}

LmType rel_type(const Sort& s) {
  if (s.is_base()) return LmType::nat();
  return LmType::arrow(rel_type(s.dom()), rel_type(s.cod()));
}

LmTerm rel_zero(const Sort& s) {
  if (s.is_base()) return LmTerm::num(0);
  return LmTerm::lam("x", rel_type(s.dom()), rel_zero(s.cod()));
}

namespace {

using T = LmTerm;

T v(const char* x) { return T::var(x); }

LmTerm identity_at(const LmType& t, const std::string& axiom) {
  if (!t.is(LmType::Kind::Arrow) || t.left() != t.right())
    fail(ErrorCode::Internal, "axiom " + axiom + " does not have an identity type: " + to_string(t));
  return T::lam("x", t.left(), v("x"));
}

// The dc realizer at |A| = |r_s| * |C|.
LmTerm dc_realizer(const AxiomInstance& in, const Theory& th) {
  const Sort& s = in.binders[1].second;
  LmType a = interp_type(in.formula, th);
  LmType rs = rel_type(s);
  LmType la = list_type(a);
  LmType h1 = LmType::arrow(LmType::nat(), LmType::arrow(rs, LmType::arrow(LmType::arrow(a, LmType::bot()), a)));
  LmType h2 = LmType::arrow(LmType::arrow(LmType::nat(), a), LmType::bot());
  T len = T::proj(1, v("s"));
  T last = T::apps(T::ifz(rs), {len, rel_zero(s),
                                T::proj(1, T::app(T::proj(2, v("s")), T::app(T::pred(), len)))});
  T d = T::lam("s", la, T::apps(v("a"), {len, last}));
  T body = T::apps(mk_barrec(a, LmType::bot()), {d, v("b"), mk_nil(a)});
  return T::lam("a", h1, T::lam("b", h2, body));
}

}  // namespace

LmTerm axiom_realizer(const AxiomInstance& in, const Theory& th) {
  const std::string& n = in.name;
  if (th.user_axioms().count(n))
    fail(ErrorCode::MissingRealizer, "user axiom " + n + " has no realizer");
  Formula f = th.instantiate(in);
  LmType t = interp_type(f, th);
  if (n == "refl" || n == "leib" || n.rfind("def-", 0) == 0) return identity_at(t, n);
  if (n == "snz") return T::lam("x", t.left(), mk_omega(t.right()));
  if (n == "rel0") return T::num(0);
  if (n == "rels") return T::succ();
  if (n == "rel-k") {
    LmType a = rel_type(in.sorts[0]), b = rel_type(in.sorts[1]);
    return T::lam("x", a, T::lam("y", b, v("x")));
  }
  if (n == "rel-s") {
    LmType a = rel_type(in.sorts[0]), b = rel_type(in.sorts[1]), c = rel_type(in.sorts[2]);
    LmType xt = LmType::arrow(a, LmType::arrow(b, c)), yt = LmType::arrow(a, b);
    return T::lam("x", xt, T::lam("y", yt, T::lam("z", a, T::apps(v("x"), {v("z"), T::app(v("y"), v("z"))}))));
  }
  if (n == "rel-rec") return mk_rec(rel_type(in.sorts[0]));
  if (!th.relativized() && (n == "ind" || n == "dc"))
    fail(ErrorCode::MissingRealizer, "axiom " + n + " is only realized in the relativized theory; relativize first");
  if (n == "ind") return mk_rec(interp_type(in.formula, th));
  if (n == "dc") return dc_realizer(in, th);
  fail(ErrorCode::UnknownAxiom, "no realizer for axiom " + n);
}

LmTerm interp_term(const Proof& p, const Theory& th) {
  using R = Proof::Rule;
  switch (p.rule()) {
    case R::Id: return T::var(p.name());
    case R::Ax: return axiom_realizer(p.axiom(), th);
    case R::ImpIntro: return T::lam(p.name(), interp_type(p.formula(), th), interp_term(p.left(), th));
    case R::ImpElim: return T::app(interp_term(p.left(), th), interp_term(p.right(), th));
    case R::AndIntro: return T::pair(interp_term(p.left(), th), interp_term(p.right(), th));
    case R::AndElim: return T::proj(p.index(), interp_term(p.left(), th));
    case R::ForallIntro:
    case R::ForallElim: return interp_term(p.left(), th);
    case R::BotIntro: return T::named(p.name(), interp_term(p.left(), th));
    case R::BotElim: return T::mu(p.name(), interp_type(p.formula(), th), interp_term(p.left(), th));
  }
  fail(ErrorCode::Internal, "bad proof");
}

Interpretation interp_proof(const Proof& p, const Theory& th, const Sequent& goal) {
  if (goal.delta.count(kKappa)) fail(ErrorCode::Shape, std::string("the label ") + kKappa + " is reserved");
  std::set<std::string> names;
  proof_names(p, names);
  if (names.count(kKappa)) fail(ErrorCode::Shape, std::string("the name ") + kKappa + " is reserved");
  Sequent s = check_proof(p, th, goal);
  Interpretation out;
  out.term = interp_term(p, th);
  for (const auto& [h, a] : s.gamma) out.judgment.lctx[h] = interp_type(a, th);
  for (const auto& [l, a] : s.delta) out.judgment.mctx[l] = interp_type(a, th);
  out.judgment.mctx[kKappa] = LmType::nat();
  out.judgment.term = out.term;
  out.judgment.type = interp_type(s.concl, th);
  return out;
}

}  // namespace kappa
