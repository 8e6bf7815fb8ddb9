#include "kappa/derive.hpp"

#include "kappa/error.hpp"

namespace kappa {

Proof EqDeriver::refl(const Individual& t) {
  AxiomInstance in;
  in.name = "refl";
  in.sorts = {infer_sort(t)};
  return Proof::forall_elim(Proof::ax(in), t);
}

std::string EqDeriver::fresh_var(const std::string& base, const std::vector<const Individual*>& avoid) {
  for (const Individual* t : avoid)
    for (const auto& [x, _] : free_vars(*t)) pool_.used.insert(x);
  return pool_.fresh(base);
}

Proof EqDeriver::transport(const Proof& e, const Individual& a, const Individual& b, const std::string& w,
                           const Formula& P, const Proof& p) {
  if (!is_negative(P)) fail(ErrorCode::Polarity, "transport needs a negative formula");
  Sort s = infer_sort(a);
  VarSet fv = free_vars(P);
  fv.erase(w);
  AxiomInstance leib;
  leib.name = "leib";
  leib.formula = f_not(P);
  leib.binders = {{w, s}};
  for (const auto& [x, xs] : fv) leib.params.push_back({x, xs});
  Proof ax = Proof::ax(leib);
  for (const auto& [x, xs] : fv) ax = Proof::forall_elim(ax, Individual::var(x, xs));
  ax = Proof::forall_elim(Proof::forall_elim(ax, a), b);
  Formula pa = subst1(P, w, a), pb = subst1(P, w, b);
  std::string alpha = pool_.fresh("c"), k = pool_.fresh("k"), q = pool_.fresh("q");
  Proof nn = Proof::imp_intro(k, f_not(pa), Proof::imp_elim(Proof::id(k), p));
  Proof np = Proof::imp_intro(q, pb, Proof::bot_intro(alpha, Proof::id(q)));
  Proof neq = Proof::imp_elim(Proof::imp_elim(ax, nn), np);
  return Proof::bot_elim(alpha, pb, Proof::imp_elim(e, neq));
}

Proof EqDeriver::sym(const Proof& e, const Individual& a, const Individual& b) {
  std::string w = fresh_var("w", {&a, &b});
  Individual wv = Individual::var(w, infer_sort(a));
  return transport(e, a, b, w, f_eq(wv, a), refl(a));
}

Proof EqDeriver::trans(const Proof& e1, const Proof& e2, const Individual& a, const Individual& b,
                       const Individual& c) {
  std::string w = fresh_var("w", {&a, &b, &c});
  Individual wv = Individual::var(w, infer_sort(a));
  return transport(e2, b, c, w, f_eq(a, wv), e1);
}

Proof EqDeriver::cong(const Proof& e, const Individual& a, const Individual& b, const Individual& f) {
  std::string w = fresh_var("w", {&a, &b, &f});
  Individual wv = Individual::var(w, infer_sort(a));
  Individual fa = Individual::app(f, a);
  return transport(e, a, b, w, f_eq(fa, Individual::app(f, wv)), refl(fa));
}

Proof EqDeriver::fun_cong(const Proof& e, const Individual& f, const Individual& g, const Individual& c) {
  std::string w = fresh_var("w", {&f, &g, &c});
  Individual wv = Individual::var(w, infer_sort(f));
  Individual fc = Individual::app(f, c);
  return transport(e, f, g, w, f_eq(fc, Individual::app(wv, c)), refl(fc));
}

}  // namespace kappa
