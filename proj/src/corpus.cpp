#include "kappa/corpus.hpp"

#include "kappa/derive.hpp"

namespace kappa {

namespace {

const Sort kI = Sort::iota();

Individual var(const std::string& x) { return Individual::var(x, kI); }
Individual zero() { return Individual::constant("0"); }
Individual succ(const Individual& t) { return Individual::app(Individual::constant("S"), t); }

// k[i->i,i] S : i -> i -> i
Individual k_succ() {
  return Individual::app(Individual::constant("k", {Sort::arrow(kI, kI), kI}), Individual::constant("S"));
}

// rec[i] 0 (k S) t
Individual add0(const Individual& t) {
  return Individual::apps(Individual::constant("rec", {kI}), {zero(), k_succ(), t});
}

Proof axiom(const std::string& name, std::vector<Sort> sorts) {
  AxiomInstance in;
  in.name = name;
  in.sorts = std::move(sorts);
  return Proof::ax(in);
}

Proof elims(Proof p, const std::vector<Individual>& ts) {
  for (const auto& t : ts) p = Proof::forall_elim(p, t);
  return p;
}

Workspace module(Theory th, const std::string& name, const Proof& p) {
  Workspace ws;
  ws.theory = std::move(th);
  Sequent goal;
  goal.concl = infer_conclusion(p, ws.theory);
  ws.proofs.push_back({name, goal, p, {}});
  return ws;
}

}  // namespace

Proof add0_proof() {
  EqDeriver eq({"x", "y", "h0", "ha", "hb", "he"});
  Individual x = var("x"), y = var("y");
  auto body = [](const Individual& t) {
    return f_not(Formula::forall("y", kI, f_not(f_eq(add0(t), var("y")))));
  };

  // rec 0 (k S) 0 = 0 refutes the hypothesis at 0.
  Proof base = Proof::imp_intro(
      "h0", Formula::forall("y", kI, f_not(f_eq(add0(zero()), var("y")))),
      Proof::imp_elim(Proof::forall_elim(Proof::id("h0"), zero()),
                      elims(axiom("def-recz", {kI}), {zero(), k_succ()})));

  // From add0 x = y: add0 (S x) = k S x (add0 x) = S (add0 x) = S y.
  Individual kx = Individual::app(k_succ(), x);
  Individual S = Individual::constant("S");
  Proof e1 = elims(axiom("def-recs", {kI}), {zero(), k_succ(), x});
  Proof e2 = elims(axiom("def-k", {Sort::arrow(kI, kI), kI}), {S, x});
  Proof e3 = eq.fun_cong(e2, kx, S, add0(x));
  Proof e4 = eq.cong(Proof::id("he"), add0(x), y, S);
  Individual mid = Individual::app(kx, add0(x));
  Proof e13 = eq.trans(e1, e3, add0(succ(x)), mid, succ(add0(x)));
  Proof e = eq.trans(e13, e4, add0(succ(x)), succ(add0(x)), succ(y));

  Proof inner = Proof::forall_intro(
      "y", kI,
      Proof::imp_intro("he", f_eq(add0(x), y),
                       Proof::imp_elim(Proof::forall_elim(Proof::id("hb"), succ(y)), e)));
  Proof step = Proof::forall_intro(
      "x", kI,
      Proof::imp_intro("ha", body(x),
                       Proof::imp_intro("hb", Formula::forall("y", kI, f_not(f_eq(add0(succ(x)), var("y")))),
                                        Proof::imp_elim(Proof::id("ha"), inner))));

  AxiomInstance ind;
  ind.name = "ind";
  ind.formula = body(x);
  ind.binders = {{"x", kI}};
  return Proof::imp_elim(Proof::imp_elim(Proof::ax(ind), base), step);
}

Proof sym_proof() {
  EqDeriver eq({"x", "y", "h"});
  Individual x = var("x"), y = var("y");
  return Proof::forall_intro(
      "x", kI,
      Proof::forall_intro("y", kI, Proof::imp_intro("h", f_eq(x, y), eq.sym(Proof::id("h"), x, y))));
}

Proof choice_proof() {
  EqDeriver eq({"x", "y", "z", "h"});
  Individual x = var("x"), y = var("y"), z = var("z");
  Formula a = f_eq(z, succ(y));
  Proof total = Proof::forall_intro(
      "x", kI,
      Proof::forall_intro(
          "y", kI,
          Proof::imp_intro("h", Formula::forall("z", kI, f_not(a)),
                           Proof::imp_elim(Proof::forall_elim(Proof::id("h"), succ(y)), eq.refl(succ(y))))));
  AxiomInstance dc;
  dc.name = "dc";
  dc.formula = a;
  dc.binders = {{"x", kI}, {"y", kI}, {"z", kI}};
  return Proof::imp_elim(Proof::ax(dc), total);
}

std::vector<std::pair<std::string, Workspace>> generated_corpus() {
  return {
      {"add0", module(Theory::paw(), "add0", add0_proof())},
      {"sym", module(Theory::paw(), "sym", sym_proof())},
      {"choice", module(Theory::caw(), "choice", choice_proof())},
  };
}

}  // namespace kappa
