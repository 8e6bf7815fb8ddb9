#include "kappa/extract.hpp"

#include "kappa/error.hpp"
#include "kappa/interp.hpp"
#include "kappa/relativize.hpp"
#include "kappa/syntax.hpp"

namespace kappa {

namespace {

bool is_not(const Formula& a) { return a.is(Formula::Kind::Imp) && a.rhs().is(Formula::Kind::Bot); }

[[noreturn]] void not_pi02(const Formula& a) {
  fail(ErrorCode::Shape, "not of the form forall x:i exists y:i (t = u): " + to_string(a));
}

}  // namespace

Pi02Goal read_pi02(const Formula& c) {
  using K = Formula::Kind;
  if (!c.is(K::Forall) || !c.sort().is_iota() || !is_not(c.body())) not_pi02(c);
  const Formula& inner = c.body().lhs();
  if (!inner.is(K::Forall) || !inner.sort().is_iota()) not_pi02(c);
  Pi02Goal g;
  g.x = c.var();
  g.y = inner.var();
  if (g.x == g.y) not_pi02(c);
  Formula m = inner.body();
  if (is_not(m) && is_not(m.lhs())) {
    m = m.lhs().lhs();
    g.double_negated = true;
  } else {
    g.double_negated = false;
  }
  if (!m.is(K::Atom) || m.pred() != kNeq) not_pi02(c);
  g.t = m.args()[0];
  g.u = m.args()[1];
  g.sigma = infer_sort(g.t);
  return g;
}

Proof prepare_goal(const Proof& p, const Theory& th) {
  Formula c = infer_conclusion(p, th);
  Pi02Goal g = read_pi02(c);
  if (!g.double_negated) return p;
  std::set<std::string> names;
  proof_names(p, names);
  all_var_names(c, names);
  std::string h = fresh_name("h", names);
  names.insert(h);
  std::string k = fresh_name("k", names);
  Sort i = Sort::iota();
  Individual xv = Individual::var(g.x, i), yv = Individual::var(g.y, i);
  Formula neq = Formula::neq(g.t, g.u);
  Formula all_y = Formula::forall(g.y, i, neq);
  Proof inner = Proof::forall_intro(
      g.y, i, Proof::imp_intro(k, f_not(neq), Proof::imp_elim(Proof::id(k), Proof::forall_elim(Proof::id(h), yv))));
  Proof out = Proof::forall_intro(
      g.x, i, Proof::imp_intro(h, all_y, Proof::imp_elim(Proof::forall_elim(p, xv), inner)));
  Formula want = Formula::forall(g.x, i, f_not(all_y));
  check_proof(out, th, Sequent{{}, want, {}});
  return out;
}

Extraction extract_program(const Proof& p, const Theory& th) {
  if (th.relativized()) fail(ErrorCode::Shape, "extraction starts from a proof in paw or caw");
  Extraction ex;
  ex.prepared = prepare_goal(p, th);
  Formula concl = infer_conclusion(ex.prepared, th);
  ex.goal = read_pi02(concl);
  if (!ex.goal.sigma) fail(ErrorCode::Internal, "equation without a sort");
  Sequent goal{{}, concl, {}};
  ex.relativized = rel_proof(ex.prepared, th, goal);
  Theory rth = th.relativize();
  Interpretation in = interp_proof(ex.relativized, rth, rel_sequent(goal));
  const LmType nat = LmType::nat();
  LmTerm cont = LmTerm::lam("w", nat, LmTerm::named(kKappa, LmTerm::var("w")));
  LmTerm body = LmTerm::mu(kKappa, nat, LmTerm::apps(in.term, {LmTerm::var("d"), cont}));
  ex.program = LmTerm::lam("d", nat, body);
  LmType t = typecheck(ex.program);
  if (t != LmType::arrow(nat, nat)) fail(ErrorCode::Internal, "extracted program has type " + to_string(t));
  return ex;
}

LmTerm individual_to_term(const Individual& t) {
  using T = LmTerm;
  switch (t.kind()) {
    case Individual::Kind::Var: fail(ErrorCode::Shape, "individual is not closed: " + t.name());
    case Individual::Kind::App: return T::app(individual_to_term(t.fun()), individual_to_term(t.arg()));
    case Individual::Kind::Const: break;
  }
  const std::string& c = t.name();
  if (c == "0") return T::num(0);
  if (c == "S") return T::succ();
  if (c == "k") {
    LmType a = rel_type(t.inst()[0]), b = rel_type(t.inst()[1]);
    return T::lam("x", a, T::lam("y", b, T::var("x")));
  }
  if (c == "s") {
    LmType a = rel_type(t.inst()[0]), b = rel_type(t.inst()[1]), r = rel_type(t.inst()[2]);
    LmType xt = LmType::arrow(a, LmType::arrow(b, r)), yt = LmType::arrow(a, b);
    return T::lam("x", xt,
                  T::lam("y", yt, T::lam("z", a, T::apps(T::var("x"), {T::var("z"), T::app(T::var("y"), T::var("z"))}))));
  }
  if (c == "rec") return mk_rec(rel_type(t.inst()[0]));
  fail(ErrorCode::MissingRealizer, "constant " + c + " has no system T reading");
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Unverifiable: return "unverifiable";
  }
  return "?";
}

namespace {

Individual numeral(std::uint64_t n) {
  Individual t = Individual::constant("0");
  for (; n > 0; --n) t = Individual::app(Individual::constant("S"), t);
  return t;
}

}  // namespace

WitnessCheck verify_witness(const Pi02Goal& goal, std::uint64_t n, std::uint64_t m, size_t fuel) {
  WitnessCheck out;
  if (!goal.sigma.is_iota()) {
    out.verdict = Verdict::Unverifiable;
    out.note = "equation at sort " + to_string(goal.sigma);
    return out;
  }
  IndSubst s{{goal.x, numeral(n)}, {goal.y, numeral(m)}};
  std::uint64_t sides[2];
  const Individual* ts[2] = {&goal.t, &goal.u};
  for (int i = 0; i < 2; ++i) {
    EvalResult r = eval_nat(individual_to_term(subst(*ts[i], s)), fuel);
    if (r.status != EvalResult::Status::Value || r.label) {
      out.verdict = Verdict::Fail;
      out.timed_out = r.status == EvalResult::Status::Timeout;
      out.note = out.timed_out ? "timeout while verifying" : "equation side did not evaluate to a numeral";
      return out;
    }
    sides[i] = r.value;
  }
  out.verdict = sides[0] == sides[1] ? Verdict::Pass : Verdict::Fail;
  if (out.verdict == Verdict::Fail)
    out.note = std::to_string(sides[0]) + " != " + std::to_string(sides[1]);
  return out;
}

bool ExtractionReport::all_pass() const {
  for (const auto& r : rows)
    if (r.verdict != Verdict::Pass) return false;
  return true;
}

ExtractionRow run_input(const Extraction& ex, std::uint64_t n, size_t fuel) {
  ExtractionRow row;
  row.input = n;
  EvalResult r = eval_nat(LmTerm::app(ex.program, LmTerm::num(n)), fuel);
  row.steps = r.steps;
  if (r.status == EvalResult::Status::Timeout) {
    row.timed_out = true;
    row.note = "timeout";
    return row;
  }
  if (r.status == EvalResult::Status::Stuck || r.label) {
    row.note = r.label ? "numeral escaped to label " + *r.label : "evaluation stuck";
    return row;
  }
  row.witness = r.value;
  WitnessCheck w = verify_witness(ex.goal, n, r.value, fuel);
  row.verdict = w.verdict;
  row.timed_out = w.timed_out;
  row.note = w.note;
  return row;
}

}  // namespace kappa
