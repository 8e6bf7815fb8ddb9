// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "kappa/cli.hpp"
#include "kappa/cps.hpp"
#include "kappa/error.hpp"
#include "kappa/extract.hpp"
#include "kappa/gen.hpp"
#include "kappa/interp.hpp"
#include "kappa/parallel.hpp"
#include "kappa/proof.hpp"
#include "kappa/relativize.hpp"
#include "kappa/workspace.hpp"
#include "support.hpp"

using namespace kappa;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

const LmType nat = LmType::nat();
const LmType bot = LmType::bot();

LmTerm num(std::uint64_t n) { return LmTerm::num(n); }

LmTerm app(LmTerm f, std::initializer_list<LmTerm> xs) {
  for (const auto& x : xs) f = LmTerm::app(f, x);
  return f;
}

std::optional<std::uint64_t> value(const LmTerm& m, size_t fuel = 100000) {
  EvalResult r = eval_nat(m, fuel);
  if (r.status != EvalResult::Status::Value || r.label) return std::nullopt;
  return r.value;
}

Outcome derivability() {
  Outcome o;
  double worst = 0;
  for (const char* f : {"exfalso.proof", "dne.proof", "peirce.proof"}) {
    Workspace ws = parse_file(test::corpus_path(f));
    auto t0 = Clock::now();
    Sequent s = check_proof(ws.proofs[0].proof, ws.theory, ws.proofs[0].goal);
    double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    if (!alpha_eq(s.concl, ws.proofs[0].goal.concl) || dt >= 1.0) o.ok = false;
  }
  Workspace pos = parse_file(test::corpus_path("positive.proof"));
  bool rejected = false;
  try {
    check_proof(pos.proofs[0].proof, pos.theory, pos.proofs[0].goal);
  } catch (const Error& e) {
    rejected = e.code() == ErrorCode::Polarity;
  }
  o.ok = o.ok && rejected;
  o.detail = "slowest " + fmt(worst) + ", dne on r(t) " + (rejected ? "rejected" : "accepted");
  return o;
}

Outcome subject_reduction() {
  TermGen gen(2024);
  int violations = 0, steps = 0;
  for (int i = 0; i < 200; ++i) {
    LmTerm m = gen.term();
    LmType t = typecheck(m);
    for (int k = 0; k < 500; ++k) {
      auto next = whnf_step(m);
      if (!next) break;
      m = *next;
      ++steps;
      try {
        if (typecheck(m) != t) ++violations;
      } catch (const Error&) {
        ++violations;
      }
    }
  }
  return {violations == 0, std::to_string(steps) + " steps, " + std::to_string(violations) + " violations"};
}

Outcome recursor_laws() {
  Outcome o;
  LmTerm rec = mk_rec(nat);
  auto pool = test::rec_pool();
  int checks = 0;
  for (const auto& c : pool) {
    auto zero = value(app(rec, {c.a, c.b, num(0)}));
    if (!zero || zero != value(c.a)) o.ok = false;
    for (std::uint64_t n = 0; n <= 20; ++n, ++checks) {
      auto lhs = value(app(rec, {c.a, c.b, num(n + 1)}));
      auto rhs = value(app(c.b, {num(n), app(rec, {c.a, c.b, num(n)})}));
      if (!lhs || lhs != rhs || *lhs != c.oracle(n + 1)) o.ok = false;
    }
  }
  o.ok = o.ok && pool.size() == 10;
  o.detail = std::to_string(pool.size()) + " pairs, " + std::to_string(checks) + " successor instances";
  return o;
}

Outcome list_laws() {
  Outcome o;
  LmTerm len = mk_len(nat), ind = mk_ind(nat), ext = mk_extend(nat), cat = mk_concat(nat);
  if (value(app(len, {mk_nil(nat)})) != 0u) o.ok = false;
  for (size_t n = 0; n <= 5; ++n) {
    std::vector<std::uint64_t> xs;
    for (size_t i = 0; i < n; ++i) xs.push_back(10 + 3 * i);
    LmTerm s = test::numeral_list(xs);
    if (value(app(len, {s})) != n) o.ok = false;
    LmTerm sb = app(ext, {s, num(99)});
    if (value(app(len, {sb})) != n + 1 || value(app(ind, {sb, num(n)})) != 99u) o.ok = false;
    for (size_t i = 0; i < n; ++i)
      if (value(app(ind, {s, num(i)})) != xs[i] || value(app(ind, {sb, num(i)})) != xs[i]) o.ok = false;
    for (size_t m = 0; m <= 7; ++m)
      if (value(app(cat, {s, num(42), num(m)})) != (m < n ? xs[m] : 42u)) o.ok = false;
  }
  // d constant 42, e = lam f. [kappa] (f 0)
  LmType lst = list_type(nat);
  LmTerm d = LmTerm::lam("s", lst, LmTerm::lam("f", LmType::arrow(nat, bot), num(42)));
  LmTerm e = LmTerm::lam("f", LmType::arrow(nat, nat), LmTerm::named("kappa", LmTerm::app(LmTerm::var("f"), num(0))));
  EvalResult r = eval_nat(LmTerm::mu("kappa", nat, app(mk_barrec(nat, bot), {d, e, mk_nil(nat)})), 10000);
  bool bar = r.status == EvalResult::Status::Value && !r.label && r.value == 42;
  o.ok = o.ok && bar;
  o.detail = "lists up to length 5; barrec gives " +
             (r.status == EvalResult::Status::Value ? std::to_string(r.value) : std::string("no value")) + " in " +
             std::to_string(r.steps) + " steps";
  return o;
}

Outcome interp_typing() {
  int pass = 0, total = 0;
  for (const auto& cp : test::corpus_proofs()) {
    ++total;
    try {
      Proof r = rel_proof(cp.entry.proof, cp.theory, cp.entry.goal);
      Theory rt = cp.theory.relativize();
      Sequent goal = rel_sequent(cp.entry.goal);
      Interpretation in = interp_proof(r, rt, goal);
      if (in.judgment.mctx.at(kKappa) == nat && typecheck(in.term, in.judgment.lctx, in.judgment.mctx) == in.judgment.type &&
          in.judgment.type == interp_type(goal.concl, rt))
        ++pass;
    } catch (const Error&) {
    }
  }
  return {pass == total && total > 0, std::to_string(pass) + "/" + std::to_string(total) + " corpus proofs"};
}

Outcome relativization() {
  int pass = 0, total = 0;
  for (const auto& cp : test::corpus_proofs()) {
    ++total;
    try {
      Proof r = rel_proof(cp.entry.proof, cp.theory, cp.entry.goal);
      Sequent s = check_proof(r, cp.theory.relativize(), rel_sequent(cp.entry.goal));
      if (alpha_eq(s.concl, rel_formula(cp.entry.goal.concl))) ++pass;
    } catch (const Error&) {
    }
  }
  return {pass == total && total > 0, std::to_string(pass) + "/" + std::to_string(total) + " corpus proofs"};
}

Outcome cps_transport() {
  auto t0 = Clock::now();
  int typed = 0, total = 0;
  auto check = [&](const LmTerm& m, const LmCtx& l, const LmCtx& mc, const LmType& t) {
    ++total;
    try {
      if (typecheck_lam(cps_term(m, l, mc), cps_ctx(l, mc)) == LamType::arrow(cps_type(t))) ++typed;
    } catch (const Error&) {
    }
  };
  for (const auto& cp : test::corpus_proofs()) {
    Proof r = rel_proof(cp.entry.proof, cp.theory, cp.entry.goal);
    Interpretation in = interp_proof(r, cp.theory.relativize(), rel_sequent(cp.entry.goal));
    check(in.term, in.judgment.lctx, in.judgment.mctx, in.judgment.type);
  }
  TermGen gen(31337);
  for (int i = 0; i < 200; ++i) {
    LmTerm m = gen.term();
    check(m, {}, {}, typecheck(m));
  }
  std::vector<std::pair<LmType, LmType>> types{
      {nat, nat}, {bot, nat}, {LmType::arrow(nat, nat), bot}, {LmType::prod(nat, bot), LmType::arrow(bot, nat)}};
  TermGen tg(5);
  for (int i = 0; i < 6; ++i) types.push_back({tg.type(2), tg.type(2)});
  int eq = 0, eqs = 0;
  for (const auto& [a, b] : types)
    for (const auto& e : test::nine_equations(a, b)) {
      ++eqs;
      try {
        LamCtx ctx = cps_ctx(e.lctx, e.mctx);
        if (lam_equal(cps_term(e.lhs, e.lctx, e.mctx), cps_term(e.rhs, e.lctx, e.mctx), ctx)) ++eq;
      } catch (const Error&) {
      }
    }
  double dt = seconds_since(t0);
  return {typed == total && eq == eqs && dt < 30.0, std::to_string(typed) + "/" + std::to_string(total) + " typed, " +
                                                      std::to_string(eq) + "/" + std::to_string(eqs) +
                                                      " equation instances, " + fmt(dt)};
}

Outcome extraction() {
  Outcome o;
  size_t worst = 0;
  for (const auto& f : test::pi02_files()) {
    Workspace ws = parse_file(test::corpus_path(f));
    Extraction ex = extract_program(ws.proofs[0].proof, ws.theory);
    if (typecheck(ex.program) != LmType::arrow(nat, nat)) o.ok = false;
    ExtractionReport rep = run_inputs_parallel(ex, 0, 10, 100000);
    if (rep.rows.size() != 11 || !rep.all_pass()) o.ok = false;
    for (const auto& row : rep.rows) worst = std::max(worst, row.steps);
  }
  o.ok = o.ok && worst < 100000;
  o.detail = "succ, ident, add0 on 0..10, at most " + std::to_string(worst) + " steps";
  return o;
}

Outcome divergence() {
  Outcome o;
  int runs = 0;
  for (const char* fuel : {"0", "1", "10", "1000", "100000"}) {
    std::ostringstream out, err;
    int status = run_cli({"eval", test::corpus_path("omega.term"), "--fuel", fuel}, out, err);
    ++runs;
    if (status != 2) o.ok = false;
  }
  o.detail = "omega exits 2 at " + std::to_string(runs) + " fuel settings";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"derivability", derivability},   {"subject reduction", subject_reduction},
      {"recursor laws", recursor_laws}, {"list and bar recursion laws", list_laws},
      {"interpretation typing", interp_typing}, {"relativization soundness", relativization},
      {"cps transport", cps_transport}, {"extraction", extraction},
      {"divergence", divergence},
  };
  int failed = 0, i = 0;
  for (const auto& [name, run] : criteria) {
    ++i;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failed;
    std::printf("%s %d %s: %s\n", o.ok ? "PASS" : "FAIL", i, name, o.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
