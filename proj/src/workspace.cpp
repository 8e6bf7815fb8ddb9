#include "kappa/workspace.hpp"

#include <fstream>
#include <sstream>

#include "kappa/error.hpp"

namespace kappa {

const ProofEntry& Workspace::proof(const std::string& name) const {
  for (const auto& p : proofs)
    if (p.name == name) return p;
  fail(ErrorCode::UnknownIdentifier, "no proof named " + name);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

[[noreturn]] void bad(const SExpr& e, const std::string& msg) { fail(ErrorCode::Syntax, e.where() + ": " + msg); }

const std::string& name_at(const SExpr& e, size_t i, const char* what) {
  if (i >= e.items.size() || !e.items[i].is_atom) bad(e, std::string("expected ") + what);
  return e.items[i].atom;
}

std::vector<std::pair<std::string, const SExpr*>> named_items(const SExpr& e, size_t from) {
  std::vector<std::pair<std::string, const SExpr*>> out;
  for (size_t i = from; i < e.items.size(); ++i) {
    const SExpr& it = e.items[i];
    if (it.is_atom || it.items.size() != 2 || !it.items[0].is_atom) bad(it, "expected (name value)");
    out.push_back({it.items[0].atom, &it.items[1]});
  }
  return out;
}

Sequent parse_goal(const SExpr& e, const Workspace& ws) {
  if (e.head_is("goal")) {
    if (e.items.size() != 2) bad(e, "goal takes one formula");
    return Sequent{{}, parse_formula(e.items[1], ws.vars, ws.theory), {}};
  }
  if (!e.head_is("sequent")) bad(e, "expected (goal A) or (sequent ...)");
  Sequent s;
  for (size_t i = 1; i < e.items.size(); ++i) {
    const SExpr& it = e.items[i];
    if (it.head_is("hyps") || it.head_is("labels")) {
      Context& c = it.head_is("hyps") ? s.gamma : s.delta;
      for (const auto& [n, f] : named_items(it, 1)) {
        if (c.count(n)) bad(it, "duplicate name " + n);
        c[n] = parse_formula(*f, ws.vars, ws.theory);
      }
    } else {
      if (s.concl) bad(it, "sequent has more than one conclusion");
      s.concl = parse_formula(it, ws.vars, ws.theory);
    }
  }
  if (!s.concl) bad(e, "sequent without a conclusion");
  return s;
}

}  // namespace

Workspace parse_module(const std::string& text, const std::optional<std::string>& theory) {
  std::vector<SExpr> forms = parse_sexprs(text);
  Workspace ws;
  std::string th = theory.value_or("");
  if (th.empty())
    for (const auto& f : forms)
      if (f.head_is("theory")) th = name_at(f, 1, "a theory name");
  ws.theory = Theory::by_name(th.empty() ? "paw" : th);
  std::set<std::string> seen;
  for (const auto& f : forms) {
    if (f.is_atom || f.items.empty() || !f.items[0].is_atom) bad(f, "expected a declaration");
    const std::string& h = f.items[0].atom;
    if (h == "theory") {
      if (f.items.size() != 2) bad(f, "theory takes one name");
    } else if (h == "vars") {
      for (size_t i = 1; i < f.items.size(); ++i) {
        const SExpr& b = f.items[i];
        if (b.is_atom || b.items.size() != 2 || !b.items[0].is_atom) bad(b, "malformed variable, expected (x sort)");
        ws.vars[b.items[0].atom] = parse_sort(b.items[1]);
      }
    } else if (h == "constant") {
      if (f.items.size() != 3) bad(f, "constant takes a name and a sort");
      ws.theory.add_constant(name_at(f, 1, "a constant name"), parse_sort(f.items[2]));
    } else if (h == "predicate") {
      if (f.items.size() != 4 || f.items[2].is_atom) bad(f, "predicate takes a name, (sorts) and a polarity");
      Predicate p;
      p.name = name_at(f, 1, "a predicate name");
      for (const auto& s : f.items[2].items) p.args.push_back(parse_sort(s));
      const std::string& pol = name_at(f, 3, "negative or positive");
      if (pol != "negative" && pol != "positive") bad(f.items[3], "polarity must be negative or positive");
      p.negative = pol == "negative";
      ws.theory.add_predicate(p);
    } else if (h == "axiom") {
      if (f.items.size() != 3) bad(f, "axiom takes a name and a formula");
      ws.theory.add_axiom(name_at(f, 1, "an axiom name"), parse_formula(f.items[2], {}, ws.theory));
    } else if (h == "proof") {
      if (f.items.size() != 4) bad(f, "proof takes a name, a goal and a proof");
      ProofEntry pe;
      pe.name = name_at(f, 1, "a proof name");
      if (!seen.insert(pe.name).second) bad(f, "duplicate proof name " + pe.name);
      pe.goal = parse_goal(f.items[2], ws);
      Scope scope = ws.vars;
      pe.proof = parse_proof(f.items[3], scope, ws.theory);
      pe.pos = f.pos;
      ws.proofs.push_back(std::move(pe));
    } else {
      bad(f, "unknown declaration " + h);
    }
  }
  return ws;
}

Workspace parse_file(const std::string& path, const std::optional<std::string>& theory) {
  return parse_module(read_text(path), theory);
}

std::string module_to_string(const Workspace& ws) {
  std::string out = "(theory " + ws.theory.name() + ")\n";
  if (!ws.vars.empty()) {
    std::vector<SExpr> items{sx_atom("vars")};
    for (const auto& [x, s] : ws.vars) items.push_back(sx_list({sx_atom(x), to_sexpr(s)}));
    out += to_string(sx_list(std::move(items))) + "\n";
  }
  for (const auto& [c, s] : ws.theory.constants())
    out += "(constant " + c + " " + to_string(s) + ")\n";
  for (const auto& [n, p] : ws.theory.predicates()) {
    std::vector<SExpr> args;
    for (const auto& s : p.args) args.push_back(to_sexpr(s));
    out += "(predicate " + n + " " + to_string(sx_list(std::move(args))) + " " +
           (p.negative ? "negative" : "positive") + ")\n";
  }
  for (const auto& [n, f] : ws.theory.user_axioms())
    out += pretty(sx_list({sx_atom("axiom"), sx_atom(n), to_sexpr(f)})) + "\n";
  for (const auto& pe : ws.proofs) {
    SExpr goal;
    if (pe.goal.gamma.empty() && pe.goal.delta.empty()) {
      goal = sx_list({sx_atom("goal"), to_sexpr(pe.goal.concl)});
    } else {
      std::vector<SExpr> items{sx_atom("sequent")};
      std::vector<SExpr> hyps{sx_atom("hyps")}, labels{sx_atom("labels")};
      for (const auto& [h, f] : pe.goal.gamma) hyps.push_back(sx_list({sx_atom(h), to_sexpr(f)}));
      for (const auto& [l, f] : pe.goal.delta) labels.push_back(sx_list({sx_atom(l), to_sexpr(f)}));
      items.push_back(sx_list(std::move(hyps)));
      items.push_back(to_sexpr(pe.goal.concl));
      items.push_back(sx_list(std::move(labels)));
      goal = sx_list(std::move(items));
    }
    out += "\n" + pretty(sx_list({sx_atom("proof"), sx_atom(pe.name), goal, to_sexpr(pe.proof)})) + "\n";
  }
  return out;
}

bool is_term_text(const std::string& text) {
  for (const auto& f : parse_sexprs(text))
    if (f.head_is("term")) return true;
  return false;
}

TermFile parse_term_module(const std::string& text) {
  TermFile tf;
  bool have = false;
  for (const auto& f : parse_sexprs(text)) {
    if (f.head_is("term")) {
      if (have) bad(f, "more than one term");
      if (f.items.size() != 2) bad(f, "term takes one term");
      tf.term = parse_lm_term(f.items[1]);
      have = true;
    } else if (f.head_is("vars") || f.head_is("labels")) {
      LmCtx& c = f.head_is("vars") ? tf.lctx : tf.mctx;
      for (const auto& [n, t] : named_items(f, 1)) c[n] = parse_lm_type(*t);
    } else {
      bad(f, "expected (term M), (vars ...) or (labels ...)");
    }
  }
  if (!have) fail(ErrorCode::Syntax, "no (term M) form");
  return tf;
}

TermFile parse_term_file(const std::string& path) { return parse_term_module(read_text(path)); }

}  // namespace kappa
