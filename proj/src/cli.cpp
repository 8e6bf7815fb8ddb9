#include "kappa/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>
#include <optional>

#include "kappa/cps.hpp"
#include "kappa/error.hpp"
#include "kappa/extract.hpp"
#include "kappa/interp.hpp"
#include "kappa/parallel.hpp"
#include "kappa/relativize.hpp"
#include "kappa/workspace.hpp"

namespace kappa {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string command;
  std::string file;
  std::string theory;
  std::string proof;
  std::string inputs = "0..10";
  std::string format = "text";
  size_t fuel = kDefaultFuel;
  bool serial = false;

  bool structured() const { return format == "structured"; }
};

size_t default_fuel() {
  if (const char* env = std::getenv("KAPPA_FUEL")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      fail(ErrorCode::Syntax, std::string("KAPPA_FUEL is not a number: ") + env);
    }
  }
  return kDefaultFuel;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      std::uint64_t n = std::stoull(s);
      return {n, n};
    }
    std::uint64_t a = std::stoull(s.substr(0, dots)), b = std::stoull(s.substr(dots + 2));
    if (b < a) fail(ErrorCode::Syntax, "empty input range " + s);
    return {a, b};
  } catch (const std::invalid_argument&) {
    fail(ErrorCode::Syntax, "malformed input range " + s + ", expected a..b");
  } catch (const std::out_of_range&) {
    fail(ErrorCode::Syntax, "input range out of bounds: " + s);
  }
}

std::vector<const ProofEntry*> selected(const Workspace& ws, const Options& o) {
  std::vector<const ProofEntry*> out;
  if (!o.proof.empty()) {
    out.push_back(&ws.proof(o.proof));
    return out;
  }
  for (const auto& p : ws.proofs) out.push_back(&p);
  if (out.empty()) fail(ErrorCode::Syntax, "the file contains no proofs");
  return out;
}

std::optional<std::string> theory_flag(const Options& o) {
  if (o.theory.empty()) return std::nullopt;
  return o.theory;
}

Json ctx_json(const LmCtx& c) {
  Json j = Json::object();
  for (const auto& [x, a] : c) j[x] = to_string(a);
  return j;
}

std::string judgment_line(const Judgment& j) {
  std::string s;
  for (const auto& [x, a] : j.lctx) s += (s.empty() ? "" : ", ") + x + ":" + to_string(a);
  s += " |- " + to_string(j.type) + " |";
  bool first = true;
  for (const auto& [x, a] : j.mctx) {
    s += (first ? " " : ", ") + x + ":" + to_string(a);
    first = false;
  }
  return s;
}

// ---- commands ----

int cmd_check(const Options& o, std::ostream& out) {
  Workspace ws = parse_file(o.file, theory_flag(o));
  auto results = o.serial ? check_all_serial(ws) : check_all_parallel(ws);
  if (!o.proof.empty()) {
    ws.proof(o.proof);
    std::erase_if(results, [&](const CheckOutcome& r) { return r.name != o.proof; });
  }
  int status = 0;
  Json rows = Json::array();
  for (const auto& r : results) {
    if (!r.ok) status = std::max(status, exit_status(r.code));
    if (o.structured()) {
      Json j{{"name", r.name}, {"ok", r.ok}};
      if (r.ok)
        j["conclusion"] = to_string(r.concl);
      else
        j["error"] = {{"code", error_code_name(r.code)}, {"message", r.message}};
      rows.push_back(j);
    } else if (r.ok) {
      out << r.name << ": ok  " << to_string(r.concl) << "\n";
    } else {
      out << r.name << ": error[" << error_code_name(r.code) << "] " << r.message << "\n";
    }
  }
  if (o.structured()) out << Json{{"command", "check"}, {"theory", ws.theory.name()}, {"proofs", rows}}.dump(2) << "\n";
  return status;
}

int cmd_relativize(const Options& o, std::ostream& out) {
  Workspace ws = parse_file(o.file, theory_flag(o));
  if (ws.theory.relativized()) fail(ErrorCode::Shape, "theory " + ws.theory.name() + " is already relativized");
  Workspace rel;
  rel.theory = ws.theory.relativize();
  for (const ProofEntry* pe : selected(ws, o)) {
    ProofEntry r = *pe;
    r.proof = rel_proof(pe->proof, ws.theory, pe->goal);
    r.goal = rel_sequent(pe->goal);
    rel.proofs.push_back(r);
  }
  std::string text = module_to_string(rel);
  if (o.structured())
    out << Json{{"command", "relativize"}, {"theory", rel.theory.name()}, {"module", text}}.dump(2) << "\n";
  else
    out << text;
  return 0;
}

Interpretation interpret_entry(const Workspace& ws, const ProofEntry& pe) {
  if (ws.theory.relativized()) return interp_proof(pe.proof, ws.theory, pe.goal);
  Proof rp = rel_proof(pe.proof, ws.theory, pe.goal);
  return interp_proof(rp, ws.theory.relativize(), rel_sequent(pe.goal));
}

int cmd_interp(const Options& o, std::ostream& out) {
  Workspace ws = parse_file(o.file, theory_flag(o));
  Json rows = Json::array();
  for (const ProofEntry* pe : selected(ws, o)) {
    Interpretation in = interpret_entry(ws, *pe);
    typecheck(in.term, in.judgment.lctx, in.judgment.mctx);
    if (o.structured()) {
      rows.push_back({{"name", pe->name},
                      {"term", to_string(in.term)},
                      {"type", to_string(in.judgment.type)},
                      {"lctx", ctx_json(in.judgment.lctx)},
                      {"mctx", ctx_json(in.judgment.mctx)}});
    } else {
      out << "; " << pe->name << "\n" << pretty(to_sexpr(in.term)) << "\n; " << judgment_line(in.judgment) << "\n";
    }
  }
  if (o.structured()) out << Json{{"command", "interp"}, {"proofs", rows}}.dump(2) << "\n";
  return 0;
}

int cmd_eval(const Options& o, std::ostream& out) {
  TermFile tf = parse_term_file(o.file);
  LmType t = typecheck(tf.term, tf.lctx, tf.mctx);
  EvalResult r = eval_nat(tf.term, o.fuel);
  const char* status = r.status == EvalResult::Status::Value     ? "value"
                       : r.status == EvalResult::Status::Timeout ? "timeout"
                                                                 : "normal";
  if (o.structured()) {
    Json j{{"command", "eval"}, {"type", to_string(t)}, {"status", status}, {"steps", r.steps}};
    if (r.status == EvalResult::Status::Value) {
      j["value"] = r.value;
      if (r.label) j["label"] = *r.label;
    } else if (r.status == EvalResult::Status::Stuck) {
      j["term"] = to_string(r.last);
    }
    out << j.dump(2) << "\n";
  } else if (r.status == EvalResult::Status::Value) {
    out << "value " << r.value;
    if (r.label) out << " thrown to " << *r.label;
    out << "  (" << r.steps << " steps)\n";
  } else if (r.status == EvalResult::Status::Timeout) {
    out << "timeout after " << r.steps << " steps\n";
  } else {
    out << "normal form after " << r.steps << " steps: " << pretty(to_sexpr(r.last)) << "\n";
  }
  return r.status == EvalResult::Status::Timeout ? 2 : 0;
}

int cmd_cps(const Options& o, std::ostream& out) {
  std::string text = read_text(o.file);
  std::vector<std::tuple<std::string, LmTerm, LmCtx, LmCtx>> items;
  if (is_term_text(text)) {
    TermFile tf = parse_term_module(text);
    items.emplace_back("term", tf.term, tf.lctx, tf.mctx);
  } else {
    Workspace ws = parse_module(text, theory_flag(o));
    for (const ProofEntry* pe : selected(ws, o)) {
      Interpretation in = interpret_entry(ws, *pe);
      items.emplace_back(pe->name, in.term, in.judgment.lctx, in.judgment.mctx);
    }
  }
  Json rows = Json::array();
  for (const auto& [name, m, l, mc] : items) {
    LamTerm c = cps_term(m, l, mc);
    LamType t = typecheck_lam(c, cps_ctx(l, mc));
    if (o.structured())
      rows.push_back({{"name", name}, {"term", to_string(c)}, {"type", to_string(t)}});
    else
      out << "; " << name << "\n" << pretty(to_sexpr(c)) << "\n; type " << to_string(t) << "\n";
  }
  if (o.structured()) out << Json{{"command", "cps"}, {"terms", rows}}.dump(2) << "\n";
  return 0;
}

int cmd_extract(const Options& o, std::ostream& out) {
  Workspace ws = parse_file(o.file, theory_flag(o));
  auto [lo, hi] = parse_range(o.inputs);
  int status = 0;
  Json reports = Json::array();
  for (const ProofEntry* pe : selected(ws, o)) {
    if (!pe->goal.gamma.empty() || !pe->goal.delta.empty())
      fail(ErrorCode::Shape, "proof " + pe->name + " must have a closed goal to be extracted");
    check_proof(pe->proof, ws.theory, pe->goal);
    Extraction ex = extract_program(pe->proof, ws.theory);
    ExtractionReport rep = o.serial ? run_inputs_serial(ex, lo, hi, o.fuel) : run_inputs_parallel(ex, lo, hi, o.fuel);
    for (const auto& r : rep.rows) {
      if (r.timed_out)
        status = std::max(status, 2);
      else if (r.verdict == Verdict::Fail)
        status = std::max(status, 1);
    }
    if (o.structured()) {
      Json rows = Json::array();
      for (const auto& r : rep.rows) {
        Json j{{"input", r.input}};
        j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
        j["verdict"] = verdict_name(r.verdict);
        j["steps"] = r.steps;
        if (!r.note.empty()) j["note"] = r.note;
        rows.push_back(j);
      }
      reports.push_back({{"name", pe->name}, {"program", to_string(ex.program)}, {"rows", rows}});
    } else {
      out << "; " << pe->name << "\n; program " << to_string(ex.program).size() << " chars\n";
      out << "input  witness  verdict       steps\n";
      for (const auto& r : rep.rows) {
        std::string w = r.witness ? std::to_string(*r.witness) : "-";
        std::string v = verdict_name(r.verdict);
        out << r.input << std::string(7 - std::min<size_t>(6, std::to_string(r.input).size()), ' ') << w
            << std::string(9 - std::min<size_t>(8, w.size()), ' ') << v
            << std::string(14 - std::min<size_t>(13, v.size()), ' ') << r.steps;
        if (!r.note.empty()) out << "  " << r.note;
        out << "\n";
      }
    }
  }
  if (o.structured()) out << Json{{"command", "extract"}, {"reports", reports}}.dump(2) << "\n";
  return status;
}

void report_error(const Options& o, ErrorCode code, const std::string& msg, std::ostream& out, std::ostream& err) {
  if (o.structured())
    out << Json{{"command", o.command}, {"error", {{"code", error_code_name(code)}, {"message", msg}}}}.dump(2)
        << "\n";
  else
    err << "error[" << error_code_name(code) << "]: " << msg << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"kappa: classical proofs to lambda-mu programs"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--fuel", o.fuel, "evaluation step budget (default from KAPPA_FUEL, else 100000)");
  app.add_flag("--serial", o.serial, "disable the parallel kernels");

  struct Sub {
    const char* name;
    const char* help;
    bool theory, proof, inputs;
  };
  const Sub subs[] = {
      {"check", "check every proof of a file", true, true, false},
      {"relativize", "print the relativized module", true, true, false},
      {"interp", "interpret proofs as lambda-mu terms", true, true, false},
      {"eval", "evaluate a term file", false, false, false},
      {"cps", "CPS-translate a term file or the interpreted proofs", true, true, false},
      {"extract", "extract and run witness programs", true, true, true},
  };
  for (const auto& s : subs) {
    CLI::App* sc = app.add_subcommand(s.name, s.help);
    sc->add_option("file", o.file, "input file")->required();
    if (s.theory) sc->add_option("--theory", o.theory, "paw or caw")->check(CLI::IsMember({"paw", "caw"}));
    if (s.proof) sc->add_option("--proof", o.proof, "only this proof");
    if (s.inputs) sc->add_option("--inputs", o.inputs, "input range a..b");
    sc->callback([&o, name = s.name] { o.command = name; });
    sc->fallthrough();
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    o.fuel = default_fuel();
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error[syntax]: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    report_error(o, e.code(), e.what(), out, err);
    return exit_status(e.code());
  }

  try {
    if (o.command == "check") return cmd_check(o, out);
    if (o.command == "relativize") return cmd_relativize(o, out);
    if (o.command == "interp") return cmd_interp(o, out);
    if (o.command == "eval") return cmd_eval(o, out);
    if (o.command == "cps") return cmd_cps(o, out);
    if (o.command == "extract") return cmd_extract(o, out);
    fail(ErrorCode::Internal, "no command");
  } catch (const Error& e) {
    report_error(o, e.code(), e.what(), out, err);
    return exit_status(e.code());
  } catch (const std::exception& e) {
    report_error(o, ErrorCode::Internal, e.what(), out, err);
    return 3;
  }
}

}  // namespace kappa
