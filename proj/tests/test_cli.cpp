#include <doctest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "kappa/cli.hpp"
#include "kappa/corpus.hpp"
#include "kappa/workspace.hpp"
#include "support.hpp"

using namespace kappa;

namespace {

struct Run {
  int status;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string corpus(const char* f) { return test::corpus_path(f); }

}  // namespace

TEST_CASE("check peirce") {
  Run r = run({"check", corpus("peirce.proof")});
  CHECK(r.status == 0);
  CHECK(r.out.find("peirce: ok") != std::string::npos);
}

TEST_CASE("check reports polarity errors with code and exit 1") {
  Run r = run({"check", corpus("positive.proof")});
  CHECK(r.status == 1);
  CHECK(r.out.find("error[polarity]") != std::string::npos);
}

TEST_CASE("syntax errors") {
  Run r = run({"check", corpus("bad_binder.proof")});
  CHECK(r.status == 1);
  CHECK(r.err.rfind("error[syntax]:", 0) == 0);
}

TEST_CASE("missing file") {
  Run r = run({"check", corpus("no_such.proof")});
  CHECK(r.status == 1);
  CHECK(r.err.find("error[io]") != std::string::npos);
}

TEST_CASE("unknown flags are user errors") {
  CHECK(run({"check", "--bogus", corpus("peirce.proof")}).status == 1);
  CHECK(run({}).status == 1);
  CHECK(run({"check", "--theory", "zf", corpus("peirce.proof")}).status == 1);
}

TEST_CASE("extract succ on 0..5") {
  Run r = run({"extract", corpus("succ.proof"), "--inputs", "0..5"});
  CHECK(r.status == 0);
  int passes = 0;
  for (size_t p = r.out.find("pass"); p != std::string::npos; p = r.out.find("pass", p + 1)) ++passes;
  CHECK(passes == 6);
}

TEST_CASE("structured extraction report") {
  Run r = run({"--format", "structured", "extract", corpus("add0.proof"), "--inputs", "0..3"});
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  auto rows = j["reports"][0]["rows"];
  REQUIRE(rows.size() == 4);
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i]["input"] == i);
    CHECK(rows[i]["witness"] == i);
    CHECK(rows[i]["verdict"] == "pass");
    CHECK(rows[i]["steps"].is_number());
  }
}

TEST_CASE("eval omega times out with exit 2") {
  for (const char* fuel : {"0", "1", "100", "10000"}) {
    Run r = run({"eval", corpus("omega.term"), "--fuel", fuel});
    CHECK(r.status == 2);
    CHECK(r.out.find("timeout") != std::string::npos);
  }
  Run s = run({"--format", "structured", "eval", corpus("omega.term"), "--fuel", "50"});
  CHECK(s.status == 2);
  auto j = nlohmann::json::parse(s.out);
  CHECK(j["status"] == "timeout");
  CHECK(j["steps"] == 50);
}

TEST_CASE("fuel flag placement") {
  CHECK(run({"--fuel", "10", "eval", corpus("omega.term")}).status == 2);
}

TEST_CASE("fuel from the environment") {
  setenv("KAPPA_FUEL", "25", 1);
  Run r = run({"--format", "structured", "eval", corpus("omega.term")});
  unsetenv("KAPPA_FUEL");
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["steps"] == 25);
}

TEST_CASE("interp, cps and relativize run on the corpus") {
  for (const char* f : {"add0.proof", "choice.proof", "peirce.proof"}) {
    CAPTURE(f);
    CHECK(run({"interp", corpus(f)}).status == 0);
    CHECK(run({"cps", corpus(f)}).status == 0);
    Run rel = run({"relativize", corpus(f)});
    CHECK(rel.status == 0);
    // The relativized module parses and checks.
    Workspace ws = parse_module(rel.out);
    CHECK(ws.theory.relativized());
    for (const auto& pe : ws.proofs) CHECK_NOTHROW(check_proof(pe.proof, ws.theory, pe.goal));
  }
  CHECK(run({"cps", corpus("omega.term")}).status == 0);
}

TEST_CASE("theory override") {
  CHECK(run({"check", "--theory", "caw", corpus("succ.proof")}).status == 0);
  Run r = run({"check", "--theory", "paw", corpus("choice.proof")});
  CHECK(r.status == 1);
  CHECK(r.out.find("error[unknown-axiom]") != std::string::npos);
}

TEST_CASE("proof selection") {
  CHECK(run({"check", "--proof", "peirce", corpus("peirce.proof")}).status == 0);
  CHECK(run({"check", "--proof", "nope", corpus("peirce.proof")}).status == 1);
}

TEST_CASE("output is deterministic") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"interp", corpus("add0.proof")},
           {"cps", corpus("dne.proof")},
           {"--format", "structured", "extract", corpus("ident.proof")},
       }) {
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("structured errors") {
  Run r = run({"--format", "structured", "check", corpus("bad_binder.proof")});
  CHECK(r.status == 1);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["error"]["code"] == "syntax");
}

TEST_CASE("generated corpus files are up to date") {
  for (const auto& [name, ws] : generated_corpus()) {
    CAPTURE(name);
    CHECK(read_text(corpus((name + ".proof").c_str())) == module_to_string(ws));
  }
}
