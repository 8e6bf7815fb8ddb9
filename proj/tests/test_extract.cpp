#include <doctest.h>

#include "kappa/error.hpp"
#include "kappa/extract.hpp"
#include "kappa/parallel.hpp"
#include "kappa/syntax.hpp"
#include "support.hpp"

using namespace kappa;

namespace {

const Sort I = Sort::iota();

Pi02Goal succ_goal() {
  Workspace ws = parse_file(test::corpus_path("succ.proof"));
  return read_pi02(ws.proofs[0].goal.concl);
}

}  // namespace

TEST_CASE("reading the goal") {
  Pi02Goal g = succ_goal();
  CHECK(g.sigma == I);
  CHECK(g.t.is_var());
  CHECK(g.t.name() == g.y);
  Workspace ws = parse_file(test::corpus_path("sym.proof"));
  CHECK_THROWS_AS(read_pi02(ws.proofs[0].goal.concl), Error);
}

TEST_CASE("witness verification") {
  Pi02Goal g = succ_goal();
  CHECK(verify_witness(g, 3, 4, 1000).verdict == Verdict::Pass);
  CHECK(verify_witness(g, 3, 5, 1000).verdict == Verdict::Fail);
  Pi02Goal h = g;
  h.sigma = Sort::arrow(I, I);
  CHECK(verify_witness(h, 3, 4, 1000).verdict == Verdict::Unverifiable);
}

TEST_CASE("extracted programs have type nat -> nat") {
  for (const auto& f : test::pi02_files()) {
    Workspace ws = parse_file(test::corpus_path(f));
    Extraction ex = extract_program(ws.proofs[0].proof, ws.theory);
    CHECK(typecheck(ex.program) == LmType::arrow(LmType::nat(), LmType::nat()));
    CHECK_NOTHROW(infer_conclusion(ex.relativized, ws.theory.relativize()));
  }
}

TEST_CASE("extraction end to end") {
  for (const auto& f : test::pi02_files()) {
    CAPTURE(f);
    Workspace ws = parse_file(test::corpus_path(f));
    Extraction ex = extract_program(ws.proofs[0].proof, ws.theory);
    ExtractionReport rep = run_inputs_serial(ex, 0, 10, 100000);
    REQUIRE(rep.rows.size() == 11);
    for (const auto& row : rep.rows) {
      CAPTURE(row.input);
      CHECK(row.verdict == Verdict::Pass);
      CHECK(row.steps < 100000);
    }
    CHECK(rep.all_pass());
  }
}

TEST_CASE("witnesses match the defining equation") {
  // Independent oracle: y = S x, y = x, and rec 0 (k S) x = x.
  std::map<std::string, std::function<std::uint64_t(std::uint64_t)>> expect{
      {"succ.proof", [](auto n) { return n + 1; }},
      {"ident.proof", [](auto n) { return n; }},
      {"add0.proof", [](auto n) { return n; }},
  };
  for (const auto& [f, oracle] : expect) {
    Workspace ws = parse_file(test::corpus_path(f));
    Extraction ex = extract_program(ws.proofs[0].proof, ws.theory);
    for (std::uint64_t n = 0; n <= 10; ++n) {
      ExtractionRow row = run_input(ex, n, 100000);
      REQUIRE(row.witness);
      CHECK(*row.witness == oracle(n));
    }
  }
}

TEST_CASE("parallel and serial runs agree") {
  Workspace ws = parse_file(test::corpus_path("add0.proof"));
  Extraction ex = extract_program(ws.proofs[0].proof, ws.theory);
  ExtractionReport a = run_inputs_serial(ex, 0, 12, 100000), b = run_inputs_parallel(ex, 0, 12, 100000);
  REQUIRE(a.rows.size() == b.rows.size());
  for (size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].input == b.rows[i].input);
    CHECK(a.rows[i].witness == b.rows[i].witness);
    CHECK(a.rows[i].steps == b.rows[i].steps);
  }
}

TEST_CASE("low fuel times out rather than failing silently") {
  Workspace ws = parse_file(test::corpus_path("add0.proof"));
  Extraction ex = extract_program(ws.proofs[0].proof, ws.theory);
  ExtractionRow row = run_input(ex, 10, 20);
  CHECK(row.timed_out);
  CHECK(row.verdict == Verdict::Fail);
  CHECK_FALSE(row.witness);
}

TEST_CASE("extraction needs an unrelativized theory and a Pi02 goal") {
  Workspace ws = parse_file(test::corpus_path("succ.proof"));
  CHECK_THROWS_AS(extract_program(ws.proofs[0].proof, Theory::pawr()), Error);
  Workspace sym = parse_file(test::corpus_path("sym.proof"));
  CHECK_THROWS_AS(extract_program(sym.proofs[0].proof, sym.theory), Error);
}
