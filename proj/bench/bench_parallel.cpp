#include <benchmark/benchmark.h>

#include "kappa/extract.hpp"
#include "kappa/parallel.hpp"
#include "kappa/workspace.hpp"
#include "support.hpp"

using namespace kappa;

namespace {

const Extraction& add0() {
  static const Extraction ex = [] {
    Workspace ws = parse_file(test::corpus_path("add0.proof"));
    return extract_program(ws.proofs[0].proof, ws.theory);
  }();
  return ex;
}

void BM_extract_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(run_inputs_serial(add0(), 0, st.range(0), 1000000));
}

void BM_extract_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(run_inputs_parallel(add0(), 0, st.range(0), 1000000));
}

void BM_check_serial(benchmark::State& st) {
  Workspace ws = parse_file(test::corpus_path("choice.proof"));
  for (auto _ : st) benchmark::DoNotOptimize(check_all_serial(ws));
}

void BM_check_parallel(benchmark::State& st) {
  Workspace ws = parse_file(test::corpus_path("choice.proof"));
  for (auto _ : st) benchmark::DoNotOptimize(check_all_parallel(ws));
}

}  // namespace

BENCHMARK(BM_extract_serial)->Arg(10)->Arg(40);
BENCHMARK(BM_extract_parallel)->Arg(10)->Arg(40);
BENCHMARK(BM_check_serial);
BENCHMARK(BM_check_parallel);

BENCHMARK_MAIN();
