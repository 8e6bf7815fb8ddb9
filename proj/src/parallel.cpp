#include "kappa/parallel.hpp"

namespace kappa {

namespace {

CheckOutcome check_one(const Workspace& ws, const ProofEntry& pe) {
  CheckOutcome out;
  out.name = pe.name;
  try {
    out.concl = check_proof(pe.proof, ws.theory, pe.goal).concl;
    out.ok = true;
  } catch (const Error& e) {
    out.code = e.code();
    out.message = e.what();
  } catch (const std::exception& e) {
    out.message = e.what();
  }
  return out;
}

ExtractionRow run_one(const Extraction& ex, std::uint64_t n, size_t fuel) {
  try {
    return run_input(ex, n, fuel);
  } catch (const std::exception& e) {
    ExtractionRow row;
    row.input = n;
    row.note = e.what();
    return row;
  }
}

}  // namespace

std::vector<CheckOutcome> check_all_serial(const Workspace& ws) {
  std::vector<CheckOutcome> out;
  for (const auto& pe : ws.proofs) out.push_back(check_one(ws, pe));
  return out;
}

std::vector<CheckOutcome> check_all_parallel(const Workspace& ws) {
  std::vector<CheckOutcome> out(ws.proofs.size());
  const long n = static_cast<long>(ws.proofs.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) out[i] = check_one(ws, ws.proofs[i]);
  return out;
}

ExtractionReport run_inputs_serial(const Extraction& ex, std::uint64_t lo, std::uint64_t hi, size_t fuel) {
  ExtractionReport r;
  r.program = ex.program;
  for (std::uint64_t n = lo; n <= hi; ++n) r.rows.push_back(run_one(ex, n, fuel));
  return r;
}

ExtractionReport run_inputs_parallel(const Extraction& ex, std::uint64_t lo, std::uint64_t hi, size_t fuel) {
  ExtractionReport r;
  r.program = ex.program;
  if (hi < lo) return r;
  const long count = static_cast<long>(hi - lo + 1);
  r.rows.resize(count);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) r.rows[i] = run_one(ex, lo + static_cast<std::uint64_t>(i), fuel);
  return r;
}

}  // namespace kappa
