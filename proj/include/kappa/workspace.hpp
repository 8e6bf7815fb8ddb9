#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kappa/lambdamu.hpp"
#include "kappa/proof.hpp"
#include "kappa/sexpr.hpp"
#include "kappa/syntax.hpp"
#include "kappa/theory.hpp"

namespace kappa {

struct ProofEntry {
  std::string name;
  Sequent goal;
  Proof proof;
  SrcPos pos;
};

// A parsed proof file.
//   (theory paw|caw|pawr|cawr)
//   (vars (x s) ...)                          variables usable free in goals
//   (constant c s)
//   (predicate P (s ...) negative|positive)
//   (axiom name F)
//   (proof name GOAL PROOF)   GOAL is (goal A) or
//                             (sequent (hyps (h A) ...) A (labels (a B) ...))
struct Workspace {
  Theory theory = Theory::paw();
  Scope vars;
  std::vector<ProofEntry> proofs;

  const ProofEntry& proof(const std::string& name) const;
};

// `theory` overrides the file's own theory declaration.
Workspace parse_module(const std::string& text, const std::optional<std::string>& theory = {});
Workspace parse_file(const std::string& path, const std::optional<std::string>& theory = {});

// Prints a module that parses back to the same signature and proofs.
std::string module_to_string(const Workspace& ws);

// A term file: (term M), optionally with (vars (x T) ...) and (labels (a T) ...).
struct TermFile {
  LmTerm term;
  LmCtx lctx, mctx;
};

TermFile parse_term_module(const std::string& text);
TermFile parse_term_file(const std::string& path);

std::string read_text(const std::string& path);
bool is_term_text(const std::string& text);

}  // namespace kappa
