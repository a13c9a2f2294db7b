#pragma once

#include <string>
#include <vector>

#include "kgra/rmatrix.hpp"

namespace kgra {

struct CaseResult {
  std::string id;
  bool pass = false;
  std::string detail;  // witness text for failures, context otherwise
};

struct SuiteReport {
  std::string name;
  std::vector<CaseResult> cases;
  std::vector<std::string> notes;  // report-only observations, no verdict

  bool all_pass() const;
  int failures() const;
  void add(std::string id, bool pass, std::string detail = "");
  std::string to_json() const;
  std::string summary() const;
};

// The eight presentation relations, verified three ways: as engine normal
// forms, as operator identities on an exact spanning set of solutions up to
// max_deg, and against the projector-series route on generator pairs.
SuiteReport verify_relations(const Metric& m, int max_deg);

// Equality of the mixed and the eta-contracted monomial sums for every word
// of length <= lmax and every admissible degree.
SuiteReport verify_monomial_lemma(const Metric& m, int lmax);

// Closed-form states against the projector series for all sorted words of
// length <= lmax, with harmonicity, permutation invariance, and the
// r^2-divisibility of the correction terms.
SuiteReport verify_dual_path(const Metric& m, int lmax);

// S-tensor recursive/explicit agreement, three-way Gram agreement, the
// pinned rank-1/2/3 formulas, and the report-only symmetry and descent
// probes. The engine route runs only on diagonal metrics.
SuiteReport verify_gram(const Metric& m, int rmax);

// Lift/descend round trips on random exact solutions plus the
// spanning-rank/kernel-dimension comparison.
SuiteReport verify_lift(const Metric& m, int max_deg, int samples, unsigned seed);

// Engine associativity fuzz over random generator triples (diagonal only).
SuiteReport verify_associativity(const Metric& m, int triples, unsigned seed);

// Oracle agreement for generator words: engine left-associated products
// against the projector-series coset representatives reduced modulo II.
// Words whose two routes differ as representations are cross-checked by
// acting on solutions; action disagreement fails the case.
SuiteReport verify_engine_oracle(const Metric& m, int max_len);

}  // namespace kgra
