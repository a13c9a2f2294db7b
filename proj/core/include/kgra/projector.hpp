#pragma once

#include "kgra/dyn_weyl.hpp"

namespace kgra {

using Word = std::vector<int>;  // letters in 1..n

// f_k(H) = 1 / ((H+2)(H+3)...(H+1+k)); f_0 = 1.
RationalFn series_coefficient(int k);

// psi_k(H) = (H+2-2k)(H+3-2k)...(H+1-k), the k-factor Cartan product whose
// reciprocal appears inside the projector series; psi_k(H + 2k) f_k(H) = 1.
HPoly cartan_factor(int k);

// P(x^{a_1} ... x^{a_l} + I+) applied to the constant solution 1, with the
// H-eigenvalue -l - n/2 substituted up front. Returns the harmonic
// polynomial |a_1 ... a_l>.
Poly project_word(const Metric& m, const Word& word);

// Same series applied to a graded-homogeneous Weyl element (pure x-words are
// the grading-l case). Requires is_graded(); the output is w P-applied to 1.
Poly project_apply(const Metric& m, const WeylElement& w);

// Full coset representative of P(w + I+) with H kept symbolic:
//   sum_k (1/k!) f_k(H) F'^k (ad E')^k (w).
DynWeylElement project_general(const Metric& m, const WeylElement& w);

}  // namespace kgra
