#pragma once

#include "kgra/projector.hpp"

namespace kgra {

// Disjoint unordered position pairs inside {0, ..., l-1}; the uncovered
// positions are the singles. Pairs are stored (min, max), enumerated once
// per unordered choice — this encodes the distinctness convention for
// eta-contracted monomial sums.
struct PartialMatching {
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> singles;
};

// All matchings of k disjoint pairs among l positions;
// count = l! / (2^k k! (l-2k)!), empty when 2k > l.
std::vector<PartialMatching> enumerate_matchings(int l, int k);

// Closed form for the state |a_1 ... a_l>:
//   sum_k f_k(-l-n/2) (r^2/2)^k sum_{k-pair matchings} prod eta^{a_i a_j}
//   prod x^{a_s}.
Poly state_explicit(const Metric& m, const Word& a);

// Sum of all degree-d mixed x/d-monomials indexed by a: each position
// carries x^{a_i} or d^{a_i} (raised), multiplied in position order and
// normally ordered.
WeylElement mixed_monomial_sum(const Metric& m, const Word& a, int d);

// Sum of all distinct degree-d ordered eta-x-d monomials indexed by
// permutations of a: k eta-contracted position pairs, then the remaining
// positions split between x's and raised d's.
WeylElement ordered_monomial_sum(const Metric& m, const Word& a, int d);

// Raising operator applied to a polynomial:
//   x^a p + f_1(H)|_{deg+1} (r^2/2) d^a p, per homogeneous component.
Poly raising_apply(const Metric& m, int a, const Poly& p);

// Expands a homogeneous solution in x-monomials, replaces every monomial by
// its state, and sums. Contract: reproduces the input.
Poly lift_and_apply(const Metric& m, const Poly& phi);

// Picks the lexicographically largest stored monomial xi * x^d of a nonzero
// homogeneous polynomial, applies d^(d) and checks the result is exactly the
// constant d_1! ... d_n! xi, which is returned with the exponent.
std::pair<MultiIndex, Rational> descend_to_constant(const Metric& m, const Poly& phi);

// All degree-d exponents in n variables, lexicographically ascending.
std::vector<MultiIndex> monomials_of_degree(int n, int d);

// Sorted words of length l over {1..n} (multisets), ascending.
std::vector<Word> sorted_words(int n, int l);

Word word_of_exponent(const MultiIndex& e);

// dim ker(box) on degree-d homogeneous polynomials:
//   binom(n+d-1, d) - binom(n+d-3, d-2).
int kernel_dimension(int n, int d);

// Exact basis of that kernel from the nullspace of the box matrix.
std::vector<Poly> solution_space_basis(const Metric& m, int d);

}  // namespace kgra
