#pragma once

#include "kgra/zalgebra.hpp"

namespace kgra {

// R_{ac}^{bd}(H) = delta_c^b delta_a^d + eta_{ac} eta^{bd} / (H+1),
// the rational dynamical R-matrix composed with the flip.
RationalFn r_entry(const Metric& m, int a, int c, int b, int d);

// Symmetrizer tensor of a given rank: entries S_{a_1..a_r}^{b_1..b_r}(H),
// stored sparsely by (lower word, upper word).
class STensor {
 public:
  STensor(int n, int rank) : n_(n), rank_(rank) {}

  int dim() const { return n_; }
  int rank() const { return rank_; }
  const std::map<std::pair<Word, Word>, RationalFn>& entries() const {
    return entries_;
  }
  RationalFn get(const Word& lower, const Word& upper) const;
  void add(const Word& lower, const Word& upper, const RationalFn& c);

  friend bool operator==(const STensor& a, const STensor& b) = default;

 private:
  int n_, rank_;
  std::map<std::pair<Word, Word>, RationalFn> entries_;
};

// Built by the recursion
//   S_{a1..ar}^{b1..br}(H) = delta..delta
//     + sum_t R_{a1a2}^{b1t}(H-r+1) S_{t a3..ar}^{b2..br}(H).
STensor s_tensor_recursive(const Metric& m, int r);

// Built from the telescoping closed form: the j-th block is a chain of j
// R-factors at arguments H-r+1, ..., H-r+j contracted along fresh indices,
// padded with Kronecker deltas.
STensor s_tensor_explicit(const Metric& m, int r);

// Gram matrix entries of x-words of equal length r via the nested
// contraction of S tensors, all at argument H. Mixed lengths pair to zero.
class GramTable {
 public:
  GramTable(int n, int rank) : n_(n), rank_(rank) {}
  int rank() const { return rank_; }
  const std::map<std::pair<Word, Word>, RationalFn>& entries() const {
    return entries_;
  }
  RationalFn get(const Word& a, const Word& b) const;
  void add(const Word& a, const Word& b, const RationalFn& c);

 private:
  int n_, rank_;
  std::map<std::pair<Word, Word>, RationalFn> entries_;
};

GramTable gram_table_via_s(const Metric& m, int r);
RationalFn gram_via_s(const Metric& m, const Word& a, const Word& b);

// Independent evaluation that never forms an S tensor: peels one derivative
// at a time through the exchange relation, tracking coefficient shifts.
// The context memoizes the single-derivative action per exponent.
class GramRecursion {
 public:
  explicit GramRecursion(const Metric& m) : m_(m), n_(m.dim()) {}
  RationalFn gram(const Word& a, const Word& b) const;

 private:
  using Element = std::map<MultiIndex, RationalFn>;  // coefficients-left
  const Element& dapply(int a, const MultiIndex& exp) const;

  Metric m_;
  int n_;
  mutable std::map<std::pair<int, MultiIndex>, Element> memo_;
};

RationalFn gram_via_recursion(const Metric& m, const Word& a, const Word& b);

// Third route: star the first word in the engine, multiply with exchange
// and H-commutation only, and read off the vacuum coefficient. The basis
// eliminations are deliberately not applied here: the form is defined on
// raw words and its value is the normal-ordered vacuum expectation.
RationalFn gram_via_engine(const ZEngine& eng, const Word& a, const Word& b);

}  // namespace kgra
