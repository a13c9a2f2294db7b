#pragma once

#include "kgra/weyl.hpp"

namespace kgra {

// Weyl element with coefficients in C(H), H committed to the far left of
// every monomial. Used transiently for projector output and coset
// straightening; representations are not canonical in the localized
// algebra, so equality of elements is only decided downstream (after
// reduction to the quotient or after evaluating H).
class DynWeylElement {
 public:
  DynWeylElement() : n_(0) {}
  explicit DynWeylElement(int n) : n_(n) {}
  // Lift with rational coefficients.
  explicit DynWeylElement(const WeylElement& w);

  static DynWeylElement monomial(int n, MultiIndex x, MultiIndex d, RationalFn c);

  int dim() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<XD, RationalFn>& terms() const { return terms_; }
  void add_term(const XD& key, const RationalFn& c);

  DynWeylElement operator-() const;
  friend DynWeylElement operator+(const DynWeylElement& a, const DynWeylElement& b);
  friend DynWeylElement operator-(const DynWeylElement& a, const DynWeylElement& b);
  // Product with H-shift bookkeeping: moving g(H) left past x^A d^B turns it
  // into g(H + |A| - |B|); the monomial parts multiply by the Weyl relations.
  friend DynWeylElement operator*(const DynWeylElement& a, const DynWeylElement& b);
  DynWeylElement& operator+=(const DynWeylElement& o) { return *this = *this + o; }

  DynWeylElement scaled_left(const RationalFn& c) const;

  // Substitutes a concrete value for H. Poles raise Error("dynamical pole").
  WeylElement eval_h(const Rational& h) const;

  friend bool operator==(const DynWeylElement& a, const DynWeylElement& b) = default;

 private:
  int n_;
  std::map<XD, RationalFn> terms_;
};

// [E', u] with the coefficient shift E' g(H) = g(H-2) E'.
DynWeylElement dyn_ad_e(const WeylElement& e_half, const DynWeylElement& u);

}  // namespace kgra
