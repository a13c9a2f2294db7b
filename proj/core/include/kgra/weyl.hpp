#pragma once

#include "kgra/poly.hpp"

namespace kgra {

// Normally ordered monomial key: x^{x_exp} d^{d_exp}, all x's left of all
// derivatives, x's upper-indexed and derivatives lower-indexed. Raised or
// lowered variants are resolved through the concrete metric when elements
// are constructed, never stored.
struct XD {
  MultiIndex x, d;
  auto operator<=>(const XD&) const = default;
};

inline int weyl_grading(const XD& k) { return mi_total(k.x) - mi_total(k.d); }

// Element of the Weyl algebra W(2n): finite sum of normally ordered
// monomials with rational coefficients.
class WeylElement {
 public:
  WeylElement() : n_(0) {}
  explicit WeylElement(int n) : n_(n) {}

  static WeylElement unit(int n) { return monomial(n, MultiIndex(n, 0), MultiIndex(n, 0), 1); }
  static WeylElement monomial(int n, MultiIndex x, MultiIndex d, Rational c);
  static WeylElement x_var(int n, int a);   // x^a
  static WeylElement d_var(int n, int a);   // d_a
  static WeylElement x_low(const Metric& m, int a);   // x_a = eta_{ab} x^b
  static WeylElement d_up(const Metric& m, int a);    // d^a = eta^{ab} d_b

  int dim() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<XD, Rational>& terms() const { return terms_; }
  Rational coeff(const XD& key) const;
  void add_term(const XD& key, const Rational& c);

  // Total x-degree over all monomials; -1 for zero. Bounds ad-nilpotency.
  int max_x_degree() const;
  // Defined when every monomial has the same grading deg x - deg d.
  bool is_graded(int* grading_out = nullptr) const;

  WeylElement operator-() const;
  friend WeylElement operator+(const WeylElement& a, const WeylElement& b);
  friend WeylElement operator-(const WeylElement& a, const WeylElement& b);
  // Normally ordered product via iterated commutation [d_a, x^b] = delta_a^b.
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  WeylElement& operator+=(const WeylElement& o) { return *this = *this + o; }
  WeylElement& operator-=(const WeylElement& o) { return *this = *this - o; }
  WeylElement scaled(const Rational& c) const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) = default;

 private:
  int n_;
  std::map<XD, Rational> terms_;
};

struct Sl2Triple {
  WeylElement E;  // (1/2) d_a d^a
  WeylElement F;  // (1/2) x_a x^a
  WeylElement H;  // -(1/2)(x^a d_a + d_a x^a) = -x^a d_a - n/2
};

// The oscillator realization for the given metric. The paper-side i/2
// normalization is replaced by 1/2 so that all coefficients stay rational;
// the commutator [E, F] is then -H instead of H.
Sl2Triple weyl_sl2(const Metric& m);

WeylElement commutator(const WeylElement& a, const WeylElement& b);
// (ad u)^k (v).
WeylElement ad_power(const WeylElement& u, int k, const WeylElement& v);

// Involutive anti-automorphism determined by x^a -> d^a, d_a -> x_a with the
// metric contractions resolved numerically. Swaps E <-> F and fixes H for
// every metric; on unit-diagonal metrics it restricts to x^a -> d_a.
WeylElement weyl_star(const Metric& m, const WeylElement& u);

// Module action on polynomials: x's act by multiplication, d's by formal
// partial derivatives.
Poly weyl_apply(const WeylElement& u, const Poly& p);

// (u* v)(0): the constant-coefficient pairing of polynomials, with u turned
// into the differential operator replacing each x^a by d_a.
Rational poly_pairing(const Poly& u, const Poly& v);

}  // namespace kgra
