#pragma once

#include "kgra/dyn_weyl.hpp"
#include "kgra/states.hpp"

namespace kgra {

// Reduction-algebra element: left-C(H)-combination of restricted monomials
// x^r d^s with r_n + s_n <= 1 (n the distinguished last coordinate).
class ZElement {
 public:
  ZElement() : n_(0) {}
  explicit ZElement(int n) : n_(n) {}

  int dim() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<XD, RationalFn>& terms() const { return terms_; }
  RationalFn coeff(const XD& key) const;
  void add_term(const XD& key, const RationalFn& c);

  // Coefficient of the empty monomial — the vacuum expectation.
  RationalFn constant_term() const;

  ZElement operator-() const;
  friend ZElement operator+(const ZElement& a, const ZElement& b);
  friend ZElement operator-(const ZElement& a, const ZElement& b);
  ZElement scaled(const RationalFn& c) const;

  friend bool operator==(const ZElement& a, const ZElement& b) = default;

 private:
  int n_;
  std::map<XD, RationalFn> terms_;
};

// Rewriting engine for the diamond product over a diagonal metric. The
// product is normalized with, in order: H-commutation past generators, the
// dynamical exchange relation
//   d_a x^b = delta_a^b + x^b d_a + (eta_aa eta^bb / (H+1)) x^a d_b,
// and the eliminations derived from the three contracted relations:
//   (x^n)^2 -> -eta^{nn} sum_{a<n} eta_{aa} (x^a)^2,
//   (d_n)^2 -> -eta_{nn} sum_{a<n} eta^{aa} (d_a)^2,
//   x^n d_n -> -(H + n/2) - sum_{a<n} x^a d_a,
// applied square rules first, innermost-leftmost, until the restricted form
// holds. Exceeding the rewrite fuel 10*(1+degree)^2 per monomial is a hard
// error. Memo tables make the engine cheap to reuse; share one engine per
// thread, not across threads.
class ZEngine {
 public:
  explicit ZEngine(const Metric& m);

  const Metric& metric() const { return m_; }
  int dim() const { return n_; }

  ZElement unit() const;
  ZElement x_gen(int a) const;
  ZElement d_gen(int a) const;
  ZElement x_low(int a) const;  // eta_aa x^a
  ZElement d_up(int a) const;   // eta^aa d_a
  ZElement h_element() const;   // H * unit
  ZElement of_xword(const Word& w) const;
  ZElement of_dword(const Word& w) const;

  ZElement mul(const ZElement& u, const ZElement& v) const;
  // Exchange and H-commutation only, no eliminations: computes the
  // normal-ordered representative whose vacuum coefficient is the value of
  // the bilinear form.
  ZElement mul_exchange_only(const ZElement& u, const ZElement& v) const;

  // (x^r d^s)* = x^s d^r with the coefficient commuted back to the left.
  ZElement star(const ZElement& u) const;

  // Action on harmonic polynomials: d's act as partials, x's as raising
  // operators, H-coefficients evaluate at -deg - n/2 per component.
  Poly act(const ZElement& u, const Poly& phi) const;

  // Straightens a localized Weyl representative (projector output) to the
  // restricted monomials modulo II = F'A + AE'.
  ZElement reduce(const DynWeylElement& w) const;

 private:
  using TermMap = std::map<XD, RationalFn>;

  const TermMap& exchange(const MultiIndex& dexp, const MultiIndex& xexp) const;
  void eliminate_into(ZElement& out, const XD& key, const RationalFn& c) const;
  ZElement mul_impl(const ZElement& u, const ZElement& v, bool eliminate) const;

  Metric m_;
  int n_;
  mutable std::map<std::pair<MultiIndex, MultiIndex>, TermMap> exch_memo_;
};

}  // namespace kgra
