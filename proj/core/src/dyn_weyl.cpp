#include "kgra/dyn_weyl.hpp"

namespace kgra {

DynWeylElement::DynWeylElement(const WeylElement& w) : n_(w.dim()) {
  for (const auto& [k, c] : w.terms()) terms_.emplace(k, RationalFn(c));
}

DynWeylElement DynWeylElement::monomial(int n, MultiIndex x, MultiIndex d,
                                        RationalFn c) {
  DynWeylElement r(n);
  if (!c.is_zero()) r.terms_.emplace(XD{std::move(x), std::move(d)}, std::move(c));
  return r;
}

void DynWeylElement::add_term(const XD& key, const RationalFn& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DynWeylElement DynWeylElement::operator-() const {
  DynWeylElement r(n_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

DynWeylElement operator+(const DynWeylElement& a, const DynWeylElement& b) {
  if (a.n_ != b.n_) throw Error("dimension mismatch");
  DynWeylElement r = a;
  for (const auto& [k, c] : b.terms_) r.add_term(k, c);
  return r;
}

DynWeylElement operator-(const DynWeylElement& a, const DynWeylElement& b) {
  return a + (-b);
}

DynWeylElement operator*(const DynWeylElement& a, const DynWeylElement& b) {
  if (a.n_ != b.n_) throw Error("dimension mismatch");
  DynWeylElement r(a.n_);
  for (const auto& [ka, ca] : a.terms_) {
    int shift = weyl_grading(ka);
    for (const auto& [kb, cb] : b.terms_) {
      RationalFn c = ca * cb.shifted(shift);
      // Monomial product through the plain Weyl relations.
      WeylElement prod = WeylElement::monomial(a.n_, ka.x, ka.d, 1) *
                         WeylElement::monomial(a.n_, kb.x, kb.d, 1);
      for (const auto& [km, cm] : prod.terms()) r.add_term(km, c * RationalFn(cm));
    }
  }
  return r;
}

DynWeylElement DynWeylElement::scaled_left(const RationalFn& c) const {
  DynWeylElement r(n_);
  for (const auto& [k, co] : terms_) r.add_term(k, c * co);
  return r;
}

WeylElement DynWeylElement::eval_h(const Rational& h) const {
  WeylElement r(n_);
  for (const auto& [k, c] : terms_) r.add_term(k, c.eval(h));
  return r;
}

DynWeylElement dyn_ad_e(const WeylElement& e_half, const DynWeylElement& u) {
  DynWeylElement lhs = DynWeylElement(e_half) * u;
  DynWeylElement rhs = u * DynWeylElement(e_half);
  return lhs - rhs;
}

}  // namespace kgra
