#include "kgra/hpoly.hpp"

namespace kgra {

HPoly::HPoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

HPoly HPoly::variable() {
  HPoly p;
  p.c_ = {Rational(0), Rational(1)};
  return p;
}

HPoly HPoly::from_coeffs(std::vector<Rational> ascending) {
  HPoly p;
  p.c_ = std::move(ascending);
  p.trim();
  return p;
}

void HPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool HPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

Rational HPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[k];
}

Rational HPoly::leading() const {
  if (c_.empty()) return Rational(0);
  return c_.back();
}

Rational HPoly::eval(const Rational& h) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * h + *it;
  return acc;
}

HPoly HPoly::shifted(const Rational& s) const {
  // Horner in (H + s).
  HPoly hs = from_coeffs({s, Rational(1)});
  HPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * hs + HPoly(*it);
  return acc;
}

HPoly HPoly::monic() const {
  if (is_zero()) return HPoly();
  HPoly p = *this;
  Rational lead = p.c_.back();
  for (auto& c : p.c_) c /= lead;
  return p;
}

HPoly HPoly::operator-() const {
  HPoly p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

HPoly operator+(const HPoly& a, const HPoly& b) {
  HPoly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
  r.trim();
  return r;
}

HPoly operator-(const HPoly& a, const HPoly& b) { return a + (-b); }

HPoly operator*(const HPoly& a, const HPoly& b) {
  if (a.is_zero() || b.is_zero()) return HPoly();
  HPoly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  r.trim();
  return r;
}

HPoly HPoly::divmod(const HPoly& a, const HPoly& b, HPoly* rem) {
  if (b.is_zero()) throw Error("zero denominator");
  HPoly q;
  HPoly r = a;
  int db = b.degree();
  Rational lead = b.leading();
  while (!r.is_zero() && r.degree() >= db) {
    int k = r.degree() - db;
    Rational c = r.leading() / lead;
    std::vector<Rational> mono(k + 1, Rational(0));
    mono[k] = c;
    HPoly m = from_coeffs(std::move(mono));
    q += m;
    r -= m * b;
  }
  if (rem) *rem = r;
  return q;
}

HPoly HPoly::gcd(const HPoly& a, const HPoly& b) {
  HPoly u = a, v = b;
  while (!v.is_zero()) {
    HPoly r;
    divmod(u, v, &r);
    u = v;
    v = r;
  }
  return u.monic();
}

}  // namespace kgra
