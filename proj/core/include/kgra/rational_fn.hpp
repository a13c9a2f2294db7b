#pragma once

#include "kgra/hpoly.hpp"

namespace kgra {

// Rational function of the dynamical variable H. Canonical form: monic
// denominator, gcd(num, den) = 1, zero stored as 0/1 — so operator== on the
// coefficient lists decides equality of functions.
class RationalFn {
 public:
  RationalFn() : num_(), den_(1) {}
  RationalFn(const Rational& c) : num_(c), den_(1) {}
  RationalFn(int c) : num_(Rational(c)), den_(1) {}
  RationalFn(HPoly num, HPoly den);
  explicit RationalFn(HPoly num) : num_(std::move(num)), den_(1) {}

  static RationalFn variable() { return RationalFn(HPoly::variable()); }

  const HPoly& num() const { return num_; }
  const HPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.is_one(); }

  // g(H + s); canonical form is preserved by substitution.
  RationalFn shifted(const Rational& s) const;

  // Exact evaluation. A root of the denominator raises Error("dynamical
  // pole ...") carrying the offending factor.
  Rational eval(const Rational& h) const;

  RationalFn operator-() const;
  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
  RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
  RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
  RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
  RationalFn& operator/=(const RationalFn& o) { return *this = *this / o; }

  friend bool operator==(const RationalFn& a, const RationalFn& b) = default;

 private:
  HPoly num_, den_;
  void canonicalize();
};

}  // namespace kgra
