#pragma once

#include <vector>

#include "kgra/rational.hpp"

namespace kgra {

// Dense univariate polynomial in the dynamical variable H. Coefficients
// ascending, no trailing zeros; the zero polynomial has an empty list.
class HPoly {
 public:
  HPoly() = default;
  HPoly(const Rational& c);
  HPoly(int c) : HPoly(Rational(c)) {}

  static HPoly variable();  // H
  static HPoly from_coeffs(std::vector<Rational> ascending);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;
  Rational leading() const;

  Rational eval(const Rational& h) const;
  HPoly shifted(const Rational& s) const;  // p(H + s)
  HPoly monic() const;

  HPoly operator-() const;
  friend HPoly operator+(const HPoly& a, const HPoly& b);
  friend HPoly operator-(const HPoly& a, const HPoly& b);
  friend HPoly operator*(const HPoly& a, const HPoly& b);
  HPoly& operator+=(const HPoly& o) { return *this = *this + o; }
  HPoly& operator-=(const HPoly& o) { return *this = *this - o; }
  HPoly& operator*=(const HPoly& o) { return *this = *this * o; }

  // Quotient of exact or inexact division; *rem receives the remainder.
  static HPoly divmod(const HPoly& a, const HPoly& b, HPoly* rem);
  // Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
  static HPoly gcd(const HPoly& a, const HPoly& b);

  friend bool operator==(const HPoly& a, const HPoly& b) = default;

 private:
  std::vector<Rational> c_;
  void trim();
};

}  // namespace kgra
