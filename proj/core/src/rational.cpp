#include "kgra/rational.hpp"

namespace kgra {

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw Error("zero denominator");
  if (den < 0) return Rational(-num, -den);
  return Rational(num, den);
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    return make_rational(num, den);
  } catch (const std::runtime_error& e) {
    throw Error("bad rational literal '" + text + "'");
  }
}

std::string rational_str(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational factorial(int n) {
  if (n < 0) throw Error("factorial of negative integer");
  Int acc = 1;
  for (int i = 2; i <= n; ++i) acc *= i;
  return Rational(acc);
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  Int acc = 1;
  for (int i = 0; i < k; ++i) {
    acc *= (n - i);
    acc /= (i + 1);  // exact: product of j consecutive integers divides j!
  }
  return Rational(acc);
}

}  // namespace kgra
