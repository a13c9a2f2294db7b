#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace kgra {

// Exact arithmetic everywhere. Rational is always stored reduced with a
// positive denominator; zero is 0/1.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Builds num/den, moving the sign onto the numerator. Throws on den == 0.
Rational make_rational(const Int& num, const Int& den);

// Accepts "p" or "p/q" with optional sign.
Rational parse_rational(const std::string& text);

// Renders "p" when the denominator is 1, otherwise "p/q".
std::string rational_str(const Rational& q);

Rational factorial(int n);
Rational binomial(int n, int k);

}  // namespace kgra
