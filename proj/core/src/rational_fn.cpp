#include "kgra/rational_fn.hpp"

namespace kgra {

RationalFn::RationalFn(HPoly num, HPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("zero denominator");
  canonicalize();
}

void RationalFn::canonicalize() {
  if (num_.is_zero()) {
    den_ = HPoly(1);
    return;
  }
  HPoly g = HPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    HPoly rem;
    num_ = HPoly::divmod(num_, g, &rem);
    den_ = HPoly::divmod(den_, g, &rem);
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    std::vector<Rational> nc = num_.coeffs(), dc = den_.coeffs();
    for (auto& c : nc) c /= lead;
    for (auto& c : dc) c /= lead;
    num_ = HPoly::from_coeffs(std::move(nc));
    den_ = HPoly::from_coeffs(std::move(dc));
  }
}

RationalFn RationalFn::shifted(const Rational& s) const {
  RationalFn r;
  r.num_ = num_.shifted(s);
  r.den_ = den_.shifted(s);
  return r;  // shift preserves canonical form
}

Rational RationalFn::eval(const Rational& h) const {
  Rational d = den_.eval(h);
  if (d == 0) {
    // Name the linear factor when there is one, for diagnosability.
    std::string factor = "den(H)";
    if (h == 0)
      factor = "H";
    else
      factor = (h < 0) ? ("H+" + rational_str(-h)) : ("H-" + rational_str(h));
    throw Error("dynamical pole at " + factor + " = 0");
  }
  return num_.eval(h) / d;
}

RationalFn RationalFn::operator-() const {
  RationalFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
  if (b.is_zero()) throw Error("zero denominator");
  return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

}  // namespace kgra
