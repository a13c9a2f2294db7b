#include "kgra/projector.hpp"

namespace kgra {

RationalFn series_coefficient(int k) {
  if (k < 0) throw Error("negative power");
  HPoly den(1);
  for (int j = 2; j <= k + 1; ++j) den *= HPoly::from_coeffs({Rational(j), Rational(1)});
  return RationalFn(HPoly(1), den);
}

HPoly cartan_factor(int k) {
  if (k < 0) throw Error("negative power");
  HPoly p(1);
  for (int j = 2 - 2 * k; j <= 1 - k; ++j)
    p *= HPoly::from_coeffs({Rational(j), Rational(1)});
  return p;
}

namespace {

WeylElement word_element(int n, const Word& word) {
  WeylElement w = WeylElement::unit(n);
  for (int a : word) w = w * WeylElement::x_var(n, a);
  return w;
}

}  // namespace

Poly project_apply(const Metric& m, const WeylElement& w) {
  int grading = 0;
  if (!w.is_graded(&grading)) throw Error("projector needs a graded element");
  int n = m.dim();
  if (grading < 0) return Poly(n);  // every derivative kills the constant 1
  Sl2Triple sl2 = weyl_sl2(m);
  Poly half_r2 = radius_squared(m).scaled(make_rational(1, 2));
  Rational h0 = h_eigenvalue(grading, n);

  // The sum truncates structurally at k = floor(grading/2): beyond that the
  // term has negative grading and no derivative-free part survives on 1.
  Poly result(n);
  Poly r2_power = Poly::constant(n, Rational(1));
  WeylElement ad_k = w;  // (ad E')^k (w)
  for (int k = 0; 2 * k <= grading && !ad_k.is_zero(); ++k) {
    Poly base = weyl_apply(ad_k, Poly::constant(n, Rational(1)));
    if (!base.is_zero()) {
      Rational coeff = series_coefficient(k).eval(h0) / factorial(k);
      result += (r2_power * base).scaled(coeff);
    }
    r2_power = r2_power * half_r2;
    ad_k = commutator(sl2.E, ad_k);
  }
  return result;
}

Poly project_word(const Metric& m, const Word& word) {
  for (int a : word)
    if (a < 1 || a > m.dim()) throw Error("index out of range");
  return project_apply(m, word_element(m.dim(), word));
}

DynWeylElement project_general(const Metric& m, const WeylElement& w) {
  int n = m.dim();
  Sl2Triple sl2 = weyl_sl2(m);
  DynWeylElement result(n);
  WeylElement f_power = WeylElement::unit(n);
  WeylElement ad_k = w;
  for (int k = 0; !ad_k.is_zero(); ++k) {
    RationalFn coeff = series_coefficient(k) * RationalFn(Rational(1) / factorial(k));
    result += DynWeylElement(f_power * ad_k).scaled_left(coeff);
    f_power = f_power * sl2.F;
    ad_k = commutator(sl2.E, ad_k);
  }
  return result;
}

}  // namespace kgra
