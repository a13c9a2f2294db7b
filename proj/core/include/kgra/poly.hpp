#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "kgra/metric.hpp"
#include "kgra/rational_fn.hpp"

namespace kgra {

// Exponent multi-index for x^1 ... x^n; entry i-1 is the exponent of x^i.
using MultiIndex = std::vector<int>;

inline int mi_total(const MultiIndex& a) {
  return std::accumulate(a.begin(), a.end(), 0);
}

inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const RationalFn& c) { return c.is_zero(); }

// Sparse multivariate polynomial over K (Rational or RationalFn).
template <class K>
class Polynomial {
 public:
  Polynomial() : n_(0) {}
  explicit Polynomial(int n) : n_(n) {}

  static Polynomial monomial(int n, MultiIndex exp, K coeff) {
    Polynomial p(n);
    if (!coeff_is_zero(coeff)) p.terms_.emplace(std::move(exp), std::move(coeff));
    return p;
  }
  static Polynomial constant(int n, K c) {
    return monomial(n, MultiIndex(n, 0), std::move(c));
  }
  // The variable x^a, 1 <= a <= n.
  static Polynomial variable(int n, int a) {
    check_index(n, a);
    MultiIndex e(n, 0);
    e[a - 1] = 1;
    return monomial(n, std::move(e), K(1));
  }

  int dim() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<MultiIndex, K>& terms() const { return terms_; }

  K coeff(const MultiIndex& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? K(0) : it->second;
  }

  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, mi_total(e));
    return d;
  }

  bool is_homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int t = mi_total(e);
      if (d < 0) d = t;
      if (t != d) return false;
    }
    return true;
  }

  Polynomial homogeneous_component(int d) const {
    Polynomial r(n_);
    for (const auto& [e, c] : terms_)
      if (mi_total(e) == d) r.terms_.emplace(e, c);
    return r;
  }

  void add_term(const MultiIndex& exp, const K& c) {
    if (coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
      it->second += c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial operator-() const {
    Polynomial r(n_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_dims(a, b);
    Polynomial r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_dims(a, b);
    Polynomial r(a.n_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        MultiIndex e = ea;
        for (int i = 0; i < a.n_; ++i) e[i] += eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  Polynomial scaled(const K& c) const {
    Polynomial r(n_);
    if (coeff_is_zero(c)) return r;
    for (const auto& [e, co] : terms_) r.add_term(e, co * c);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  static void check_dims(const Polynomial& a, const Polynomial& b) {
    if (a.n_ != b.n_) throw Error("dimension mismatch");
  }
  static void check_index(int n, int a) {
    if (a < 1 || a > n) throw Error("index out of range");
  }

  int n_;
  std::map<MultiIndex, K> terms_;
};

using Poly = Polynomial<Rational>;
using PolyFn = Polynomial<RationalFn>;

// Formal partial derivative d/dx^a, 1 <= a <= n.
template <class K>
Polynomial<K> apply_partial(int a, const Polynomial<K>& p) {
  if (a < 1 || a > p.dim()) throw Error("index out of range");
  Polynomial<K> r(p.dim());
  for (const auto& [e, c] : p.terms()) {
    if (e[a - 1] == 0) continue;
    MultiIndex f = e;
    f[a - 1] -= 1;
    r.add_term(f, c * K(e[a - 1]));
  }
  return r;
}

// sum_{a,b} eta^{ab} d_a d_b p — the generalized Laplace/d'Alembert operator.
template <class K>
Polynomial<K> apply_box(const Metric& m, const Polynomial<K>& p) {
  if (m.dim() != p.dim()) throw Error("dimension mismatch");
  Polynomial<K> r(p.dim());
  for (int a = 1; a <= m.dim(); ++a) {
    Polynomial<K> da = apply_partial(a, p);
    if (da.is_zero()) continue;
    for (int b = 1; b <= m.dim(); ++b) {
      if (m.upper(a, b) == 0) continue;
      r += apply_partial(b, da).scaled(K(m.upper(a, b)));
    }
  }
  return r;
}

// x_b x^b = sum_{a,b} eta_{ab} x^a x^b, the radius squared.
inline Poly radius_squared(const Metric& m) {
  Poly r(m.dim());
  for (int a = 1; a <= m.dim(); ++a)
    for (int b = 1; b <= m.dim(); ++b) {
      if (m.lower(a, b) == 0) continue;
      MultiIndex e(m.dim(), 0);
      e[a - 1] += 1;
      e[b - 1] += 1;
      r.add_term(e, m.lower(a, b));
    }
  return r;
}

// Scalar by which H acts on degree-d homogeneous polynomials: -d - n/2.
inline Rational h_eigenvalue(int d, int n) {
  if (d < 0) throw Error("negative degree");
  return Rational(-d) - make_rational(n, 2);
}

}  // namespace kgra
