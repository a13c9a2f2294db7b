#include "kgra/zalgebra.hpp"

namespace kgra {

RationalFn ZElement::coeff(const XD& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? RationalFn() : it->second;
}

void ZElement::add_term(const XD& key, const RationalFn& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RationalFn ZElement::constant_term() const {
  return coeff(XD{MultiIndex(n_, 0), MultiIndex(n_, 0)});
}

ZElement ZElement::operator-() const {
  ZElement r(n_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

ZElement operator+(const ZElement& a, const ZElement& b) {
  if (a.n_ != b.n_) throw Error("dimension mismatch");
  ZElement r = a;
  for (const auto& [k, c] : b.terms_) r.add_term(k, c);
  return r;
}

ZElement operator-(const ZElement& a, const ZElement& b) { return a + (-b); }

ZElement ZElement::scaled(const RationalFn& c) const {
  ZElement r(n_);
  if (c.is_zero()) return r;
  for (const auto& [k, co] : terms_) r.add_term(k, c * co);
  return r;
}

ZEngine::ZEngine(const Metric& m) : m_(m), n_(m.dim()) {
  if (!m.is_diagonal()) throw Error("engine requires diagonal metric");
}

ZElement ZEngine::unit() const {
  ZElement u(n_);
  u.add_term(XD{MultiIndex(n_, 0), MultiIndex(n_, 0)}, RationalFn(1));
  return u;
}

ZElement ZEngine::x_gen(int a) const {
  if (a < 1 || a > n_) throw Error("index out of range");
  ZElement u(n_);
  MultiIndex e(n_, 0);
  e[a - 1] = 1;
  u.add_term(XD{e, MultiIndex(n_, 0)}, RationalFn(1));
  return u;
}

ZElement ZEngine::d_gen(int a) const {
  if (a < 1 || a > n_) throw Error("index out of range");
  ZElement u(n_);
  MultiIndex e(n_, 0);
  e[a - 1] = 1;
  u.add_term(XD{MultiIndex(n_, 0), e}, RationalFn(1));
  return u;
}

ZElement ZEngine::x_low(int a) const { return x_gen(a).scaled(RationalFn(m_.lower(a, a))); }
ZElement ZEngine::d_up(int a) const { return d_gen(a).scaled(RationalFn(m_.upper(a, a))); }

ZElement ZEngine::h_element() const { return unit().scaled(RationalFn::variable()); }

ZElement ZEngine::of_xword(const Word& w) const {
  ZElement r = unit();
  for (int a : w) r = mul(r, x_gen(a));
  return r;
}

ZElement ZEngine::of_dword(const Word& w) const {
  ZElement r = unit();
  for (int a : w) r = mul(r, d_gen(a));
  return r;
}

// Normal form of d^dexp x^xexp under the dynamical exchange relation, with
// every coefficient commuted to the far left. Entries are (x^delta d^eps).
const ZEngine::TermMap& ZEngine::exchange(const MultiIndex& dexp,
                                          const MultiIndex& xexp) const {
  auto key = std::make_pair(dexp, xexp);
  auto found = exch_memo_.find(key);
  if (found != exch_memo_.end()) return found->second;

  TermMap out;
  int dtot = mi_total(dexp);
  if (dtot == 0) {
    out.emplace(XD{xexp, MultiIndex(n_, 0)}, RationalFn(1));
  } else if (mi_total(xexp) == 0) {
    out.emplace(XD{MultiIndex(n_, 0), dexp}, RationalFn(1));
  } else if (dtot > 1) {
    // Peel the derivative adjacent to the x block: d^dexp = d^rest . d_a.
    int a = 1;
    while (dexp[a - 1] == 0) ++a;
    MultiIndex rest = dexp;
    rest[a - 1] -= 1;
    int rest_tot = dtot - 1;
    MultiIndex ea(n_, 0);
    ea[a - 1] = 1;
    const TermMap& inner = exchange(ea, xexp);
    for (const auto& [k, g] : inner) {
      RationalFn coeff = g.shifted(Rational(-rest_tot));
      const TermMap& outer = exchange(rest, k.x);
      for (const auto& [k2, h] : outer) {
        MultiIndex d2 = k2.d;
        for (int i = 0; i < n_; ++i) d2[i] += k.d[i];
        RationalFn c = coeff * h;
        auto [it, inserted] = out.emplace(XD{k2.x, d2}, c);
        if (!inserted) {
          it->second += c;
          if (it->second.is_zero()) out.erase(it);
        }
      }
    }
  } else {
    // Single d_a past x^b x^rest, b the lowest variable present.
    int a = 1;
    while (dexp[a - 1] == 0) ++a;
    int b = 1;
    while (xexp[b - 1] == 0) ++b;
    MultiIndex rest = xexp;
    rest[b - 1] -= 1;
    auto push = [&](XD k, const RationalFn& c) {
      auto [it, inserted] = out.emplace(std::move(k), c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
      }
    };
    if (a == b) push(XD{rest, MultiIndex(n_, 0)}, RationalFn(1));
    const TermMap& sub_a = exchange(dexp, rest);
    for (const auto& [k, g] : sub_a) {
      MultiIndex x2 = k.x;
      x2[b - 1] += 1;
      push(XD{x2, k.d}, g.shifted(1));
    }
    // (1/(H+1)) x_a d^b resolved through the diagonal metric.
    RationalFn dyn(HPoly(m_.lower(a, a) * m_.upper(b, b)),
                   HPoly::from_coeffs({Rational(1), Rational(1)}));
    MultiIndex eb(n_, 0);
    eb[b - 1] = 1;
    const TermMap& sub_b = exchange(eb, rest);
    for (const auto& [k, g] : sub_b) {
      MultiIndex x2 = k.x;
      x2[a - 1] += 1;
      push(XD{x2, k.d}, dyn * g.shifted(1));
    }
  }
  auto [it, ok] = exch_memo_.emplace(std::move(key), std::move(out));
  return it->second;
}

void ZEngine::eliminate_into(ZElement& out, const XD& key0, const RationalFn& c0) const {
  int deg = mi_total(key0.x) + mi_total(key0.d);
  long fuel = 10L * (1 + deg) * (1 + deg);
  std::vector<std::pair<XD, RationalFn>> work{{key0, c0}};
  while (!work.empty()) {
    auto [key, c] = std::move(work.back());
    work.pop_back();
    if (c.is_zero()) continue;
    int rn = key.x[n_ - 1], sn = key.d[n_ - 1];
    if (rn + sn <= 1) {
      out.add_term(key, c);
      continue;
    }
    if (--fuel < 0) throw Error("rewriting fuel exhausted");
    if (rn >= 2) {
      // (x^n)^2 -> -eta^{nn} sum_{a<n} eta_{aa} (x^a)^2
      for (int a = 1; a < n_; ++a) {
        Rational f = -m_.upper(n_, n_) * m_.lower(a, a);
        if (f == 0) continue;
        XD k2 = key;
        k2.x[n_ - 1] -= 2;
        k2.x[a - 1] += 2;
        work.emplace_back(std::move(k2), c * RationalFn(f));
      }
    } else if (sn >= 2) {
      // (d_n)^2 -> -eta_{nn} sum_{a<n} eta^{aa} (d_a)^2
      for (int a = 1; a < n_; ++a) {
        Rational f = -m_.lower(n_, n_) * m_.upper(a, a);
        if (f == 0) continue;
        XD k2 = key;
        k2.d[n_ - 1] -= 2;
        k2.d[a - 1] += 2;
        work.emplace_back(std::move(k2), c * RationalFn(f));
      }
    } else {
      // x^n d_n -> -(H + n/2) - sum_{a<n} x^a d_a, with the Cartan factor
      // commuted left past the remaining x's: -(H + |x|-1 + n/2).
      XD base = key;
      base.x[n_ - 1] -= 1;
      base.d[n_ - 1] -= 1;
      Rational shift = Rational(mi_total(key.x) - 1) + make_rational(n_, 2);
      RationalFn cartan(HPoly::from_coeffs({-shift, Rational(-1)}));
      work.emplace_back(base, c * cartan);
      for (int a = 1; a < n_; ++a) {
        XD k2 = base;
        k2.x[a - 1] += 1;
        k2.d[a - 1] += 1;
        work.emplace_back(std::move(k2), -c);
      }
    }
  }
}

ZElement ZEngine::mul_impl(const ZElement& u, const ZElement& v, bool eliminate) const {
  if (u.dim() != n_ || v.dim() != n_) throw Error("dimension mismatch");
  ZElement raw(n_);
  for (const auto& [ku, cu] : u.terms()) {
    int rtot = mi_total(ku.x), stot = mi_total(ku.d);
    for (const auto& [kv, cv] : v.terms()) {
      RationalFn c = cu * cv.shifted(Rational(rtot - stot));
      for (const auto& [km, g] : exchange(ku.d, kv.x)) {
        MultiIndex x2 = km.x, d2 = km.d;
        for (int i = 0; i < n_; ++i) {
          x2[i] += ku.x[i];
          d2[i] += kv.d[i];
        }
        raw.add_term(XD{std::move(x2), std::move(d2)}, c * g.shifted(Rational(rtot)));
      }
    }
  }
  if (!eliminate) return raw;
  ZElement out(n_);
  for (const auto& [k, c] : raw.terms()) eliminate_into(out, k, c);
  return out;
}

ZElement ZEngine::mul(const ZElement& u, const ZElement& v) const {
  return mul_impl(u, v, true);
}

ZElement ZEngine::mul_exchange_only(const ZElement& u, const ZElement& v) const {
  return mul_impl(u, v, false);
}

ZElement ZEngine::star(const ZElement& u) const {
  ZElement r(n_);
  for (const auto& [k, c] : u.terms()) {
    Rational shift = Rational(mi_total(k.d) - mi_total(k.x));
    r.add_term(XD{k.d, k.x}, c.shifted(shift));
  }
  return r;
}

Poly ZEngine::act(const ZElement& u, const Poly& phi) const {
  if (phi.dim() != n_) throw Error("dimension mismatch");
  if (!apply_box(m_, phi).is_zero()) throw Error("non-harmonic input");
  Poly result(n_);
  for (int deg = 0; deg <= phi.degree(); ++deg) {
    Poly comp = phi.homogeneous_component(deg);
    if (comp.is_zero()) continue;
    for (const auto& [k, c] : u.terms()) {
      Poly q = comp;
      for (int a = 1; a <= n_ && !q.is_zero(); ++a)
        for (int i = 0; i < k.d[a - 1]; ++i) q = apply_partial(a, q);
      for (int a = 1; a <= n_ && !q.is_zero(); ++a)
        for (int i = 0; i < k.x[a - 1]; ++i) q = raising_apply(m_, a, q);
      if (q.is_zero()) continue;
      int out_deg = deg - mi_total(k.d) + mi_total(k.x);
      result += q.scaled(c.eval(h_eigenvalue(out_deg, n_)));
    }
  }
  return result;
}

ZElement ZEngine::reduce(const DynWeylElement& w) const {
  if (w.dim() != n_) throw Error("dimension mismatch");
  ZElement out(n_);
  for (const auto& [k, c] : w.terms()) eliminate_into(out, k, c);
  return out;
}

}  // namespace kgra
