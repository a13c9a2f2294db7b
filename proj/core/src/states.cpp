#include "kgra/states.hpp"

#include <algorithm>

namespace kgra {

namespace {

void check_word(const Metric& m, const Word& a) {
  for (int letter : a)
    if (letter < 1 || letter > m.dim()) throw Error("index out of range");
}

void matchings_rec(int l, int k, std::vector<bool>& used,
                   std::vector<std::pair<int, int>>& pairs,
                   std::vector<PartialMatching>& out) {
  if (static_cast<int>(pairs.size()) == k) {
    PartialMatching pm;
    pm.pairs = pairs;
    for (int i = 0; i < l; ++i)
      if (!used[i]) pm.singles.push_back(i);
    out.push_back(std::move(pm));
    return;
  }
  // Always pair the first free position; keeps each matching unique.
  int first = 0;
  while (first < l && used[first]) ++first;
  if (first >= l) return;
  used[first] = true;
  for (int j = first + 1; j < l; ++j) {
    if (used[j]) continue;
    used[j] = true;
    pairs.emplace_back(first, j);
    matchings_rec(l, k, used, pairs, out);
    pairs.pop_back();
    used[j] = false;
  }
  used[first] = false;
}

}  // namespace

std::vector<PartialMatching> enumerate_matchings(int l, int k) {
  if (l < 0 || k < 0 || 2 * k > l) return {};
  std::vector<PartialMatching> out;
  std::vector<bool> used(l, false);
  std::vector<std::pair<int, int>> pairs;
  matchings_rec(l, k, used, pairs, out);
  return out;
}

Poly state_explicit(const Metric& m, const Word& a) {
  check_word(m, a);
  int n = m.dim();
  int l = static_cast<int>(a.size());
  Rational h0 = h_eigenvalue(l, n);
  Poly half_r2 = radius_squared(m).scaled(make_rational(1, 2));

  Poly result(n);
  Poly r2_power = Poly::constant(n, Rational(1));
  for (int k = 0; 2 * k <= l; ++k) {
    Rational fk = series_coefficient(k).eval(h0);
    Poly block(n);
    for (const PartialMatching& pm : enumerate_matchings(l, k)) {
      Rational c = fk;
      for (auto [i, j] : pm.pairs) c *= m.upper(a[i], a[j]);
      if (c == 0) continue;
      MultiIndex e(n, 0);
      for (int s : pm.singles) e[a[s] - 1] += 1;
      block.add_term(e, c);
    }
    result += r2_power * block;
    r2_power = r2_power * half_r2;
  }
  return result;
}

WeylElement mixed_monomial_sum(const Metric& m, const Word& a, int d) {
  check_word(m, a);
  int n = m.dim();
  int l = static_cast<int>(a.size());
  WeylElement sum(n);
  if (std::abs(d) > l || (l - d) % 2 != 0) return sum;  // parity mismatch
  int t = (l - d) / 2;  // number of derivative slots

  // Iterate over all position subsets of size t carrying the derivative.
  std::vector<int> idx(t);
  for (int i = 0; i < t; ++i) idx[i] = i;
  for (;;) {
    WeylElement prod = WeylElement::unit(n);
    int next = 0;
    for (int pos = 0; pos < l; ++pos) {
      bool deriv = next < t && idx[next] == pos;
      if (deriv) ++next;
      prod = prod * (deriv ? WeylElement::d_up(m, a[pos])
                           : WeylElement::x_var(n, a[pos]));
    }
    sum += prod;
    if (t == 0) break;
    int i = t - 1;
    while (i >= 0 && idx[i] == l - t + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
  return sum;
}

WeylElement ordered_monomial_sum(const Metric& m, const Word& a, int d) {
  check_word(m, a);
  int n = m.dim();
  int l = static_cast<int>(a.size());
  WeylElement sum(n);
  if (std::abs(d) > l || (l - d) % 2 != 0) return sum;

  for (int k = 0; 2 * k <= l; ++k) {
    int rest = l - 2 * k;
    int t = (rest - d) / 2;       // derivative count among the singles
    int s = rest - t;             // x count
    if (t < 0 || s < 0 || (rest - d) % 2 != 0) continue;
    for (const PartialMatching& pm : enumerate_matchings(l, k)) {
      Rational eta_c(1);
      for (auto [i, j] : pm.pairs) eta_c *= m.upper(a[i], a[j]);
      if (eta_c == 0) continue;
      // Choose which singles become derivatives.
      std::vector<int> idx(t);
      for (int i = 0; i < t; ++i) idx[i] = i;
      for (;;) {
        std::vector<bool> deriv(rest, false);
        for (int i : idx) deriv[i] = true;
        MultiIndex xexp(n, 0);
        WeylElement dpart = WeylElement::unit(n);
        for (int i = 0; i < rest; ++i) {
          int letter = a[pm.singles[i]];
          if (deriv[i])
            dpart = dpart * WeylElement::d_up(m, letter);
          else
            xexp[letter - 1] += 1;
        }
        WeylElement xpart = WeylElement::monomial(n, xexp, MultiIndex(n, 0), eta_c);
        sum += xpart * dpart;
        if (t == 0) break;
        int i = t - 1;
        while (i >= 0 && idx[i] == rest - t + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  }
  return sum;
}

Poly raising_apply(const Metric& m, int a, const Poly& p) {
  if (a < 1 || a > m.dim()) throw Error("index out of range");
  if (m.dim() != p.dim()) throw Error("dimension mismatch");
  int n = m.dim();
  Poly half_r2 = radius_squared(m).scaled(make_rational(1, 2));
  Poly result(n);
  for (int deg = 0; deg <= p.degree(); ++deg) {
    Poly comp = p.homogeneous_component(deg);
    if (comp.is_zero()) continue;
    result += Poly::variable(n, a) * comp;
    Poly da(n);
    for (int b = 1; b <= n; ++b) {
      if (m.upper(a, b) == 0) continue;
      da += apply_partial(b, comp).scaled(m.upper(a, b));
    }
    if (da.is_zero()) continue;
    // Coefficient 1/(H+2) evaluated at the output degree deg + 1.
    Rational c = series_coefficient(1).eval(h_eigenvalue(deg + 1, n));
    result += (half_r2 * da).scaled(c);
  }
  return result;
}

Poly lift_and_apply(const Metric& m, const Poly& phi) {
  if (m.dim() != phi.dim()) throw Error("dimension mismatch");
  if (!apply_box(m, phi).is_zero()) throw Error("not in solution space");
  if (!phi.is_homogeneous()) throw Error("inhomogeneous input");
  Poly result(m.dim());
  for (const auto& [e, c] : phi.terms())
    result += state_explicit(m, word_of_exponent(e)).scaled(c);
  return result;
}

std::pair<MultiIndex, Rational> descend_to_constant(const Metric& m, const Poly& phi) {
  if (phi.is_zero()) throw Error("zero input");
  if (!phi.is_homogeneous()) throw Error("inhomogeneous input");
  // std::map orders exponents lexicographically; take the largest.
  const auto& [exp, xi] = *phi.terms().rbegin();
  Poly cur = phi;
  Rational expected = xi;
  for (int a = 1; a <= phi.dim(); ++a) {
    for (int i = 0; i < exp[a - 1]; ++i) cur = apply_partial(a, cur);
    expected *= factorial(exp[a - 1]);
  }
  if (cur != Poly::constant(phi.dim(), expected))
    throw Error("descent did not reach the expected constant");
  return {exp, expected};
}

std::vector<MultiIndex> monomials_of_degree(int n, int d) {
  std::vector<MultiIndex> out;
  MultiIndex e(n, 0);
  // Lexicographic enumeration of weak compositions of d into n parts.
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      e[pos] = left;
      out.push_back(e);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  if (d < 0) return out;
  rec(rec, 0, d);
  return out;
}

std::vector<Word> sorted_words(int n, int l) {
  std::vector<Word> out;
  Word w(l, 1);
  auto rec = [&](auto&& self, int pos, int minletter) -> void {
    if (pos == l) {
      out.push_back(w);
      return;
    }
    for (int a = minletter; a <= n; ++a) {
      w[pos] = a;
      self(self, pos + 1, a);
    }
  };
  rec(rec, 0, 1);
  return out;
}

Word word_of_exponent(const MultiIndex& e) {
  Word w;
  for (size_t i = 0; i < e.size(); ++i)
    for (int k = 0; k < e[i]; ++k) w.push_back(static_cast<int>(i) + 1);
  return w;
}

int kernel_dimension(int n, int d) {
  Rational dim = binomial(n + d - 1, d);
  if (d >= 2) dim -= binomial(n + d - 3, d - 2);
  return static_cast<int>(numerator(dim));
}

std::vector<Poly> solution_space_basis(const Metric& m, int d) {
  int n = m.dim();
  std::vector<MultiIndex> dom = monomials_of_degree(n, d);
  std::vector<MultiIndex> img = monomials_of_degree(n, d - 2);
  if (img.empty()) {  // degree 0 or 1: the box is identically zero
    std::vector<Poly> basis;
    for (const auto& e : dom) basis.push_back(Poly::monomial(n, e, Rational(1)));
    return basis;
  }
  std::map<MultiIndex, int> img_pos;
  for (size_t i = 0; i < img.size(); ++i) img_pos[img[i]] = static_cast<int>(i);

  Matrix box(img.size(), std::vector<Rational>(dom.size(), Rational(0)));
  for (size_t j = 0; j < dom.size(); ++j) {
    Poly b = apply_box(m, Poly::monomial(n, dom[j], Rational(1)));
    for (const auto& [e, c] : b.terms()) box[img_pos.at(e)][j] += c;
  }
  std::vector<Poly> basis;
  for (const auto& v : nullspace(box)) {
    Poly p(n);
    for (size_t j = 0; j < dom.size(); ++j) p.add_term(dom[j], v[j]);
    basis.push_back(std::move(p));
  }
  return basis;
}

}  // namespace kgra
