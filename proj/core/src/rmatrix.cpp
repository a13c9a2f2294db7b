#include "kgra/rmatrix.hpp"

namespace kgra {

RationalFn r_entry(const Metric& m, int a, int c, int b, int d) {
  for (int i : {a, b, c, d})
    if (i < 1 || i > m.dim()) throw Error("index out of range");
  RationalFn r;
  if (c == b && a == d) r += RationalFn(1);
  Rational eta2 = m.lower(a, c) * m.upper(b, d);
  if (eta2 != 0)
    r += RationalFn(HPoly(eta2), HPoly::from_coeffs({Rational(1), Rational(1)}));
  return r;
}

RationalFn STensor::get(const Word& lower, const Word& upper) const {
  auto it = entries_.find({lower, upper});
  return it == entries_.end() ? RationalFn() : it->second;
}

void STensor::add(const Word& lower, const Word& upper, const RationalFn& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = entries_.emplace(std::make_pair(lower, upper), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

namespace {

// Nonzero positions of a symmetric rational matrix, 1-based.
std::vector<std::pair<int, int>> nonzero_entries(const Matrix& m) {
  std::vector<std::pair<int, int>> out;
  int n = static_cast<int>(m.size());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (m[i - 1][j - 1] != 0) out.emplace_back(i, j);
  return out;
}

void all_words_rec(int n, int l, Word& w, std::vector<Word>& out) {
  if (static_cast<int>(w.size()) == l) {
    out.push_back(w);
    return;
  }
  for (int a = 1; a <= n; ++a) {
    w.push_back(a);
    all_words_rec(n, l, w, out);
    w.pop_back();
  }
}

std::vector<Word> all_words(int n, int l) {
  std::vector<Word> out;
  Word w;
  all_words_rec(n, l, w, out);
  return out;
}

}  // namespace

STensor s_tensor_recursive(const Metric& m, int r) {
  if (r < 1) throw Error("rank below 1");
  int n = m.dim();
  STensor s(n, 1);
  for (int a = 1; a <= n; ++a) s.add({a}, {a}, RationalFn(1));
  if (r == 1) return s;

  auto eta_nz = nonzero_entries(m.eta());
  auto inv_nz = nonzero_entries(m.eta_inv());

  for (int rank = 2; rank <= r; ++rank) {
    STensor next(n, rank);
    // Kronecker block.
    for (const Word& w : all_words(n, rank)) next.add(w, w, RationalFn(1));
    Rational arg_shift = Rational(-(rank - 1));
    for (const auto& [key, v] : s.entries()) {
      const Word& lower = key.first;  // (t, a3, ..., ar)
      const Word& upper = key.second; // (b2, ..., br)
      int t = lower[0];
      // Delta part of R_{a1 a2}^{b1 t}: a1 = t, a2 = b1.
      for (int b1 = 1; b1 <= n; ++b1) {
        Word lw{t, b1};
        lw.insert(lw.end(), lower.begin() + 1, lower.end());
        Word uw{b1};
        uw.insert(uw.end(), upper.begin(), upper.end());
        next.add(lw, uw, v);
      }
      // eta part: eta_{a1 a2} eta^{b1 t} / (H + 1), shifted to H - rank + 2.
      for (auto [b1, tt] : inv_nz) {
        if (tt != t) continue;
        for (auto [a1, a2] : eta_nz) {
          RationalFn c(HPoly(m.lower(a1, a2) * m.upper(b1, t)),
                       HPoly::from_coeffs({Rational(1), Rational(1)}));
          c = c.shifted(arg_shift);
          Word lw{a1, a2};
          lw.insert(lw.end(), lower.begin() + 1, lower.end());
          Word uw{b1};
          uw.insert(uw.end(), upper.begin(), upper.end());
          next.add(lw, uw, c * v);
        }
      }
    }
    s = std::move(next);
  }
  return s;
}

STensor s_tensor_explicit(const Metric& m, int r) {
  if (r < 1) throw Error("rank below 1");
  int n = m.dim();
  STensor s(n, r);
  // j = 0 block: identity on every word.
  for (const Word& w : all_words(n, r)) s.add(w, w, RationalFn(1));

  // j >= 1: chain R_{c_i a_{i+1}}^{b_i c_{i+1}}(H - r + i), c_1 = a_1,
  // then b_{j+1} = c_{j+1} and deltas on the tail.
  for (int j = 1; j <= r - 1; ++j) {
    // chains: map (a-prefix, b-prefix, c_cur) -> value
    struct Chain {
      Word a, b;
      int c;
    };
    std::vector<std::pair<Chain, RationalFn>> chains;
    for (int a1 = 1; a1 <= n; ++a1)
      chains.push_back({Chain{{a1}, {}, a1}, RationalFn(1)});
    for (int i = 1; i <= j; ++i) {
      Rational arg = Rational(-r + i);
      std::vector<std::pair<Chain, RationalFn>> next;
      for (const auto& [ch, val] : chains) {
        for (int ai = 1; ai <= n; ++ai)
          for (int bi = 1; bi <= n; ++bi)
            for (int ci = 1; ci <= n; ++ci) {
              RationalFn rf = r_entry(m, ch.c, ai, bi, ci);
              if (rf.is_zero()) continue;
              Chain ext = ch;
              ext.a.push_back(ai);
              ext.b.push_back(bi);
              ext.c = ci;
              next.push_back({std::move(ext), val * rf.shifted(arg)});
            }
      }
      chains = std::move(next);
    }
    for (const auto& [ch, val] : chains) {
      // Close the chain and pad with deltas.
      Word a = ch.a, b = ch.b;
      b.push_back(ch.c);
      std::vector<Word> tails = all_words(n, r - j - 1);
      for (const Word& tail : tails) {
        Word aw = a, bw = b;
        aw.insert(aw.end(), tail.begin(), tail.end());
        bw.insert(bw.end(), tail.begin(), tail.end());
        s.add(aw, bw, val);
      }
    }
  }
  return s;
}

RationalFn GramTable::get(const Word& a, const Word& b) const {
  auto it = entries_.find({a, b});
  return it == entries_.end() ? RationalFn() : it->second;
}

void GramTable::add(const Word& a, const Word& b, const RationalFn& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = entries_.emplace(std::make_pair(a, b), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

GramTable gram_table_via_s(const Metric& m, int r) {
  int n = m.dim();
  GramTable table(n, 0);
  table.add({}, {}, RationalFn(1));
  for (int rank = 1; rank <= r; ++rank) {
    STensor s = s_tensor_recursive(m, rank);
    // Previous table keyed by its upper word for the contraction.
    std::map<Word, std::vector<std::pair<Word, RationalFn>>> by_upper;
    for (const auto& [key, v] : table.entries())
      by_upper[key.second].push_back({key.first, v});
    GramTable next(n, rank);
    for (const auto& [key, sval] : s.entries()) {
      const Word& lower = key.first;  // (a1, c2, ..., cr)
      const Word& upper = key.second; // (b1, ..., br)
      Word c(lower.begin() + 1, lower.end());
      auto it = by_upper.find(c);
      if (it == by_upper.end()) continue;
      for (const auto& [atail, gval] : it->second) {
        Word a{lower[0]};
        a.insert(a.end(), atail.begin(), atail.end());
        next.add(a, upper, sval * gval);
      }
    }
    table = std::move(next);
  }
  return table;
}

RationalFn gram_via_s(const Metric& m, const Word& a, const Word& b) {
  if (a.size() != b.size()) return RationalFn();
  if (a.empty()) return RationalFn(1);
  return gram_table_via_s(m, static_cast<int>(a.size())).get(a, b);
}

const GramRecursion::Element& GramRecursion::dapply(int a, const MultiIndex& exp) const {
  auto key = std::make_pair(a, exp);
  auto found = memo_.find(key);
  if (found != memo_.end()) return found->second;

  Element out;
  if (mi_total(exp) > 0) {
    int b = 1;
    while (exp[b - 1] == 0) ++b;
    MultiIndex rest = exp;
    rest[b - 1] -= 1;
    auto push = [&](const MultiIndex& e, const RationalFn& c) {
      if (c.is_zero()) return;
      auto [it, inserted] = out.emplace(e, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
      }
    };
    // d_a x^b = delta_a^b + R_{ac}^{bd}(H) x^c d_d.
    if (a == b) push(rest, RationalFn(1));
    // Delta part of R: c = b, d = a.
    for (const auto& [e, g] : dapply(a, rest)) {
      MultiIndex e2 = e;
      e2[b - 1] += 1;
      push(e2, g.shifted(1));
    }
    // eta part: coefficient eta_{ac} eta^{bd} / (H+1) on x^c d_d.
    for (int c = 1; c <= n_; ++c) {
      if (m_.lower(a, c) == 0) continue;
      for (int d = 1; d <= n_; ++d) {
        Rational e2c = m_.lower(a, c) * m_.upper(b, d);
        if (e2c == 0) continue;
        RationalFn coeff(HPoly(e2c), HPoly::from_coeffs({Rational(1), Rational(1)}));
        for (const auto& [e, g] : dapply(d, rest)) {
          MultiIndex e2 = e;
          e2[c - 1] += 1;
          push(e2, coeff * g.shifted(1));
        }
      }
    }
  }
  auto [it, ok] = memo_.emplace(std::move(key), std::move(out));
  return it->second;
}

RationalFn GramRecursion::gram(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return RationalFn();
  for (int x : a)
    if (x < 1 || x > n_) throw Error("index out of range");
  for (int x : b)
    if (x < 1 || x > n_) throw Error("index out of range");
  MultiIndex e0(n_, 0);
  for (int x : b) e0[x - 1] += 1;
  Element v{{e0, RationalFn(1)}};
  for (int letter : a) {
    Element next;
    for (const auto& [exp, g] : v) {
      RationalFn moved = g.shifted(-1);  // d_a past the left coefficient
      for (const auto& [e2, h] : dapply(letter, exp)) {
        RationalFn c = moved * h;
        if (c.is_zero()) continue;
        auto [it, inserted] = next.emplace(e2, c);
        if (!inserted) {
          it->second += c;
          if (it->second.is_zero()) next.erase(it);
        }
      }
    }
    v = std::move(next);
  }
  auto it = v.find(MultiIndex(n_, 0));
  return it == v.end() ? RationalFn() : it->second;
}

RationalFn gram_via_recursion(const Metric& m, const Word& a, const Word& b) {
  return GramRecursion(m).gram(a, b);
}

RationalFn gram_via_engine(const ZEngine& eng, const Word& a, const Word& b) {
  if (a.size() != b.size()) return RationalFn();
  int n = eng.dim();
  auto word_monomial = [&](const Word& w) {
    MultiIndex e(n, 0);
    for (int x : w) {
      if (x < 1 || x > n) throw Error("index out of range");
      e[x - 1] += 1;
    }
    ZElement z(n);
    z.add_term(XD{e, MultiIndex(n, 0)}, RationalFn(1));
    return z;
  };
  ZElement u = eng.star(word_monomial(a));
  return eng.mul_exchange_only(u, word_monomial(b)).constant_term();
}

}  // namespace kgra
