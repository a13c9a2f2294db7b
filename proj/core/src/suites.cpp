#include "kgra/suites.hpp"

#include <json.hpp>

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

#include "kgra/render.hpp"
#include "kgra/states.hpp"

namespace kgra {

using nlohmann::json;

bool SuiteReport::all_pass() const {
  for (const auto& c : cases)
    if (!c.pass) return false;
  return true;
}

int SuiteReport::failures() const {
  int f = 0;
  for (const auto& c : cases)
    if (!c.pass) ++f;
  return f;
}

void SuiteReport::add(std::string id, bool pass, std::string detail) {
  cases.push_back(CaseResult{std::move(id), pass, std::move(detail)});
}

std::string SuiteReport::to_json() const {
  json jcases = json::array();
  for (const auto& c : cases) {
    json jc{{"relation", c.id}, {"status", c.pass ? "pass" : "fail"}};
    if (!c.detail.empty()) jc["witness"] = c.detail;
    jcases.push_back(std::move(jc));
  }
  json j{{"suite", name}, {"cases", jcases}, {"failures", failures()}};
  if (!notes.empty()) j["notes"] = notes;
  return j.dump(2);
}

std::string SuiteReport::summary() const {
  std::ostringstream os;
  os << name << ": " << (cases.size() - failures()) << "/" << cases.size()
     << " checks pass";
  if (failures() > 0) os << " (" << failures() << " FAIL)";
  return os.str();
}

namespace {

std::string word_str(const Word& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

// Exact spanning set of the solution space in each degree.
std::vector<std::vector<Poly>> solution_bases(const Metric& m, int max_deg) {
  std::vector<std::vector<Poly>> bases;
  for (int d = 0; d <= max_deg; ++d) bases.push_back(solution_space_basis(m, d));
  return bases;
}

Rational eval_at_degree(const RationalFn& f, int deg, int n) {
  return f.eval(h_eigenvalue(deg, n));
}

// Single-divisor multivariate division: true iff p is divisible by q.
bool divisible_by(const Poly& p, const Poly& q) {
  if (p.is_zero()) return true;
  // Leading monomial of q in the lexicographic order of the term map.
  auto lead = *q.terms().rbegin();
  Poly rem = p;
  for (;;) {
    // Find a term of rem divisible by lead.
    bool reduced = false;
    for (auto it = rem.terms().rbegin(); it != rem.terms().rend(); ++it) {
      const MultiIndex& e = it->first;
      bool ok = true;
      for (size_t i = 0; i < e.size(); ++i)
        if (e[i] < lead.first[i]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      MultiIndex diff = e;
      for (size_t i = 0; i < e.size(); ++i) diff[i] -= lead.first[i];
      Rational c = it->second / lead.second;
      rem -= q * Poly::monomial(p.dim(), diff, c);
      reduced = true;
      break;
    }
    if (rem.is_zero()) return true;
    if (!reduced) return false;
  }
}

}  // namespace

SuiteReport verify_relations(const Metric& m, int max_deg) {
  SuiteReport rep;
  rep.name = "relations(n=" + std::to_string(m.dim()) + ")";
  int n = m.dim();
  ZEngine eng(m);
  RationalFn dyn = RationalFn(HPoly(1), HPoly::from_coeffs({Rational(1), Rational(1)}));

  // --- (i) identities of engine normal forms -------------------------------
  {
    bool ok = true;
    std::string witness;
    for (int a = 1; a <= n && ok; ++a)
      for (int b = a; b <= n && ok; ++b)
        if (eng.mul(eng.x_gen(a), eng.x_gen(b)) != eng.mul(eng.x_gen(b), eng.x_gen(a))) {
          ok = false;
          witness = "a=" + std::to_string(a) + ",b=" + std::to_string(b);
        }
    rep.add("engine:(a) x-commute", ok, witness);
  }
  {
    bool ok = true;
    std::string witness;
    for (int a = 1; a <= n && ok; ++a)
      for (int b = a; b <= n && ok; ++b)
        if (eng.mul(eng.d_gen(a), eng.d_gen(b)) != eng.mul(eng.d_gen(b), eng.d_gen(a))) {
          ok = false;
          witness = "a=" + std::to_string(a) + ",b=" + std::to_string(b);
        }
    rep.add("engine:(b) d-commute", ok, witness);
  }
  {
    bool ok = true;
    std::string witness;
    for (int a = 1; a <= n && ok; ++a)
      for (int b = 1; b <= n && ok; ++b) {
        ZElement lhs = eng.mul(eng.d_gen(a), eng.x_gen(b));
        ZElement rhs = eng.mul(eng.x_gen(b), eng.d_gen(a));
        if (a == b) rhs = rhs + eng.unit();
        rhs = rhs + eng.mul(eng.x_low(a), eng.d_up(b)).scaled(dyn);
        if (lhs != rhs) {
          ok = false;
          witness = "a=" + std::to_string(a) + ",b=" + std::to_string(b);
        }
      }
    rep.add("engine:(c) dynamical exchange", ok, witness);
  }
  {
    bool ok = true;
    RationalFn hp1 = RationalFn::variable() + RationalFn(1);
    for (int a = 1; a <= n && ok; ++a)
      ok = eng.mul(eng.x_gen(a), eng.h_element()) == eng.x_gen(a).scaled(hp1);
    rep.add("engine:(d) x past H", ok);
    ok = true;
    for (int a = 1; a <= n && ok; ++a)
      ok = eng.mul(eng.h_element(), eng.d_gen(a)) ==
           eng.mul(eng.d_gen(a), eng.unit().scaled(hp1));
    rep.add("engine:(e) H past d", ok);
  }
  {
    ZElement acc(n);
    for (int a = 1; a <= n; ++a) acc = acc + eng.mul(eng.x_low(a), eng.x_gen(a));
    rep.add("engine:(f) x_a x^a = 0", acc.is_zero(), acc.is_zero() ? "" : to_plain(acc));
  }
  {
    ZElement acc(n);
    for (int a = 1; a <= n; ++a) acc = acc + eng.mul(eng.d_gen(a), eng.d_up(a));
    rep.add("engine:(g) d_a d^a = 0", acc.is_zero(), acc.is_zero() ? "" : to_plain(acc));
  }
  {
    ZElement acc(n);
    for (int a = 1; a <= n; ++a) acc = acc + eng.mul(eng.x_gen(a), eng.d_gen(a));
    acc = acc + eng.unit().scaled(RationalFn(HPoly::from_coeffs(
                    {make_rational(n, 2), Rational(1)})));
    rep.add("engine:(h) x^a d_a = -(H+n/2)", acc.is_zero(),
            acc.is_zero() ? "" : to_plain(acc));
  }

  // --- (ii) operator identities on exact solution bases --------------------
  auto bases = solution_bases(m, max_deg);
  auto raise = [&](int a, const Poly& p) { return raising_apply(m, a, p); };

  {
    bool ok = true;
    std::string witness;
    for (int a = 1; a <= n && ok; ++a)
      for (int b = a + 1; b <= n && ok; ++b)
        for (int d = 0; d <= max_deg && ok; ++d)
          for (const Poly& phi : bases[d])
            if (raise(a, raise(b, phi)) != raise(b, raise(a, phi))) {
              ok = false;
              witness = "a=" + std::to_string(a) + ",b=" + std::to_string(b) +
                        ",deg=" + std::to_string(d);
              break;
            }
    rep.add("action:(a) raisings commute", ok, witness);
  }
  {
    bool ok = true;
    for (int a = 1; a <= n && ok; ++a)
      for (int b = a + 1; b <= n && ok; ++b)
        for (int d = 2; d <= max_deg && ok; ++d)
          for (const Poly& phi : bases[d])
            if (apply_partial(a, apply_partial(b, phi)) !=
                apply_partial(b, apply_partial(a, phi))) {
              ok = false;
              break;
            }
    rep.add("action:(b) partials commute", ok);
  }
  {
    bool ok = true;
    std::string witness;
    for (int a = 1; a <= n && ok; ++a)
      for (int b = 1; b <= n && ok; ++b)
        for (int d = 0; d <= max_deg && ok; ++d)
          for (const Poly& phi : bases[d]) {
            Poly lhs = apply_partial(a, raise(b, phi));
            Poly rhs = raise(b, apply_partial(a, phi));
            if (a == b) rhs += phi;
            // (1/(H+1)) x_a d^b acting on phi, coefficient at degree d.
            Rational c = eval_at_degree(dyn, d, n);
            for (int cc = 1; cc <= n; ++cc) {
              if (m.lower(a, cc) == 0) continue;
              for (int dd = 1; dd <= n; ++dd) {
                Rational e2 = m.lower(a, cc) * m.upper(b, dd);
                if (e2 == 0) continue;
                Poly t = apply_partial(dd, phi);
                if (t.is_zero()) continue;
                rhs += raise(cc, t).scaled(c * e2);
              }
            }
            if (lhs != rhs) {
              ok = false;
              witness = "a=" + std::to_string(a) + ",b=" + std::to_string(b) +
                        ",deg=" + std::to_string(d);
              break;
            }
          }
    rep.add("action:(c) dynamical exchange", ok, witness);
  }
  {
    // (d)/(e): both sides act by the same scalar on homogeneous solutions.
    bool ok = true;
    for (int a = 1; a <= n && ok; ++a)
      for (int d = 0; d <= max_deg && ok; ++d)
        for (const Poly& phi : bases[d]) {
          Poly lhs = raise(a, phi).scaled(h_eigenvalue(d, n));
          Poly rhs = raise(a, phi).scaled(h_eigenvalue(d + 1, n) + 1);
          if (lhs != rhs) {
            ok = false;
            break;
          }
        }
    rep.add("action:(d) x past H", ok);
    ok = true;
    for (int a = 1; a <= n && ok; ++a)
      for (int d = 1; d <= max_deg && ok; ++d)
        for (const Poly& phi : bases[d]) {
          Poly da = apply_partial(a, phi);
          if (da.scaled(h_eigenvalue(d, n) + 1) != da.scaled(h_eigenvalue(d - 1, n))) {
            ok = false;
            break;
          }
        }
    rep.add("action:(e) H past d", ok);
  }
  {
    bool ok = true;
    std::string witness;
    for (int d = 0; d <= max_deg && ok; ++d)
      for (const Poly& phi : bases[d]) {
        Poly acc(n);
        for (int a = 1; a <= n; ++a)
          for (int b = 1; b <= n; ++b) {
            if (m.lower(a, b) == 0) continue;
            acc += raise(a, raise(b, phi)).scaled(m.lower(a, b));
          }
        if (!acc.is_zero()) {
          ok = false;
          witness = "deg=" + std::to_string(d);
          break;
        }
      }
    rep.add("action:(f) x_a x^a = 0", ok, witness);
  }
  {
    bool ok = true;
    for (int d = 0; d <= max_deg && ok; ++d)
      for (const Poly& phi : bases[d])
        if (!apply_box(m, phi).is_zero()) {
          ok = false;
          break;
        }
    rep.add("action:(g) d_a d^a = 0", ok);
  }
  {
    // sum_a xtilde^a d_a phi = deg * phi on solutions.
    bool ok = true;
    std::string witness;
    for (int d = 0; d <= max_deg && ok; ++d)
      for (const Poly& phi : bases[d]) {
        Poly acc(n);
        for (int a = 1; a <= n; ++a) {
          Poly t = apply_partial(a, phi);
          if (!t.is_zero()) acc += raise(a, t);
        }
        if (acc != phi.scaled(Rational(d))) {
          ok = false;
          witness = "deg=" + std::to_string(d);
          break;
        }
      }
    rep.add("action:(h) x^a d_a = -(H+n/2)", ok, witness);
  }

  // --- (iii) projector route on generator pairs ----------------------------
  {
    bool ok = true;
    std::string witness;
    auto weyl_gen = [&](int g) {
      return g <= n ? WeylElement::x_var(n, g) : WeylElement::d_var(n, g - n);
    };
    auto z_gen = [&](int g) { return g <= n ? eng.x_gen(g) : eng.d_gen(g - n); };
    for (int g1 = 1; g1 <= 2 * n && ok; ++g1)
      for (int g2 = 1; g2 <= 2 * n && ok; ++g2) {
        DynWeylElement coset =
            DynWeylElement(weyl_gen(g1)) * project_general(m, weyl_gen(g2));
        ZElement via_projector = eng.reduce(coset);
        ZElement via_engine = eng.mul(z_gen(g1), z_gen(g2));
        if (via_projector != via_engine) {
          ok = false;
          witness = "g1=" + std::to_string(g1) + ",g2=" + std::to_string(g2);
        }
      }
    rep.add("oracle: generator pairs vs projector", ok, witness);
  }
  return rep;
}

SuiteReport verify_monomial_lemma(const Metric& m, int lmax) {
  SuiteReport rep;
  rep.name = "monomial-lemma(n=" + std::to_string(m.dim()) + ")";
  int n = m.dim();
  for (int l = 0; l <= lmax; ++l) {
    // All words of length l.
    std::vector<Word> words;
    Word w(l, 1);
    auto rec = [&](auto&& self, int pos) -> void {
      if (pos == l) {
        words.push_back(w);
        return;
      }
      for (int a = 1; a <= n; ++a) {
        w[pos] = a;
        self(self, pos + 1);
      }
    };
    rec(rec, 0);
    for (int d = -l; d <= l; d += 2) {
      bool ok = true;
      std::string witness;
      for (const Word& a : words) {
        if (mixed_monomial_sum(m, a, d) != ordered_monomial_sum(m, a, d)) {
          ok = false;
          witness = "word=" + word_str(a);
          break;
        }
      }
      rep.add("l=" + std::to_string(l) + ",d=" + std::to_string(d), ok, witness);
    }
  }
  return rep;
}

SuiteReport verify_dual_path(const Metric& m, int lmax) {
  SuiteReport rep;
  rep.name = "dual-path(n=" + std::to_string(m.dim()) + ")";
  int n = m.dim();
  Poly r2 = radius_squared(m);
  std::mt19937_64 rng(7);
  for (int l = 0; l <= lmax; ++l) {
    bool eq = true, harm = true, perm = true, lead = true;
    std::string witness;
    for (const Word& a : sorted_words(n, l)) {
      Poly st = state_explicit(m, a);
      if (st != project_word(m, a)) {
        eq = false;
        witness = "word=" + word_str(a);
        break;
      }
      if (!apply_box(m, st).is_zero()) {
        harm = false;
        witness = "word=" + word_str(a);
        break;
      }
      Word p = a;
      std::shuffle(p.begin(), p.end(), rng);
      if (state_explicit(m, p) != st) {
        perm = false;
        witness = "word=" + word_str(a);
        break;
      }
      MultiIndex e(n, 0);
      for (int letter : a) e[letter - 1] += 1;
      if (!divisible_by(st - Poly::monomial(n, e, Rational(1)), r2)) {
        lead = false;
        witness = "word=" + word_str(a);
        break;
      }
    }
    rep.add("l=" + std::to_string(l) + " explicit==projector", eq, eq ? "" : witness);
    rep.add("l=" + std::to_string(l) + " harmonic", harm, harm ? "" : witness);
    rep.add("l=" + std::to_string(l) + " permutation-invariant", perm, perm ? "" : witness);
    rep.add("l=" + std::to_string(l) + " correction divisible by r^2", lead,
            lead ? "" : witness);
  }
  return rep;
}

SuiteReport verify_gram(const Metric& m, int rmax) {
  SuiteReport rep;
  rep.name = "gram(n=" + std::to_string(m.dim()) + ")";
  int n = m.dim();

  for (int r = 1; r <= rmax; ++r) {
    bool ok = s_tensor_recursive(m, r) == s_tensor_explicit(m, r);
    rep.add("S recursive == explicit, r=" + std::to_string(r), ok);
  }

  auto words_of = [&](int l) {
    std::vector<Word> out;
    Word w;
    auto rec = [&](auto&& self) -> void {
      if (static_cast<int>(w.size()) == l) {
        out.push_back(w);
        return;
      }
      for (int a = 1; a <= n; ++a) {
        w.push_back(a);
        self(self);
        w.pop_back();
      }
    };
    rec(rec);
    return out;
  };

  // Pinned low-rank formulas.
  {
    GramTable t1 = gram_table_via_s(m, 1);
    bool ok = true;
    for (int a = 1; a <= n && ok; ++a)
      for (int b = 1; b <= n && ok; ++b)
        ok = t1.get({a}, {b}) == (a == b ? RationalFn(1) : RationalFn());
    rep.add("rank 1: <x^a|x^b> = delta", ok);
  }
  {
    GramTable t2 = gram_table_via_s(m, 2);
    bool ok = true;
    std::string witness;
    for (const Word& a : words_of(2)) {
      for (const Word& b : words_of(2)) {
        RationalFn expect = r_entry(m, a[0], a[1], b[0], b[1]).shifted(-1);
        if (a == b) expect += RationalFn(1);
        if (t2.get(a, b) != expect) {
          ok = false;
          witness = word_str(a) + word_str(b);
          break;
        }
      }
      if (!ok) break;
    }
    rep.add("rank 2: delta delta + R(H-1)", ok, witness);
  }
  if (rmax >= 3) {
    // Six-term rank-3 expansion, built literally term by term.
    GramTable t3 = gram_table_via_s(m, 3);
    bool ok = true;
    std::string witness;
    for (const Word& a : words_of(3)) {
      for (const Word& b : words_of(3)) {
        RationalFn e;
        if (a == b) e += RationalFn(1);
        if (a[2] == b[2]) e += r_entry(m, a[0], a[1], b[0], b[1]).shifted(-1);
        for (int r2i = 1; r2i <= n; ++r2i)
          e += r_entry(m, a[0], a[1], b[0], r2i).shifted(-2) *
               r_entry(m, r2i, a[2], b[1], b[2]).shifted(-1);
        if (a[0] == b[0]) e += r_entry(m, a[1], a[2], b[1], b[2]).shifted(-1);
        for (int c2 = 1; c2 <= n; ++c2)
          e += r_entry(m, a[0], c2, b[0], b[1]).shifted(-2) *
               r_entry(m, a[1], a[2], c2, b[2]).shifted(-1);
        for (int c2 = 1; c2 <= n; ++c2)
          for (int r2i = 1; r2i <= n; ++r2i)
            for (int c3 = 1; c3 <= n; ++c3)
              e += r_entry(m, a[0], c2, b[0], r2i).shifted(-2) *
                   r_entry(m, r2i, c3, b[1], b[2]).shifted(-1) *
                   r_entry(m, a[1], a[2], c2, c3).shifted(-1);
        if (t3.get(a, b) != e) {
          ok = false;
          witness = word_str(a) + word_str(b);
          break;
        }
      }
      if (!ok) break;
    }
    rep.add("rank 3: six-term expansion", ok, witness);
  }

  // Three-way agreement.
  GramRecursion grec(m);
  std::optional<ZEngine> eng;
  if (m.is_diagonal()) eng.emplace(m);
  for (int r = 1; r <= rmax; ++r) {
    GramTable table = gram_table_via_s(m, r);
    bool rec_ok = true, eng_ok = true;
    std::string witness_rec, witness_eng;
    for (const Word& a : words_of(r))
      for (const Word& b : words_of(r)) {
        RationalFn s_val = table.get(a, b);
        if (rec_ok && grec.gram(a, b) != s_val) {
          rec_ok = false;
          witness_rec = word_str(a) + word_str(b);
        }
        if (eng && r <= 3 && eng_ok && gram_via_engine(*eng, a, b) != s_val) {
          eng_ok = false;
          witness_eng = word_str(a) + word_str(b);
        }
      }
    rep.add("gram s == recursion, r=" + std::to_string(r), rec_ok, witness_rec);
    if (eng && r <= 3)
      rep.add("gram s == engine, r=" + std::to_string(r), eng_ok, witness_eng);
  }

  // Mixed lengths pair to zero.
  rep.add("degree rule: mixed lengths vanish",
          gram_via_s(m, {1}, {1, 1}).is_zero() &&
              gram_via_recursion(m, {1, 2}, {1}).is_zero());

  // Report-only probes.
  {
    int asym = 0;
    GramTable t = gram_table_via_s(m, std::min(rmax, 3));
    for (const auto& [key, v] : t.entries())
      if (v != t.get(key.second, key.first)) ++asym;
    rep.notes.push_back("symmetry probe r<=" + std::to_string(std::min(rmax, 3)) +
                        ": " + std::to_string(asym) + " asymmetric entries");
  }
  if (rmax >= 2) {
    // Does the form vanish on r^2-contracted first arguments?
    int nonzero = 0;
    GramTable t2 = gram_table_via_s(m, 2);
    for (const Word& b : words_of(2)) {
      RationalFn acc;
      for (int c = 1; c <= n; ++c)
        for (int d = 1; d <= n; ++d) {
          if (m.lower(c, d) == 0) continue;
          acc += t2.get({c, d}, b) * RationalFn(m.lower(c, d));
        }
      if (!acc.is_zero()) ++nonzero;
    }
    rep.notes.push_back("descent probe r=2: " + std::to_string(nonzero) + "/" +
                        std::to_string(n * n) +
                        " contracted rows pair nonzero (form does not descend "
                        "through x_a x^a = 0)");
  }

  // Specialization sanity against the Weyl-side pairing of projected states,
  // for metrics with eta equal to its inverse.
  if (m.eta() == m.eta_inv() && rmax >= 2) {
    bool ok1 = true;
    for (int a = 1; a <= n && ok1; ++a)
      for (int b = 1; b <= n && ok1; ++b) {
        Rational w = poly_pairing(state_explicit(m, {a}), state_explicit(m, {b}));
        ok1 = (w == (a == b ? Rational(1) : Rational(0)));
      }
    rep.add("specialization r=1: Weyl pairing == Gram", ok1);

    GramTable t2 = gram_table_via_s(m, 2);
    Rational h0 = h_eigenvalue(2, n);
    bool fitted = false, ok2 = true;
    Rational c_fit;
    std::string witness;
    for (const Word& a : words_of(2)) {
      for (const Word& b : words_of(2)) {
        Rational w = poly_pairing(state_explicit(m, a), state_explicit(m, b));
        Rational g = t2.get(a, b).eval(h0);
        Rational etas = m.upper(a[0], a[1]) * m.upper(b[0], b[1]);
        Rational diff = w - g;
        if (!fitted && etas != 0) {
          c_fit = diff / etas;
          fitted = true;
        } else if (fitted && diff != c_fit * etas) {
          ok2 = false;
          witness = word_str(a) + word_str(b);
        } else if (!fitted && diff != 0) {
          ok2 = false;
          witness = word_str(a) + word_str(b);
        }
      }
    }
    rep.add("specialization r=2: offset proportional to eta x eta", ok2, witness);
    if (fitted)
      rep.notes.push_back("specialization r=2 offset coefficient: " + rational_str(c_fit));
  }
  return rep;
}

SuiteReport verify_lift(const Metric& m, int max_deg, int samples, unsigned seed) {
  SuiteReport rep;
  rep.name = "lift(n=" + std::to_string(m.dim()) + ")";
  int n = m.dim();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num_d(-6, 6);
  std::uniform_int_distribution<int> den_d(1, 4);

  for (int d = 0; d <= max_deg; ++d) {
    std::vector<Poly> basis = solution_space_basis(m, d);

    // Spanning: rank of the state family equals the kernel dimension.
    std::vector<MultiIndex> monos = monomials_of_degree(n, d);
    std::map<MultiIndex, int> pos;
    for (size_t i = 0; i < monos.size(); ++i) pos[monos[i]] = static_cast<int>(i);
    Matrix rows;
    bool all_harmonic = true;
    for (const Word& a : sorted_words(n, d)) {
      Poly st = state_explicit(m, a);
      if (!apply_box(m, st).is_zero()) all_harmonic = false;
      std::vector<Rational> row(monos.size(), Rational(0));
      for (const auto& [e, c] : st.terms()) row[pos.at(e)] = c;
      rows.push_back(std::move(row));
    }
    int state_rank = rows.empty() ? 0 : rank(rows);
    int kd = kernel_dimension(n, d);
    rep.add("deg " + std::to_string(d) + ": states harmonic", all_harmonic);
    rep.add("deg " + std::to_string(d) + ": state rank == kernel dim " +
                std::to_string(kd),
            state_rank == kd && static_cast<int>(basis.size()) == kd,
            "rank=" + std::to_string(state_rank) +
                ", nullity=" + std::to_string(basis.size()));

    // Random solutions: lift identity and descent.
    bool lift_ok = true, descend_ok = true;
    for (int s = 0; s < samples; ++s) {
      Poly phi(n);
      for (const Poly& b : basis) {
        Rational c = make_rational(num_d(rng), den_d(rng));
        phi += b.scaled(c);
      }
      if (phi.is_zero()) continue;
      if (lift_and_apply(m, phi) != phi) lift_ok = false;
      auto [exp, value] = descend_to_constant(m, phi);
      Rational expected = phi.coeff(exp);
      for (int i = 0; i < n; ++i) expected *= factorial(exp[i]);
      if (value != expected) descend_ok = false;
    }
    rep.add("deg " + std::to_string(d) + ": lift_and_apply identity", lift_ok);
    rep.add("deg " + std::to_string(d) + ": descend_to_constant", descend_ok);
  }
  return rep;
}

SuiteReport verify_associativity(const Metric& m, int triples, unsigned seed) {
  SuiteReport rep;
  rep.name = "associativity(n=" + std::to_string(m.dim()) + ")";
  int n = m.dim();
  ZEngine eng(m);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> gen_d(0, 2 * n - 1);
  auto gen = [&](int g) { return g < n ? eng.x_gen(g + 1) : eng.d_gen(g - n + 1); };
  auto gen_name = [&](int g) {
    return (g < n ? "x" + std::to_string(g + 1) : "d" + std::to_string(g - n + 1));
  };
  int fail = 0;
  std::string first_witness;
  for (int t = 0; t < triples; ++t) {
    int gu = gen_d(rng), gv = gen_d(rng), gw = gen_d(rng);
    ZElement left = eng.mul(eng.mul(gen(gu), gen(gv)), gen(gw));
    ZElement right = eng.mul(gen(gu), eng.mul(gen(gv), gen(gw)));
    if (left != right) {
      ++fail;
      if (first_witness.empty())
        first_witness = gen_name(gu) + " " + gen_name(gv) + " " + gen_name(gw) +
                        ": (uv)w = " + to_plain(left) + "  vs  u(vw) = " +
                        to_plain(right);
    }
  }
  rep.add("(uv)w == u(vw) on " + std::to_string(triples) + " random triples",
          fail == 0,
          fail == 0 ? ""
                    : std::to_string(fail) + " failures; first: " + first_witness);
  return rep;
}

SuiteReport verify_engine_oracle(const Metric& m, int max_len) {
  SuiteReport rep;
  rep.name = "engine-oracle(n=" + std::to_string(m.dim()) + ")";
  int n = m.dim();
  ZEngine eng(m);
  auto bases = solution_bases(m, 3);

  std::vector<std::vector<int>> words{{}};
  for (int l = 0; l < max_len; ++l) {
    std::vector<std::vector<int>> next;
    for (const auto& w : words)
      for (int g = 1; g <= 2 * n; ++g) {
        auto w2 = w;
        w2.push_back(g);
        next.push_back(std::move(w2));
      }
    words = std::move(next);

    int diverged = 0;
    bool ok = true;
    std::string witness;
    for (const auto& w : words) {
      // Engine: left-associated product. Projector mirror: the coset of
      // g1 P(g2) builds left to right as R <- R * P(next letter), so the
      // series is only ever applied to plain generators.
      ZElement engine_val = eng.unit();
      for (int g : w)
        engine_val = eng.mul(engine_val, g <= n ? eng.x_gen(g) : eng.d_gen(g - n));

      DynWeylElement proj(n);
      bool first = true;
      for (int g : w) {
        WeylElement gen =
            g <= n ? WeylElement::x_var(n, g) : WeylElement::d_var(n, g - n);
        if (first) {
          proj = DynWeylElement(gen);
          first = false;
        } else {
          proj = proj * project_general(m, gen);
        }
      }
      ZElement proj_val = first ? eng.unit() : eng.reduce(proj);

      if (engine_val == proj_val) continue;
      ++diverged;
      // Representations differ; require at least identical actions.
      for (int d = 0; d <= 3 && ok; ++d)
        for (const Poly& phi : bases[d])
          if (eng.act(engine_val, phi) != eng.act(proj_val, phi)) {
            ok = false;
            witness = "len=" + std::to_string(l + 1);
          }
    }
    std::string id = "words len " + std::to_string(l + 1) +
                     " engine vs projector (action-checked)";
    rep.add(id, ok, witness);
    if (diverged > 0)
      rep.notes.push_back("len " + std::to_string(l + 1) + ": " +
                          std::to_string(diverged) +
                          " words with representation-level divergence");
  }
  return rep;
}

}  // namespace kgra
