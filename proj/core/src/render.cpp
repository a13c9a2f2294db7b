#include "kgra/render.hpp"

#include <sstream>

namespace kgra {

namespace {

std::string hpoly_plain(const HPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(k);
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    Rational ab = first ? c : abs(c);
    first = false;
    bool unit_coeff = (ab == 1 || ab == -1) && k > 0;
    if (!unit_coeff)
      os << rational_str(ab);
    else if (ab == -1)
      os << "-";
    if (k > 0) {
      if (!unit_coeff) os << "*";
      os << "H";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::string hpoly_latex(const HPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(k);
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    Rational ab = first ? c : abs(c);
    first = false;
    std::string cs;
    if (denominator(ab) == 1)
      cs = numerator(ab).str();
    else
      cs = "\\frac{" + numerator(ab).str() + "}{" + denominator(ab).str() + "}";
    bool unit_coeff = (ab == 1 || ab == -1) && k > 0;
    if (!unit_coeff)
      os << cs;
    else if (ab == -1)
      os << "-";
    if (k > 0) {
      os << "H";
      if (k > 1) os << "^{" << k << "}";
    }
  }
  return os.str();
}

// Shared monomial walker: emits per-variable factors through `emit`.
template <class Emit>
void walk_exponent(const MultiIndex& e, Emit&& emit) {
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > 0) emit(static_cast<int>(i) + 1, e[i]);
}

std::string mono_plain(const XD& k) {
  std::ostringstream os;
  bool any = false;
  walk_exponent(k.x, [&](int a, int p) {
    if (any) os << "*";
    any = true;
    os << "x" << a;
    if (p > 1) os << "^" << p;
  });
  walk_exponent(k.d, [&](int a, int p) {
    if (any) os << "*";
    any = true;
    os << "d" << a;
    if (p > 1) os << "^" << p;
  });
  if (!any) os << "1";
  return os.str();
}

std::string mono_latex(const XD& k) {
  std::ostringstream os;
  bool any = false;
  walk_exponent(k.x, [&](int a, int p) {
    any = true;
    if (p == 1)
      os << "x^{" << a << "} ";
    else
      os << "(x^{" << a << "})^{" << p << "} ";
  });
  walk_exponent(k.d, [&](int a, int p) {
    any = true;
    if (p == 1)
      os << "\\partial_{" << a << "} ";
    else
      os << "(\\partial_{" << a << "})^{" << p << "} ";
  });
  if (!any) return "1";
  std::string s = os.str();
  s.pop_back();
  return s;
}

}  // namespace

std::string to_plain(const Rational& q) { return rational_str(q); }

std::string to_plain(const RationalFn& f) {
  if (f.den().is_one()) {
    if (f.num().degree() <= 0) return hpoly_plain(f.num());
    return "(" + hpoly_plain(f.num()) + ")";
  }
  return "(" + hpoly_plain(f.num()) + ")/(" + hpoly_plain(f.den()) + ")";
}

std::string to_latex(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  std::string sign = q < 0 ? "-" : "";
  return sign + "\\frac{" + abs(numerator(q)).str() + "}{" + denominator(q).str() + "}";
}

std::string to_latex(const RationalFn& f) {
  if (f.den().is_one()) return hpoly_latex(f.num());
  return "\\frac{" + hpoly_latex(f.num()) + "}{" + hpoly_latex(f.den()) + "}";
}

std::string to_plain(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << (c > 0 ? " + " : " - ");
    Rational ab = first ? c : abs(c);
    first = false;
    bool trivial = mi_total(e) > 0 && (ab == 1 || ab == -1);
    if (!trivial)
      os << rational_str(ab);
    else if (ab == -1)
      os << "-";
    bool lead = trivial;
    walk_exponent(e, [&](int a, int pw) {
      if (!lead) os << "*";
      lead = false;
      os << "x" << a;
      if (pw > 1) os << "^" << pw;
    });
    if (mi_total(e) == 0 && trivial) os << rational_str(ab);
  }
  return os.str();
}

std::string to_latex(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << (c > 0 ? " + " : " - ");
    Rational ab = first ? c : abs(c);
    first = false;
    bool trivial = mi_total(e) > 0 && (ab == 1 || ab == -1);
    if (!trivial)
      os << to_latex(ab) << " ";
    else if (ab == -1)
      os << "-";
    walk_exponent(e, [&](int a, int pw) {
      if (pw == 1)
        os << "x^{" << a << "} ";
      else
        os << "(x^{" << a << "})^{" << pw << "} ";
    });
    if (mi_total(e) == 0) os << (trivial ? to_latex(ab) : "");
  }
  std::string s = os.str();
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

namespace {

template <class Map, class CoeffPlain>
std::string terms_plain(const Map& terms, CoeffPlain&& cp) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << cp(c) << "*" << mono_plain(k);
  }
  return os.str();
}

template <class Map, class CoeffLatex>
std::string terms_latex(const Map& terms, CoeffLatex&& cl) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << cl(c) << " \\, " << mono_latex(k);
  }
  return os.str();
}

}  // namespace

std::string to_plain(const WeylElement& w) {
  return terms_plain(w.terms(), [](const Rational& c) {
    return denominator(c) == 1 && c >= 0 ? rational_str(c) : "(" + rational_str(c) + ")";
  });
}

std::string to_plain(const ZElement& z) {
  return terms_plain(z.terms(), [](const RationalFn& c) { return to_plain(c); });
}

std::string to_latex(const WeylElement& w) {
  return terms_latex(w.terms(),
                     [](const Rational& c) { return "\\left(" + to_latex(c) + "\\right)"; });
}

std::string to_latex(const ZElement& z) {
  return terms_latex(z.terms(),
                     [](const RationalFn& c) { return "\\left(" + to_latex(c) + "\\right)"; });
}

}  // namespace kgra
