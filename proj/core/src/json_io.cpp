#include "kgra/json_io.hpp"

#include <json.hpp>

#include "kgra/render.hpp"
#include "kgra/states.hpp"

namespace kgra {

using nlohmann::json;

namespace {

json rational_j(const Rational& q) { return rational_str(q); }

Rational rational_from_j(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  return parse_rational(j.get<std::string>());
}

json hpoly_j(const HPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(rational_j(c));
  return arr;
}

HPoly hpoly_from_j(const json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_from_j(c));
  return HPoly::from_coeffs(std::move(coeffs));
}

json rationalfn_j(const RationalFn& f) {
  return json{{"num", hpoly_j(f.num())}, {"den", hpoly_j(f.den())}};
}

RationalFn rationalfn_from_j(const json& j) {
  return RationalFn(hpoly_from_j(j.at("num")), hpoly_from_j(j.at("den")));
}

json exponent_j(const MultiIndex& e) { return json(e); }

MultiIndex exponent_from_j(const json& j) {
  MultiIndex e;
  for (const auto& v : j) e.push_back(v.get<int>());
  return e;
}

}  // namespace

std::string rationalfn_to_json(const RationalFn& f) { return rationalfn_j(f).dump(); }

RationalFn rationalfn_from_json(const std::string& text) {
  return rationalfn_from_j(json::parse(text));
}

std::string metric_to_json(const Metric& m) {
  json rows = json::array();
  for (int i = 1; i <= m.dim(); ++i) {
    json row = json::array();
    for (int j = 1; j <= m.dim(); ++j) row.push_back(rational_j(m.lower(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"n", m.dim()}, {"eta", rows}}.dump();
}

Metric metric_from_json(const std::string& text) {
  json j = json::parse(text);
  int n = j.at("n").get<int>();
  Matrix eta;
  for (const auto& row : j.at("eta")) {
    std::vector<Rational> r;
    for (const auto& v : row) r.push_back(rational_from_j(v));
    eta.push_back(std::move(r));
  }
  if (static_cast<int>(eta.size()) != n) throw Error("metric rows do not match n");
  return Metric::from_entries(eta);
}

std::string poly_to_json(const Poly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(json{{"exp", exponent_j(e)}, {"coeff", rational_j(c)}});
  return json{{"n", p.dim()}, {"terms", terms}}.dump();
}

Poly poly_from_json(const std::string& text) {
  json j = json::parse(text);
  Poly p(j.at("n").get<int>());
  for (const auto& t : j.at("terms"))
    p.add_term(exponent_from_j(t.at("exp")), rational_from_j(t.at("coeff")));
  return p;
}

std::string weyl_to_json(const WeylElement& w) {
  json terms = json::array();
  for (const auto& [k, c] : w.terms())
    terms.push_back(
        json{{"x", exponent_j(k.x)}, {"d", exponent_j(k.d)}, {"coeff", rational_j(c)}});
  return json{{"n", w.dim()}, {"terms", terms}}.dump();
}

WeylElement weyl_from_json(const std::string& text) {
  json j = json::parse(text);
  WeylElement w(j.at("n").get<int>());
  for (const auto& t : j.at("terms"))
    w.add_term(XD{exponent_from_j(t.at("x")), exponent_from_j(t.at("d"))},
               rational_from_j(t.at("coeff")));
  return w;
}

std::string zelement_to_json(const ZElement& z) {
  json terms = json::array();
  for (const auto& [k, c] : z.terms())
    terms.push_back(
        json{{"x", exponent_j(k.x)}, {"d", exponent_j(k.d)}, {"coeff", rationalfn_j(c)}});
  return json{{"n", z.dim()}, {"terms", terms}}.dump();
}

ZElement zelement_from_json(const std::string& text) {
  json j = json::parse(text);
  ZElement z(j.at("n").get<int>());
  for (const auto& t : j.at("terms"))
    z.add_term(XD{exponent_from_j(t.at("x")), exponent_from_j(t.at("d"))},
               rationalfn_from_j(t.at("coeff")));
  return z;
}

std::string word_to_json(const Word& w) { return json(w).dump(); }

Word word_from_json(const std::string& text) {
  json j = json::parse(text);
  Word w;
  for (const auto& v : j) w.push_back(v.get<int>());
  return w;
}

std::string gram_table_to_json(const GramTable& table, int n, int r) {
  std::vector<Word> words = sorted_words(n, r);
  json rows = json::array();
  for (const Word& a : words) {
    json row = json::array();
    for (const Word& b : words) row.push_back(rationalfn_j(table.get(a, b)));
    rows.push_back(std::move(row));
  }
  json jwords = json::array();
  for (const Word& a : words) jwords.push_back(json(a));
  return json{{"n", n}, {"r", r}, {"words", jwords}, {"entries", rows}}.dump();
}

std::string gram_table_to_csv(const GramTable& table, int n, int r) {
  std::vector<Word> words = sorted_words(n, r);
  auto word_str = [](const Word& w) {
    std::string s;
    for (int a : w) s += std::to_string(a);
    return s.empty() ? std::string("1") : s;
  };
  std::string out = "word";
  for (const Word& b : words) out += "," + word_str(b);
  out += "\n";
  for (const Word& a : words) {
    out += word_str(a);
    for (const Word& b : words) out += "," + to_plain(table.get(a, b));
    out += "\n";
  }
  return out;
}

}  // namespace kgra
