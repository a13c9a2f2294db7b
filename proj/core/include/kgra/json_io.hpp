#pragma once

#include <string>

#include "kgra/rmatrix.hpp"

namespace kgra {

// JSON serialization. Rationals travel as "p" / "p/q" strings, rational
// functions as {"num": [...], "den": [...]} with ascending coefficients.

std::string rationalfn_to_json(const RationalFn& f);
RationalFn rationalfn_from_json(const std::string& text);

std::string metric_to_json(const Metric& m);
Metric metric_from_json(const std::string& text);

std::string poly_to_json(const Poly& p);
Poly poly_from_json(const std::string& text);

std::string weyl_to_json(const WeylElement& w);
WeylElement weyl_from_json(const std::string& text);

std::string zelement_to_json(const ZElement& z);
ZElement zelement_from_json(const std::string& text);

std::string word_to_json(const Word& w);
Word word_from_json(const std::string& text);

// Gram table keyed by sorted words, as a JSON matrix of RationalFn objects.
std::string gram_table_to_json(const GramTable& table, int n, int r);
// Same data as CSV with entries rendered as strings.
std::string gram_table_to_csv(const GramTable& table, int n, int r);

}  // namespace kgra
