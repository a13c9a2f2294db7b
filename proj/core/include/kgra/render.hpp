#pragma once

#include <string>

#include "kgra/rmatrix.hpp"

namespace kgra {

std::string to_plain(const Rational& q);
std::string to_plain(const RationalFn& f);
std::string to_plain(const Poly& p);
std::string to_plain(const WeylElement& w);
std::string to_plain(const ZElement& z);

std::string to_latex(const Rational& q);
std::string to_latex(const RationalFn& f);
std::string to_latex(const Poly& p);
std::string to_latex(const WeylElement& w);
std::string to_latex(const ZElement& z);

}  // namespace kgra
