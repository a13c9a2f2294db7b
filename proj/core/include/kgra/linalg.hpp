#pragma once

#include <optional>
#include <vector>

#include "kgra/rational.hpp"

namespace kgra {

using Matrix = std::vector<std::vector<Rational>>;

// Exact Gauss-Jordan inverse; nullopt for singular input.
std::optional<Matrix> invert(const Matrix& a);

// Exact rank by Gaussian elimination. Rows may have any common length.
int rank(Matrix a);

// Basis of the right nullspace of a (rows = equations), as column vectors.
std::vector<std::vector<Rational>> nullspace(Matrix a);

Matrix identity(int n);
Matrix matmul(const Matrix& a, const Matrix& b);

}  // namespace kgra
