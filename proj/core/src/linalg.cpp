#include "kgra/linalg.hpp"

namespace kgra {

Matrix identity(int n) {
  Matrix m(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Matrix r(n, std::vector<Rational>(m, Rational(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (size_t c = 0; c < m; ++c) r[i][c] += a[i][j] * b[j][c];
    }
  return r;
}

std::optional<Matrix> invert(const Matrix& a) {
  int n = static_cast<int>(a.size());
  Matrix aug = a;
  for (int i = 0; i < n; ++i) {
    Matrix id = identity(n);
    aug[i].insert(aug[i].end(), id[i].begin(), id[i].end());
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (aug[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(aug[col], aug[piv]);
    Rational lead = aug[col][col];
    for (auto& v : aug[col]) v /= lead;
    for (int r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      Rational f = aug[r][col];
      for (int c = col; c < 2 * n; ++c) aug[r][c] -= f * aug[col][c];
    }
  }
  Matrix inv(n);
  for (int i = 0; i < n; ++i)
    inv[i].assign(aug[i].begin() + n, aug[i].end());
  return inv;
}

namespace {

// Row echelon in place; returns pivot columns.
std::vector<int> echelon(Matrix& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  int rows = static_cast<int>(a.size());
  int cols = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    Rational lead = a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] /= lead;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(Matrix a) { return static_cast<int>(echelon(a).size()); }

std::vector<std::vector<Rational>> nullspace(Matrix a) {
  if (a.empty()) return {};
  int cols = static_cast<int>(a[0].size());
  std::vector<int> pivots = echelon(a);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) {
      // Row r reads x_{pivot[r]} + sum(coeff * x_free) = 0.
      v[pivots[r]] = -a[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace kgra
