#include "kgra/metric.hpp"

namespace kgra {

Metric Metric::from_entries(const Matrix& eta) {
  int n = static_cast<int>(eta.size());
  if (n < 3) throw Error("dimension below 3");
  for (const auto& row : eta)
    if (static_cast<int>(row.size()) != n) throw Error("metric not square");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (eta[i][j] != eta[j][i]) throw Error("metric not symmetric");
  auto inv = invert(eta);
  if (!inv) throw Error("degenerate metric");
  return Metric(n, eta, *inv);
}

Metric Metric::preset(const std::string& name, int n) {
  if (n < 3) throw Error("dimension below 3");
  if (name == "euclidean") return from_entries(identity(n));
  if (name == "minkowski") {
    Matrix eta = identity(n);
    for (int i = 1; i < n; ++i) eta[i][i] = -1;
    return from_entries(eta);
  }
  throw Error("unknown metric preset '" + name + "'");
}

bool Metric::is_diagonal() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && eta_[i][j] != 0) return false;
  return true;
}

namespace {

Rational random_entry(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> den_d(1, 3);
  int den = den_d(rng);
  std::uniform_int_distribution<int> num_d(-2 * den, 2 * den);
  return make_rational(num_d(rng), den);
}

}  // namespace

Metric random_metric(int n, std::mt19937_64& rng) {
  for (;;) {
    Matrix eta = identity(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Rational p = random_entry(rng);
        eta[i][j] += p;
        if (j != i) eta[j][i] += p;
      }
    if (invert(eta)) return Metric::from_entries(eta);
  }
}

Metric random_diagonal_metric(int n, std::mt19937_64& rng) {
  Matrix eta = identity(n);
  for (int i = 0; i < n; ++i) {
    Rational d(0);
    while (d == 0) d = random_entry(rng);
    eta[i][i] = d;
  }
  return Metric::from_entries(eta);
}

}  // namespace kgra
