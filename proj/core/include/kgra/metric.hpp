#pragma once

#include <random>
#include <string>

#include "kgra/linalg.hpp"

namespace kgra {

// Constant nondegenerate symmetric rational matrix with its exact inverse.
// All index arguments across the library are 1-based, as in the usual
// physics notation x^1 ... x^n.
class Metric {
 public:
  // Validates symmetry, n >= 3 and nondegeneracy; computes the inverse.
  static Metric from_entries(const Matrix& eta);
  // name: "euclidean" (identity) or "minkowski" (diag(1,-1,...,-1)).
  static Metric preset(const std::string& name, int n);

  int dim() const { return n_; }
  const Rational& lower(int a, int b) const { return eta_[a - 1][b - 1]; }
  const Rational& upper(int a, int b) const { return inv_[a - 1][b - 1]; }
  const Matrix& eta() const { return eta_; }
  const Matrix& eta_inv() const { return inv_; }
  bool is_diagonal() const;

  friend bool operator==(const Metric& a, const Metric& b) {
    return a.eta_ == b.eta_;
  }

 private:
  Metric(int n, Matrix eta, Matrix inv)
      : n_(n), eta_(std::move(eta)), inv_(std::move(inv)) {}
  int n_;
  Matrix eta_, inv_;
};

// Identity plus a random symmetric perturbation with entries in [-2, 2],
// redrawn until nondegenerate. Deterministic for a fixed generator state.
Metric random_metric(int n, std::mt19937_64& rng);

// Random nondegenerate diagonal metric with entries in [-2, 2] \ {0}.
Metric random_diagonal_metric(int n, std::mt19937_64& rng);

}  // namespace kgra
