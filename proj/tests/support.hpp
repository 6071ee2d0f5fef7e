#pragma once

#include "hermlie/generators.hpp"
#include "hermlie/linalg.hpp"

#include <vector>

namespace hermlie::testing {

inline Matrix random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    Matrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p(i, j) = rng.rational(3, 2);
    if (determinant(p) != 0) return p;
  }
}

inline Matrix standard_j_matrix(std::size_t n) {
  Matrix j(n, n);
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    j(k + 1, k) = 1;
    j(k, k + 1) = -1;
  }
  return j;
}

/// Integer symmetric matrix commuting with the standard J, positive definite.
inline Matrix random_integer_hermitian(Rng& rng, std::size_t n) {
  for (;;) {
    Matrix a(n, n);
    for (std::size_t p = 0; p < n / 2; ++p)
      for (std::size_t q = 0; q < n / 2; ++q) {
        const Scalar x = rng.integer(-1, 1), y = rng.integer(-1, 1);
        a(2 * p, 2 * q) = x;
        a(2 * p + 1, 2 * q + 1) = x;
        a(2 * p + 1, 2 * q) = y;
        a(2 * p, 2 * q + 1) = -y;
      }
    Matrix s = a.transpose() * a + Matrix::identity(n);
    if (is_positive_definite(s)) return s;
  }
}

}  // namespace hermlie::testing
