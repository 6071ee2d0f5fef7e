#pragma once

#include "hermlie/linalg.hpp"

#include <cstddef>
#include <vector>

namespace hermlie {

/// Linear subspace of Q^n. The basis is kept in reduced row echelon form, so
/// two subspaces are equal exactly when their bases are.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0);

  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace whole(std::size_t ambient_dim);
  /// span{e_i : i in indices}, 0-indexed.
  static Subspace coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& indices);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in basis(); v must lie in the subspace.
  Vector coordinates(const Vector& v) const;
  /// Basis vectors as columns.
  Matrix basis_matrix() const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
/// {w in within : metric(w, s) = 0 for all s in s_space}.
Subspace orthogonal_complement(const Subspace& s_space, const Matrix& metric,
                               const Subspace& within);
/// m(S).
Subspace image(const Matrix& m, const Subspace& s_space);

}  // namespace hermlie
