#pragma once

#include "hermlie/linalg.hpp"
#include "hermlie/subspace.hpp"

#include <cstddef>
#include <vector>

namespace hermlie {

/// One structure constant: [e_i, e_j] has coefficient `value` on e_k.
/// Indices are 1-based.
struct StructureConstant {
  int i = 0;
  int j = 0;
  int k = 0;
  Scalar value;

  friend bool operator==(const StructureConstant&, const StructureConstant&) = default;
};

/// Real Lie algebra given by exact structure constants on e_1..e_n.
class LieAlgebra {
 public:
  LieAlgebra() = default;

  std::size_t dim() const { return dim_; }
  bool validated() const { return validated_; }
  /// Canonical sparse table: i < j, nonzero values, sorted by (i, j, k).
  const std::vector<StructureConstant>& constants() const { return constants_; }
  /// [e_i, e_j] for 0-based i, j.
  const Vector& basis_bracket(std::size_t i, std::size_t j) const {
    return table_[i * dim_ + j];
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.constants_ == b.constants_;
  }

 private:
  friend LieAlgebra make_algebra(std::size_t dim, const std::vector<StructureConstant>& constants);

  std::size_t dim_ = 0;
  bool validated_ = false;
  std::vector<StructureConstant> constants_;
  std::vector<Vector> table_;
};

/// Entries with i > j are flipped to (j, i, k, -value). Entries with i == j
/// must vanish. Throws IndexOutOfRange or DuplicateEntry.
LieAlgebra make_algebra(std::size_t dim, const std::vector<StructureConstant>& constants);

/// Same as make_algebra, but throws JacobiFailed unless the table is a Lie algebra.
LieAlgebra make_lie_algebra(std::size_t dim, const std::vector<StructureConstant>& constants);

LieAlgebra abelian_algebra(std::size_t dim);

Vector bracket(const LieAlgebra& lie, const Vector& x, const Vector& y);

/// Largest |coordinate| of [[x,y],z] + [[y,z],x] + [[z,x],y] over basis triples.
Scalar jacobi_residual(const LieAlgebra& lie);

/// Matrix of ad(x) in the standard basis.
Matrix ad_matrix(const LieAlgebra& lie, const Vector& x);
Scalar trace_ad(const LieAlgebra& lie, const Vector& x);

/// span{[a, b] : a in s1, b in s2}.
Subspace bracket_span(const LieAlgebra& lie, const Subspace& s1, const Subspace& s2);
/// The derived algebra g' = [g, g].
Subspace image_of_bracket(const LieAlgebra& lie);
Subspace center(const LieAlgebra& lie);

struct Fingerprint {
  /// dims of g^(1) = [g,g], g^(2) = [g^(1),g^(1)], ... until the dimension stabilizes.
  std::vector<std::size_t> derived_series;
  /// dims of g^1 = [g,g], g^2 = [g,g^1], ... until the dimension stabilizes.
  std::vector<std::size_t> lower_central_series;
  std::size_t center_dim = 0;
  std::size_t derived_center_dim = 0;
  bool unimodular = false;
  bool nilpotent = false;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/// Throws NotValidated for tables that fail Jacobi.
Fingerprint structure_invariants(const LieAlgebra& lie);

bool is_two_step_solvable(const LieAlgebra& lie);
bool is_unimodular(const LieAlgebra& lie);

/// Block sum; the basis of `b` follows that of `a`.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Algebra expressed in the basis f_i = P e_i (columns of P):
/// [x, y]' = P^{-1} [P x, P y].
LieAlgebra change_basis(const LieAlgebra& lie, const Matrix& p);

}  // namespace hermlie
