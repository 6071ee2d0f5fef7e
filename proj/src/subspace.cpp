#include "hermlie/subspace.hpp"

#include "hermlie/error.hpp"

namespace hermlie {

Subspace::Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  Echelon e = rref(Matrix::from_rows(vectors, ambient_dim));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) s.basis_.push_back(e.reduced.row(r));
  s.pivots_ = e.pivots;
  return s;
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < ambient_dim; ++i) vs.push_back(unit_vector(ambient_dim, i));
  return span(ambient_dim, vs);
}

Subspace Subspace::coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& indices) {
  std::vector<Vector> vs;
  for (auto i : indices) {
    if (i >= ambient_dim) throw Error(ErrorCode::IndexOutOfRange, "coordinate index out of range");
    vs.push_back(unit_vector(ambient_dim, i));
  }
  return span(ambient_dim, vs);
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_dim_) throw Error(ErrorCode::DimensionMismatch, "vector length differs");
  Vector residual = v;
  for (std::size_t r = 0; r < basis_.size(); ++r) axpy(-v[pivots_[r]], basis_[r], residual);
  return is_zero(residual);
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis())
    if (!contains(v)) return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw Error(ErrorCode::DimensionMismatch, "vector is not in the subspace");
  Vector c(basis_.size());
  for (std::size_t r = 0; r < basis_.size(); ++r) c[r] = v[pivots_[r]];
  return c;
}

Matrix Subspace::basis_matrix() const { return Matrix::from_columns(basis_, ambient_dim_); }

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "ambient dimensions differ");
  const std::size_t n = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return Subspace(n);
  // Solve A x = B y; the intersection is the image of x.
  Matrix m(n, a.dim() + b.dim());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) m(i, j) = a.basis()[j][i];
    for (std::size_t j = 0; j < b.dim(); ++j) m(i, a.dim() + j) = -b.basis()[j][i];
  }
  std::vector<Vector> vs;
  for (const auto& k : nullspace(m)) {
    Vector v = zero_vector(n);
    for (std::size_t j = 0; j < a.dim(); ++j) axpy(k[j], a.basis()[j], v);
    vs.push_back(std::move(v));
  }
  return Subspace::span(n, vs);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "ambient dimensions differ");
  std::vector<Vector> vs = a.basis();
  vs.insert(vs.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), vs);
}

Subspace orthogonal_complement(const Subspace& s_space, const Matrix& metric,
                               const Subspace& within) {
  const std::size_t n = within.ambient_dim();
  if (s_space.ambient_dim() != n || metric.rows() != n || metric.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "ambient dimensions differ");
  if (s_space.dim() == 0) return within;
  if (within.dim() == 0) return within;
  Matrix constraints(s_space.dim(), within.dim());
  for (std::size_t i = 0; i < s_space.dim(); ++i) {
    Vector gs = metric * s_space.basis()[i];
    for (std::size_t j = 0; j < within.dim(); ++j) constraints(i, j) = dot(gs, within.basis()[j]);
  }
  std::vector<Vector> vs;
  for (const auto& k : nullspace(constraints)) {
    Vector v = zero_vector(n);
    for (std::size_t j = 0; j < within.dim(); ++j) axpy(k[j], within.basis()[j], v);
    vs.push_back(std::move(v));
  }
  return Subspace::span(n, vs);
}

Subspace image(const Matrix& m, const Subspace& s_space) {
  std::vector<Vector> vs;
  for (const auto& v : s_space.basis()) vs.push_back(m * v);
  return Subspace::span(m.rows(), vs);
}

}  // namespace hermlie
