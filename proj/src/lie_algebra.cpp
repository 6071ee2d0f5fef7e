#include "hermlie/lie_algebra.hpp"

#include "hermlie/error.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

namespace hermlie {

namespace {

void require_validated(const LieAlgebra& lie) {
  if (!lie.validated())
    throw Error(ErrorCode::NotValidated, "structure constants fail the Jacobi identity");
}

std::vector<std::size_t> stabilized_series(const LieAlgebra& lie, bool derived) {
  std::vector<std::size_t> dims;
  Subspace whole = Subspace::whole(lie.dim());
  Subspace current = image_of_bracket(lie);
  dims.push_back(current.dim());
  while (true) {
    Subspace next = derived ? bracket_span(lie, current, current) : bracket_span(lie, whole, current);
    if (next.dim() == current.dim()) break;
    dims.push_back(next.dim());
    current = std::move(next);
  }
  return dims;
}

}  // namespace

LieAlgebra make_algebra(std::size_t dim, const std::vector<StructureConstant>& constants) {
  if (dim == 0) throw Error(ErrorCode::IndexOutOfRange, "dimension must be positive");
  std::map<std::tuple<int, int, int>, Scalar> normalized;
  const int n = static_cast<int>(dim);
  for (const auto& c : constants) {
    if (c.i < 1 || c.j < 1 || c.k < 1 || c.i > n || c.j > n || c.k > n)
      throw Error(ErrorCode::IndexOutOfRange,
                  "index out of range in [e" + std::to_string(c.i) + ",e" + std::to_string(c.j) +
                      "] -> e" + std::to_string(c.k));
    if (c.i == c.j) {
      if (c.value != 0)
        throw Error(ErrorCode::IndexOutOfRange,
                    "[e" + std::to_string(c.i) + ",e" + std::to_string(c.i) + "] must vanish");
      continue;
    }
    auto key = c.i < c.j ? std::make_tuple(c.i, c.j, c.k) : std::make_tuple(c.j, c.i, c.k);
    Scalar value = c.i < c.j ? c.value : Scalar(-c.value);
    if (!normalized.emplace(key, value).second)
      throw Error(ErrorCode::DuplicateEntry,
                  "duplicate entry for [e" + std::to_string(std::get<0>(key)) + ",e" +
                      std::to_string(std::get<1>(key)) + "] -> e" +
                      std::to_string(std::get<2>(key)));
  }

  LieAlgebra lie;
  lie.dim_ = dim;
  lie.table_.assign(dim * dim, zero_vector(dim));
  for (const auto& [key, value] : normalized) {
    if (value == 0) continue;
    auto [i, j, k] = key;
    lie.constants_.push_back({i, j, k, value});
    lie.table_[(i - 1) * dim + (j - 1)][k - 1] = value;
    lie.table_[(j - 1) * dim + (i - 1)][k - 1] = -value;
  }
  lie.validated_ = jacobi_residual(lie) == 0;
  return lie;
}

LieAlgebra make_lie_algebra(std::size_t dim, const std::vector<StructureConstant>& constants) {
  LieAlgebra lie = make_algebra(dim, constants);
  if (!lie.validated())
    throw Error(ErrorCode::JacobiFailed,
                "Jacobi residual " + to_string(jacobi_residual(lie)) + " is nonzero");
  return lie;
}

LieAlgebra abelian_algebra(std::size_t dim) { return make_algebra(dim, {}); }

Vector bracket(const LieAlgebra& lie, const Vector& x, const Vector& y) {
  const std::size_t n = lie.dim();
  if (x.size() != n || y.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "bracket arguments must have length dim");
  Vector r = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0 || i == j) continue;
      axpy(x[i] * y[j], lie.basis_bracket(i, j), r);
    }
  }
  return r;
}

Scalar jacobi_residual(const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  Scalar worst = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        Vector cyc = bracket(lie, lie.basis_bracket(i, j), ek);
        cyc = add(cyc, bracket(lie, lie.basis_bracket(j, k), ei));
        cyc = add(cyc, bracket(lie, lie.basis_bracket(k, i), ej));
        Scalar m = max_abs(cyc);
        if (m > worst) worst = m;
      }
  return worst;
}

Matrix ad_matrix(const LieAlgebra& lie, const Vector& x) {
  const std::size_t n = lie.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector col = bracket(lie, x, unit_vector(n, j));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

Scalar trace_ad(const LieAlgebra& lie, const Vector& x) {
  Matrix m = ad_matrix(lie, x);
  Scalar t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

Subspace bracket_span(const LieAlgebra& lie, const Subspace& s1, const Subspace& s2) {
  std::vector<Vector> vs;
  for (const auto& a : s1.basis())
    for (const auto& b : s2.basis()) {
      Vector v = bracket(lie, a, b);
      if (!is_zero(v)) vs.push_back(std::move(v));
    }
  return Subspace::span(lie.dim(), vs);
}

Subspace image_of_bracket(const LieAlgebra& lie) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < lie.dim(); ++i)
    for (std::size_t j = i + 1; j < lie.dim(); ++j)
      if (!is_zero(lie.basis_bracket(i, j))) vs.push_back(lie.basis_bracket(i, j));
  return Subspace::span(lie.dim(), vs);
}

Subspace center(const LieAlgebra& lie) {
  // x is central iff sum_i x_i [e_i, e_j] = 0 for every j.
  const std::size_t n = lie.dim();
  Matrix m(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) m(j * n + k, i) = lie.basis_bracket(i, j)[k];
  return Subspace::span(n, nullspace(m));
}

Fingerprint structure_invariants(const LieAlgebra& lie) {
  require_validated(lie);
  Fingerprint f;
  f.derived_series = stabilized_series(lie, true);
  f.lower_central_series = stabilized_series(lie, false);
  Subspace z = center(lie);
  f.center_dim = z.dim();
  f.derived_center_dim = intersect(z, image_of_bracket(lie)).dim();
  f.unimodular = is_unimodular(lie);
  f.nilpotent = f.lower_central_series.back() == 0;
  return f;
}

bool is_two_step_solvable(const LieAlgebra& lie) {
  Subspace d = image_of_bracket(lie);
  return bracket_span(lie, d, d).dim() == 0;
}

bool is_unimodular(const LieAlgebra& lie) {
  for (std::size_t i = 0; i < lie.dim(); ++i)
    if (trace_ad(lie, unit_vector(lie.dim(), i)) != 0) return false;
  return true;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  std::vector<StructureConstant> cs = a.constants();
  const int shift = static_cast<int>(a.dim());
  for (const auto& c : b.constants()) cs.push_back({c.i + shift, c.j + shift, c.k + shift, c.value});
  return make_algebra(a.dim() + b.dim(), cs);
}

LieAlgebra change_basis(const LieAlgebra& lie, const Matrix& p) {
  const std::size_t n = lie.dim();
  auto p_inv = inverse(p);
  if (p.rows() != n || !p_inv) throw Error(ErrorCode::DimensionMismatch, "change of basis must be invertible");
  std::vector<StructureConstant> cs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v = *p_inv * bracket(lie, p.column(i), p.column(j));
      for (std::size_t k = 0; k < n; ++k)
        if (v[k] != 0)
          cs.push_back({static_cast<int>(i + 1), static_cast<int>(j + 1), static_cast<int>(k + 1), v[k]});
    }
  return make_algebra(n, cs);
}

}  // namespace hermlie
