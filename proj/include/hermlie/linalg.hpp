#pragma once

#include "hermlie/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hermlie {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
/// Standard basis vector, 0-indexed.
Vector unit_vector(std::size_t n, std::size_t i);
Vector add(const Vector& a, const Vector& b);
Vector subtract(const Vector& a, const Vector& b);
Vector scaled(const Scalar& c, const Vector& v);
/// y += c * x
void axpy(const Scalar& c, const Vector& x, Vector& y);
Scalar dot(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);
Scalar max_abs(const Vector& v);

/// Dense row-major rational matrix. Dimensions stay small (at most ~10), so
/// no attempt is made at sparsity here.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& c, const Matrix& a);
/// Commutator ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form.
Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}, one vector per free column.
std::vector<Vector> nullspace(const Matrix& m);
/// Some solution of a x = b (free variables set to zero), if consistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);
std::optional<Matrix> inverse(const Matrix& m);
Scalar determinant(Matrix m);
/// Sylvester's criterion: every leading principal minor is positive.
bool is_positive_definite(const Matrix& s);
/// Bilinear form x^T s y.
Scalar bilinear(const Matrix& s, const Vector& x, const Vector& y);

}  // namespace hermlie
