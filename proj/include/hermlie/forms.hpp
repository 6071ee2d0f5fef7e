#pragma once

#include "hermlie/lie_algebra.hpp"
#include "hermlie/linalg.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hermlie {

/// Alternating k-form on Q^n in the basis e^{i_1...i_k} (i_1 < ... < i_k).
/// Index sets are stored as bitmasks; evaluation uses the determinant
/// convention e^{i_1...i_k}(e_{i_1},...,e_{i_k}) = 1.
class KForm {
 public:
  using Mask = std::uint32_t;
  static constexpr std::size_t kMaxDim = 31;

  KForm(std::size_t ambient_dim, std::size_t degree);

  /// e^{i_1} ^ ... ^ e^{i_k} for 1-based indices in any order (sign applied).
  static KForm basis(std::size_t ambient_dim, const std::vector<int>& indices);
  static KForm constant(std::size_t ambient_dim, const Scalar& value);
  /// sum_i v_i e^i
  static KForm one_form(const Vector& coefficients);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t degree() const { return degree_; }
  const std::map<Mask, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(Mask mask) const;
  /// Coefficient of e^{i_1...i_k}, 1-based increasing indices.
  Scalar coefficient(const std::vector<int>& indices) const;
  void add_term(Mask mask, const Scalar& value);

  KForm& operator+=(const KForm& other);
  KForm& operator-=(const KForm& other);
  KForm& operator*=(const Scalar& c);

  /// Human-readable, e.g. "2e^{12} - e^{15}"; "0" for the zero form.
  std::string to_string() const;
  /// Coefficients of all k-subsets in colexicographic mask order.
  std::vector<Scalar> dense_coefficients() const;

  friend bool operator==(const KForm& a, const KForm& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t ambient_dim_;
  std::size_t degree_;
  std::map<Mask, Scalar> terms_;
};

KForm operator+(KForm a, const KForm& b);
KForm operator-(KForm a, const KForm& b);
KForm operator*(const Scalar& c, KForm a);

std::vector<int> mask_indices(KForm::Mask mask);  // 1-based, increasing
KForm::Mask indices_mask(const std::vector<int>& indices);
/// All masks with `k` bits among the lowest `n`, in increasing numeric order.
std::vector<KForm::Mask> masks_of_degree(std::size_t n, std::size_t k);

KForm wedge(const KForm& a, const KForm& b);
/// Sign of e^a ^ e^b relative to e^{a|b} for disjoint index masks.
int wedge_sign(KForm::Mask a, KForm::Mask b);
/// a^k with a^0 = 1.
KForm wedge_power(const KForm& a, std::size_t k);
Scalar evaluate(const KForm& form, const std::vector<Vector>& vectors);

/// de^i as a 2-form: coefficient of e^{jk} (j<k) is -c^i_{jk}.
KForm differential_of_dual(const LieAlgebra& lie, std::size_t i);
/// Chevalley-Eilenberg differential, extended from the dual basis as a
/// graded derivation.
KForm ce_differential(const LieAlgebra& lie, const KForm& form);

/// Pullback along a linear map: (M^* b)(x_1..x_k) = b(M x_1, ..., M x_k).
KForm pullback(const Matrix& m, const KForm& form);

}  // namespace hermlie
