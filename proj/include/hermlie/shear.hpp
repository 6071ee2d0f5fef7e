#pragma once

#include "hermlie/forms.hpp"
#include "hermlie/hermitian.hpp"
#include "hermlie/lie_algebra.hpp"
#include "hermlie/subspace.hpp"

#include <string>
#include <vector>

namespace hermlie {

/// Two-form on Q^n with values in Q^n, stored by its values on basis pairs.
/// `target` is the subspace the values are meant to lie in.
class VectorValuedTwoForm {
 public:
  VectorValuedTwoForm(std::size_t ambient_dim, Subspace target);

  std::size_t ambient_dim() const { return dim_; }
  const Subspace& target() const { return target_; }

  /// omega(e_i, e_j), 0-based.
  const Vector& value(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  /// Sets omega(e_i, e_j) = v and omega(e_j, e_i) = -v.
  void set(std::size_t i, std::size_t j, const Vector& v);
  Vector evaluate(const Vector& x, const Vector& y) const;
  /// The real 2-form giving the coefficient along the c-th target basis vector.
  KForm component(std::size_t c) const;
  /// span of all values.
  Subspace image() const;
  bool is_zero() const;

  friend bool operator==(const VectorValuedTwoForm&, const VectorValuedTwoForm&) = default;

 private:
  std::size_t dim_;
  Subspace target_;
  std::vector<Vector> table_;
};

/// A subspace a of R^{2n} and omega in Lambda^2 (R^{2n})^* (x) a with
/// omega(a, a) = 0. The associated algebra has bracket [x, y] = -omega(x, y).
struct PreShearData {
  Subspace a;
  VectorValuedTwoForm omega;

  std::size_t dim() const { return omega.ambient_dim(); }

  /// a = g', omega = -[., .].
  static PreShearData from_algebra(const LieAlgebra& lie);
  static PreShearData zero(std::size_t dim, const Subspace& a);

  friend bool operator==(const PreShearData&, const PreShearData&) = default;
};

struct PreShearReport {
  bool valid = true;
  std::vector<std::string> violations;
};

PreShearReport validate_pre_shear(const PreShearData& data);

struct ComplexShearCheck {
  bool jacobi_ok = false;
  bool integrable_ok = false;
};

/// Throws InvalidPreShear.
ComplexShearCheck check_complex_shear(const PreShearData& data, const ComplexStructure& j);

/// Throws JacobiFailed.
LieAlgebra build_shear(const PreShearData& data);

enum class ConditionKind { Kahler, Balanced, Skt };
std::string condition_name(ConditionKind kind);

/// Evaluates the shear-data form of each condition directly from omega.
/// Throws NotComplexShearData.
bool shear_condition(const PreShearData& data, const Metric& g, const ComplexStructure& j,
                     ConditionKind kind);

/// The forms whose vanishing the shear conditions test (for reporting).
KForm shear_condition_form(const PreShearData& data, const Metric& g, const ComplexStructure& j,
                           ConditionKind kind);

/// Restrictions of omega to a, written in the basis (a_J basis, a_r basis).
struct ShearOperators {
  Subspace a;  // normalized to im omega
  Subspace a_J;
  Subspace a_r;
  Subspace U_r;
  Subspace U_J;
  std::vector<Vector> a_J_basis;
  std::vector<Vector> a_r_basis;
  std::vector<Vector> U_J_basis;
  /// A_X for X = a_r_basis[x], with its blocks.
  std::vector<Matrix> A, K, G, H, F;
  /// B_Z for Z = U_J_basis[z].
  std::vector<Matrix> B;
  /// f[x][y] = F_X(Y) and h[x][y] = H_X(Y) as vectors in R^{2n}.
  std::vector<std::vector<Vector>> f, h;

  bool report_clean = true;
  std::vector<std::string> report_failures;
};

ShearOperators shear_operators(const PreShearData& data, const Metric& g, const ComplexStructure& j);

/// Data in the basis f_i = P e_i: omega'(x, y) = P^{-1} omega(P x, P y).
PreShearData change_basis(const PreShearData& data, const Matrix& p);

}  // namespace hermlie
