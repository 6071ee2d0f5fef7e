#pragma once

#include "hermlie/forms.hpp"
#include "hermlie/lie_algebra.hpp"
#include "hermlie/linalg.hpp"
#include "hermlie/subspace.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hermlie {

/// Linear endomorphism J with J^2 = -1. Column j of the matrix is J e_j.
class ComplexStructure {
 public:
  /// Throws NotAComplexStructure unless J^2 = -1.
  explicit ComplexStructure(Matrix j);

  /// J e_{2i-1} = e_{2i}.
  static ComplexStructure standard(std::size_t dim);
  /// J e_a = e_b for each 1-based pair (a, b).
  static ComplexStructure from_pairs(std::size_t dim, const std::vector<std::pair<int, int>>& pairs);

  std::size_t dim() const { return j_.rows(); }
  const Matrix& matrix() const { return j_; }
  Vector apply(const Vector& v) const { return j_ * v; }

  friend bool operator==(const ComplexStructure&, const ComplexStructure&) = default;

 private:
  Matrix j_;
};

/// Positive-definite symmetric bilinear form, g(x, y) = x^T S y.
class Metric {
 public:
  /// Throws NotPositiveDefinite unless S is symmetric with positive leading minors.
  explicit Metric(Matrix s);

  static Metric identity(std::size_t dim);
  /// The metric for which the given vectors form an orthonormal basis.
  static Metric from_orthonormal_basis(const std::vector<Vector>& basis);

  std::size_t dim() const { return s_.rows(); }
  const Matrix& matrix() const { return s_; }
  Scalar inner(const Vector& x, const Vector& y) const { return bilinear(s_, x, y); }
  /// J^T S J = S.
  bool compatible_with(const ComplexStructure& j) const;

  friend bool operator==(const Metric&, const Metric&) = default;

 private:
  Matrix s_;
};

/// N(x,y) = [Jx,Jy] - J[Jx,y] - J[x,Jy] - [x,y].
Vector nijenhuis(const LieAlgebra& lie, const ComplexStructure& j, const Vector& x, const Vector& y);

struct IntegrabilityReport {
  bool integrable = true;
  /// 1-based basis pairs (a, b), a < b, with N(e_a, e_b) != 0.
  std::vector<std::pair<int, int>> failing_pairs;
};

IntegrabilityReport validate_complex_structure(const LieAlgebra& lie, const ComplexStructure& j);

/// sigma(x, y) = g(Jx, y). Throws IncompatibleMetric.
KForm fundamental_form(const Metric& g, const ComplexStructure& j);

/// `Argument`: (J^* b)(x_1..x_k) = b(Jx_1, .., Jx_k).
/// `DualAction`: J acting on covectors by a -> -a o J, which differs from
/// `Argument` by (-1)^k.
enum class PullbackConvention { Argument, DualAction };

KForm j_pullback(const ComplexStructure& j, const KForm& form,
                 PullbackConvention convention = PullbackConvention::Argument);

struct Verdicts {
  bool kahler = false;
  bool balanced = false;
  bool skt = false;

  friend bool operator==(const Verdicts&, const Verdicts&) = default;
};

struct ClassifyOptions {
  /// Skip the integrability precondition (almost-Hermitian debugging only).
  bool allow_nonintegrable = false;
};

/// The forms behind the three verdicts.
struct MetricForms {
  KForm sigma;
  KForm d_sigma;             // zero iff Kaehler
  KForm d_sigma_power;       // d(sigma^{n-1}), zero iff balanced
  KForm d_j_d_sigma;         // d(J^* d sigma), zero iff SKT
};

MetricForms metric_forms(const LieAlgebra& lie, const Metric& g, const ComplexStructure& j,
                         const ClassifyOptions& options = {});
Verdicts classify_metric(const LieAlgebra& lie, const Metric& g, const ComplexStructure& j,
                         const ClassifyOptions& options = {});

enum class PureType { I, II, III, Mixed, None };
std::string pure_type_name(PureType t);

struct HermitianDecomposition {
  Subspace derg;
  Subspace derg_J;
  Subspace derg_r;
  Subspace V_r;
  Subspace V_J;
  std::size_t s = 0;
  std::size_t r = 0;
  std::size_t ell = 0;
  /// First of I, II, III that applies; Mixed when none does, None when g' = 0.
  PureType pure_type = PureType::None;
  /// Individual conditions. I and III can hold together (e.g. sums of aff_R).
  bool type_I = false;
  bool type_II = false;
  bool type_III = false;
};

HermitianDecomposition hermitian_decomposition(const LieAlgebra& lie, const Metric& g,
                                               const ComplexStructure& j);

/// Orthogonal J-paired basis: vectors[2i+1] = J vectors[2i], both of squared
/// length square_norms[i]. Dividing a pair by sqrt(square_norms[i]) gives a
/// unitary pair; the vectors themselves stay rational.
struct UnitaryBasis {
  std::vector<Vector> vectors;
  std::vector<Scalar> square_norms;
};

/// Complex Gram-Schmidt on a J-invariant subspace. With `mixing_seed`, the
/// pivots are drawn from a random rational recombination of the basis.
UnitaryBasis unitary_basis(const Subspace& s, const Metric& g, const ComplexStructure& j,
                           std::optional<std::uint64_t> mixing_seed = std::nullopt);

struct BalancedStructuralResult {
  bool balanced = false;
  /// C = sum [X_{2i-1}, X_{2i}] + sum [Z_{2j-1}, Z_{2j}] over unitary bases of V_r and V_J.
  Vector C;
  bool unimodular_fast_path = false;
};

BalancedStructuralResult balanced_structural(const LieAlgebra& lie, const Metric& g,
                                             const ComplexStructure& j,
                                             std::optional<std::uint64_t> mixing_seed = std::nullopt);

/// g with S orthogonal to W (the g_outer-orthogonal complement of S),
/// g|_S = g_inner|_S and g|_W = g_outer|_W.
Metric splice_metric(const ComplexStructure& j, const Metric& g_inner, const Metric& g_outer,
                     const Subspace& s);

/// Metric with g|_S = g_on_s|_S, g|_C = g_on_c|_C and S orthogonal to C, for
/// complementary subspaces S and C.
Metric block_metric(const Subspace& s, const Metric& g_on_s, const Subspace& c, const Metric& g_on_c);

struct NormalizedSkt {
  Metric metric;
  Subspace complement;
};

/// For an SKT structure of pure type II, replaces the orthogonal complement of
/// g' by a complex complement V with [V, V] orthogonal to [V, g'], keeping the
/// metric on g' and transporting the metric on the complement.
NormalizedSkt normalize_skt_typeII(const LieAlgebra& lie, const ComplexStructure& j, const Metric& g);

/// g' = [V, g'] + [V, V] as an orthogonal direct sum.
bool orthogonal_splitting_holds(const LieAlgebra& lie, const Metric& g, const Subspace& complement);

/// Builds a Kaehler metric from an SKT and a balanced metric on a unimodular
/// two-step solvable algebra of pure type II. Throws PreconditionViolated.
Metric kahler_from_skt_and_balanced_typeII(const LieAlgebra& lie, const ComplexStructure& j,
                                           const Metric& g_skt, const Metric& g_bal);

struct FingerprintComparison {
  bool distinct = false;
  /// Which invariant differs; empty when inconclusive.
  std::string reason;
};

/// Never claims isomorphism: either some invariant differs or the result is inconclusive.
FingerprintComparison fingerprint_distinguish(const LieAlgebra& a, const LieAlgebra& b);

/// P whose columns v_1, Jv_1, v_2, Jv_2, ... form a basis, so that
/// J = P J_std P^{-1}.
Matrix adapted_basis(const ComplexStructure& j);

}  // namespace hermlie
