#pragma once

#include "hermlie/hermitian.hpp"
#include "hermlie/shear.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hermlie {

using DoubleMatrix = std::vector<std::vector<double>>;

/// Exact basis of {S symmetric : J^T S J = S} (dimension n^2 for dim 2n) and
/// the compatible reference point S_0 = (I + J^T J)/2, which is the identity
/// whenever J is orthogonal.
struct MetricParameterization {
  std::vector<Matrix> basis;
  Matrix reference;
  Vector reference_coordinates;
};

/// Throws NotAComplexStructure.
MetricParameterization metric_parameterization(const ComplexStructure& j);

struct SearchConfig {
  std::vector<std::uint64_t> seeds = default_seeds(16);
  int max_iterations = 5000;
  double tolerance = 1e-9;
  double barrier_start = 1e-2;    // mu at iteration 0
  double barrier_decay = 0.5;     // mu *= decay every barrier_period iterations
  int barrier_period = 25;
  double barrier_floor = 1e-14;   // below this mu is set to 0
  double fd_step = 1e-6;          // relative central-difference step
  /// Success also needs min eigenvalue >= floor * trace(S)/dim, so that
  /// sequences running into the boundary of the cone are not reported.
  double eigenvalue_floor = 1e-3;

  static std::vector<std::uint64_t> default_seeds(std::size_t count);
};

enum class SearchStatus { Found, NotFound };

struct SearchResult {
  SearchStatus status = SearchStatus::NotFound;
  DoubleMatrix metric;          // best iterate of the reported seed
  double residual = 0;
  int iterations = 0;           // iterations used by the reported seed
  std::uint64_t seed = 0;
  double min_eigenvalue = 0;
  /// Set when rounding produced a compatible positive-definite rational metric.
  std::optional<Metric> exact_metric;
  bool exact_verified = false;  // exact_metric satisfies the condition under classify_metric
  std::string message;          // "witness found" or "no witness found (inconclusive)"
};

/// Residual model for one (L, J, kind): squared Euclidean norm of the
/// coefficient vector of d sigma, d(sigma^{n-1}) or d(J^* d sigma).
class ResidualModel {
 public:
  ResidualModel(const LieAlgebra& lie, const ComplexStructure& j, ConditionKind kind);

  const MetricParameterization& parameterization() const { return param_; }
  ConditionKind kind() const { return kind_; }
  std::size_t parameters() const { return param_.basis.size(); }
  bool linear() const { return kind_ != ConditionKind::Balanced || half_ <= 2; }

  double residual(const std::vector<double>& x) const;
  /// Central finite differences with step h * max(1, |x_i|).
  std::vector<double> gradient_fd(const std::vector<double>& x, double h) const;
  /// 2 V^T V x; only for linear kinds.
  std::vector<double> gradient_exact(const std::vector<double>& x) const;

  DoubleMatrix metric_of(const std::vector<double>& x) const;
  /// Least-squares coordinates of S; throws IncompatibleMetric if S is not in the span.
  std::vector<double> coordinates_of(const DoubleMatrix& s) const;
  /// Exact matrix V with condition coefficients = V x (linear kinds).
  const Matrix& exact_map() const { return v_exact_; }

 private:
  std::vector<double> condition_coefficients(const std::vector<double>& x) const;

  ConditionKind kind_;
  std::size_t dim_;
  std::size_t half_;
  MetricParameterization param_;
  Matrix v_exact_;
  std::vector<std::vector<double>> v_;      // rows of V
  std::vector<std::vector<double>> sigma_;  // per basis element: dense 2-form over masks
  std::vector<std::vector<double>> dsigma_; // per basis element: dense 3-form over masks
};

/// Residual of a floating-point compatible metric.  Throws IncompatibleMetric.
double residual(const LieAlgebra& lie, const ComplexStructure& j, const DoubleMatrix& s, ConditionKind kind);

/// Multi-start projected gradient descent with a log-det barrier, then a
/// rounding pass that tries to produce an exact witness.  Throws NotIntegrable.
SearchResult search_metric(const LieAlgebra& lie, const ComplexStructure& j, ConditionKind kind,
                           const SearchConfig& config = {});

/// Best rational approximation with denominator at most max_den.
Scalar continued_fraction(double x, std::int64_t max_den);

}  // namespace hermlie
