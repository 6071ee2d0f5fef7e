#include "hermlie/metric_search.hpp"

#include "hermlie/error.hpp"
#include "hermlie/forms.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <random>

namespace hermlie {

namespace {

using Mask = KForm::Mask;

Eigen::MatrixXd to_eigen(const DoubleMatrix& m) {
  Eigen::MatrixXd e(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t k = 0; k < m.size(); ++k) e(i, k) = m[i][k];
  return e;
}

/// log det S, or nullopt when S is not positive definite.
std::optional<double> log_det(const DoubleMatrix& s) {
  Eigen::LLT<Eigen::MatrixXd> llt(to_eigen(s));
  if (llt.info() != Eigen::Success) return std::nullopt;
  double out = 0;
  const Eigen::MatrixXd l = llt.matrixL();
  for (Eigen::Index i = 0; i < l.rows(); ++i) {
    if (!(l(i, i) > 0)) return std::nullopt;
    out += 2 * std::log(l(i, i));
  }
  return out;
}

double min_eigenvalue(const DoubleMatrix& s) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(s), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

/// Coefficients of a form in the order of masks_of_degree(dim, degree).
std::vector<Scalar> coefficients(const KForm& f, std::size_t dim, std::size_t degree) {
  std::vector<Scalar> out;
  for (Mask m : masks_of_degree(dim, degree)) out.push_back(f.coefficient(m));
  return out;
}

/// sigma(x, y) = (J^T S)_{xy} for a compatible (not necessarily definite) S.
KForm sigma_of(const ComplexStructure& j, const Matrix& s) {
  const std::size_t n = s.rows();
  const Matrix m = j.matrix().transpose() * s;
  KForm out(n, 2);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) out.add_term((Mask(1) << a) | (Mask(1) << b), m(a, b));
  return out;
}

std::vector<double> dense_masks(const KForm& f) {
  std::vector<double> out(std::size_t(1) << f.ambient_dim(), 0.0);
  for (const auto& [mask, c] : f.terms()) out[mask] = to_double(c);
  return out;
}

std::vector<double> dense_wedge(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out(a.size(), 0.0);
  for (Mask ma = 0; ma < a.size(); ++ma) {
    if (a[ma] == 0) continue;
    for (Mask mb = 0; mb < b.size(); ++mb)
      if (b[mb] != 0 && (ma & mb) == 0) out[ma | mb] += wedge_sign(ma, mb) * a[ma] * b[mb];
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> SearchConfig::default_seeds(std::size_t count) {
  std::vector<std::uint64_t> s(count);
  for (std::size_t i = 0; i < count; ++i) s[i] = i;
  return s;
}

MetricParameterization metric_parameterization(const ComplexStructure& j) {
  const std::size_t n = j.dim();
  const Matrix& jm = j.matrix();
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) slots.emplace_back(a, b);
  auto unit = [&](std::size_t u) {
    Matrix e(n, n);
    e(slots[u].first, slots[u].second) = 1;
    e(slots[u].second, slots[u].first) = 1;
    return e;
  };
  std::vector<Vector> columns;
  for (std::size_t u = 0; u < slots.size(); ++u) {
    Matrix e = unit(u);
    Matrix d = jm.transpose() * e * jm - e;
    Vector col;
    for (const auto& [a, b] : slots) col.push_back(d(a, b));
    columns.push_back(col);
  }
  MetricParameterization out;
  for (const auto& v : nullspace(Matrix::from_columns(columns, slots.size()))) {
    Matrix s(n, n);
    for (std::size_t u = 0; u < slots.size(); ++u) {
      s(slots[u].first, slots[u].second) = v[u];
      s(slots[u].second, slots[u].first) = v[u];
    }
    out.basis.push_back(s);
  }
  if (out.basis.size() != (n / 2) * (n / 2))
    throw Error(ErrorCode::NotAComplexStructure, "compatible forms do not have dimension n^2");
  out.reference = (Matrix::identity(n) + jm.transpose() * jm);
  out.reference = Scalar(1, 2) * out.reference;
  std::vector<Vector> flat;
  for (const auto& s : out.basis) {
    Vector f;
    for (const auto& [a, b] : slots) f.push_back(s(a, b));
    flat.push_back(f);
  }
  Vector target;
  for (const auto& [a, b] : slots) target.push_back(out.reference(a, b));
  out.reference_coordinates = *solve(Matrix::from_columns(flat, slots.size()), target);
  return out;
}

ResidualModel::ResidualModel(const LieAlgebra& lie, const ComplexStructure& j, ConditionKind kind)
    : kind_(kind), dim_(lie.dim()), half_(lie.dim() / 2), param_(metric_parameterization(j)) {
  if (j.dim() != dim_) throw Error(ErrorCode::DimensionMismatch, "J has the wrong size");
  const std::size_t m = param_.basis.size();
  std::vector<std::vector<Scalar>> cols;
  for (const auto& s : param_.basis) {
    KForm sigma = sigma_of(j, s);
    KForm ds = ce_differential(lie, sigma);
    if (kind == ConditionKind::Skt) {
      cols.push_back(coefficients(ce_differential(lie, j_pullback(j, ds)), dim_, std::min<std::size_t>(4, dim_)));
    } else if (kind == ConditionKind::Kahler || half_ == 2) {
      cols.push_back(coefficients(ds, dim_, std::min<std::size_t>(3, dim_)));
    } else if (half_ <= 1) {
      cols.emplace_back();
    } else {
      sigma_.push_back(dense_masks(sigma));
      dsigma_.push_back(dense_masks(ds));
    }
  }
  if (linear()) {
    const std::size_t rows = cols.empty() ? 0 : cols.front().size();
    v_exact_ = Matrix(rows, m);
    v_.assign(rows, std::vector<double>(m, 0.0));
    for (std::size_t c = 0; c < m; ++c)
      for (std::size_t r = 0; r < rows; ++r) {
        v_exact_(r, c) = cols[c][r];
        v_[r][c] = to_double(cols[c][r]);
      }
  }
}

std::vector<double> ResidualModel::condition_coefficients(const std::vector<double>& x) const {
  if (linear()) {
    std::vector<double> out(v_.size(), 0.0);
    for (std::size_t r = 0; r < v_.size(); ++r)
      for (std::size_t c = 0; c < x.size(); ++c) out[r] += v_[r][c] * x[c];
    return out;
  }
  // d(sigma^{n-1}) = (n-1) d sigma ^ sigma^{n-2}
  std::vector<double> sigma(std::size_t(1) << dim_, 0.0), w(sigma.size(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t k = 0; k < sigma.size(); ++k) {
      sigma[k] += x[i] * sigma_[i][k];
      w[k] += x[i] * dsigma_[i][k];
    }
  for (std::size_t p = 0; p + 2 < half_; ++p) w = dense_wedge(w, sigma);
  for (auto& c : w) c *= static_cast<double>(half_ - 1);
  return w;
}

double ResidualModel::residual(const std::vector<double>& x) const {
  double r = 0;
  for (double c : condition_coefficients(x)) r += c * c;
  return r;
}

std::vector<double> ResidualModel::gradient_fd(const std::vector<double>& x, double h) const {
  std::vector<double> g(x.size()), y = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double step = h * std::max(1.0, std::abs(x[i]));
    y[i] = x[i] + step;
    const double up = residual(y);
    y[i] = x[i] - step;
    const double down = residual(y);
    y[i] = x[i];
    g[i] = (up - down) / (2 * step);
  }
  return g;
}

std::vector<double> ResidualModel::gradient_exact(const std::vector<double>& x) const {
  if (!linear()) throw Error(ErrorCode::InvalidInput, "exact gradient needs a linear condition");
  std::vector<double> vx = condition_coefficients(x), g(x.size(), 0.0);
  for (std::size_t r = 0; r < v_.size(); ++r)
    for (std::size_t c = 0; c < x.size(); ++c) g[c] += 2 * v_[r][c] * vx[r];
  return g;
}

DoubleMatrix ResidualModel::metric_of(const std::vector<double>& x) const {
  DoubleMatrix s(dim_, std::vector<double>(dim_, 0.0));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t a = 0; a < dim_; ++a)
      for (std::size_t b = 0; b < dim_; ++b)
        if (param_.basis[i](a, b) != 0) s[a][b] += x[i] * to_double(param_.basis[i](a, b));
  return s;
}

std::vector<double> ResidualModel::coordinates_of(const DoubleMatrix& s) const {
  if (s.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "metric has the wrong size");
  const std::size_t m = parameters();
  Eigen::MatrixXd a(dim_ * dim_, m);
  Eigen::VectorXd rhs(dim_ * dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    if (s[r].size() != dim_) throw Error(ErrorCode::DimensionMismatch, "metric has the wrong size");
    for (std::size_t c = 0; c < dim_; ++c) {
      rhs(r * dim_ + c) = s[r][c];
      for (std::size_t i = 0; i < m; ++i) a(r * dim_ + c, i) = to_double(param_.basis[i](r, c));
    }
  }
  Eigen::VectorXd x = a.colPivHouseholderQr().solve(rhs);
  if ((a * x - rhs).norm() > 1e-9 * std::max(1.0, rhs.norm()))
    throw Error(ErrorCode::IncompatibleMetric, "metric is not J-invariant");
  return {x.data(), x.data() + x.size()};
}

double residual(const LieAlgebra& lie, const ComplexStructure& j, const DoubleMatrix& s, ConditionKind kind) {
  ResidualModel model(lie, j, kind);
  return model.residual(model.coordinates_of(s));
}

Scalar continued_fraction(double x, std::int64_t max_den) {
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidInput, "cannot round a non-finite value");
  // convergents h/k of the continued fraction of x
  Scalar h_prev = 1, h = std::floor(x), k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  for (int steps = 0; steps < 64 && frac > 1e-15; ++steps) {
    const double inv = 1.0 / frac;
    const double a = std::floor(inv);
    Scalar next_k = Scalar(a) * k + k_prev;
    if (next_k > max_den) break;
    Scalar next_h = Scalar(a) * h + h_prev;
    h_prev = h;
    h = next_h;
    k_prev = k;
    k = next_k;
    frac = inv - a;
  }
  return h / k;
}

namespace {

bool condition_holds(const LieAlgebra& lie, const Metric& g, const ComplexStructure& j, ConditionKind kind) {
  Verdicts v = classify_metric(lie, g, j);
  switch (kind) {
    case ConditionKind::Kahler: return v.kahler;
    case ConditionKind::Balanced: return v.balanced;
    case ConditionKind::Skt: return v.skt;
  }
  return false;
}

/// Rounds x and, for linear conditions, projects exactly onto ker V.
void rationalize(const LieAlgebra& lie, const ComplexStructure& j, const ResidualModel& model,
                 const std::vector<double>& x, SearchResult& result) {
  const auto& basis = model.parameterization().basis;
  std::vector<Vector> kernel;
  if (model.linear()) kernel = nullspace(model.exact_map());
  for (std::int64_t max_den : {1, 10, 100, 1000, 10000, 1000000}) {
    Vector q;
    for (double xi : x) q.push_back(continued_fraction(xi, max_den));
    if (model.linear()) {
      if (kernel.empty()) return;
      // Euclidean projection q -> N (N^T N)^{-1} N^T q
      const Matrix n = Matrix::from_columns(kernel, q.size());
      const Matrix nt = n.transpose();
      auto c = solve(nt * n, nt * q);
      if (!c) return;
      q = n * *c;
    }
    Matrix s(basis.front().rows(), basis.front().cols());
    for (std::size_t i = 0; i < q.size(); ++i) s = s + q[i] * basis[i];
    if (!is_positive_definite(s)) continue;
    Metric g(s);
    result.exact_metric = g;
    if (condition_holds(lie, g, j, model.kind())) {
      result.exact_verified = true;
      return;
    }
  }
}

struct SeedRun {
  bool found = false;
  std::vector<double> x;
  double residual = std::numeric_limits<double>::infinity();
  int iterations = 0;
};

SeedRun run_seed(const ResidualModel& model, const SearchConfig& cfg, std::uint64_t seed) {
  const std::size_t m = model.parameters();
  const auto& param = model.parameterization();
  std::vector<double> trace(m, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t a = 0; a < param.basis[i].rows(); ++a) trace[i] += to_double(param.basis[i](a, a));
  const double trace_norm2 = [&] {
    double t = 0;
    for (double v : trace) t += v * v;
    return t;
  }();
  auto project = [&](std::vector<double> g) {
    double dot = 0;
    for (std::size_t i = 0; i < m; ++i) dot += g[i] * trace[i];
    for (std::size_t i = 0; i < m; ++i) g[i] -= dot / trace_norm2 * trace[i];
    return g;
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<double> x0(m), dir(m);
  for (std::size_t i = 0; i < m; ++i) {
    x0[i] = to_double(param.reference_coordinates[i]);
    dir[i] = unif(rng);
  }
  dir = project(dir);
  std::vector<double> x = x0;
  for (double scale = 0.5;; scale /= 2) {
    for (std::size_t i = 0; i < m; ++i) x[i] = x0[i] + scale * dir[i];
    if (log_det(model.metric_of(x)) || scale == 0) break;
  }

  auto objective = [&](const std::vector<double>& y, double mu) {
    auto ld = log_det(model.metric_of(y));
    if (!ld) return std::numeric_limits<double>::infinity();
    return model.residual(y) - mu * *ld;
  };
  auto gradient = [&](const std::vector<double>& y, double mu) {
    std::vector<double> g(m), z = y;
    for (std::size_t i = 0; i < m; ++i) {
      const double step = cfg.fd_step * std::max(1.0, std::abs(y[i]));
      z[i] = y[i] + step;
      const double up = objective(z, mu);
      z[i] = y[i] - step;
      const double down = objective(z, mu);
      z[i] = y[i];
      g[i] = (up - down) / (2 * step);
    }
    return project(g);
  };

  const double trace0 = [&] {
    double t = 0;
    for (std::size_t i = 0; i < m; ++i) t += trace[i] * x[i];
    return t;
  }();
  const double eig_floor = cfg.eigenvalue_floor * trace0 / static_cast<double>(model.metric_of(x).size());
  auto success = [&](const std::vector<double>& y, double r) {
    return r <= cfg.tolerance && min_eigenvalue(model.metric_of(y)) >= eig_floor;
  };

  SeedRun run;
  double mu = cfg.barrier_start;
  double alpha = 1e-2;
  int stalled = 0;
  std::vector<double> g = gradient(x, mu);
  for (int it = 0; it < cfg.max_iterations; ++it) {
    run.iterations = it + 1;
    const double r = model.residual(x);
    if (success(x, r)) {
      run.found = true;
      run.x = x;
      run.residual = r;
      run.iterations = it;
      return run;
    }
    if (it > 0 && it % cfg.barrier_period == 0) {
      mu = mu * cfg.barrier_decay < cfg.barrier_floor ? 0.0 : mu * cfg.barrier_decay;
      g = gradient(x, mu);
    }
    const double f = objective(x, mu);
    std::vector<double> next(m);
    double f_next = std::numeric_limits<double>::infinity();
    double step = alpha;
    for (int tries = 0; tries < 60; ++tries, step /= 2) {
      for (std::size_t i = 0; i < m; ++i) next[i] = x[i] - step * g[i];
      f_next = objective(next, mu);
      if (f_next <= f) break;
    }
    if (!(f_next <= f)) break;  // no descent possible at machine precision
    std::vector<double> g_next = gradient(next, mu);
    double ss = 0, sy = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const double s = next[i] - x[i], y = g_next[i] - g[i];
      ss += s * s;
      sy += s * y;
    }
    alpha = sy > 0 ? std::clamp(ss / sy, 1e-12, 1e6) : std::min(step * 2, 1e6);
    stalled = (mu == 0 && f - f_next <= 1e-16 * (1 + std::abs(f))) ? stalled + 1 : 0;
    x = next;
    g = g_next;
    if (stalled >= 200) break;
    // collapsing onto the boundary of the cone: this start cannot succeed
    if (mu == 0 && it % 50 == 0 && min_eigenvalue(model.metric_of(x)) < 1e-2 * eig_floor) break;
  }
  run.x = x;
  run.residual = model.residual(x);
  run.found = success(x, run.residual);
  return run;
}

}  // namespace

SearchResult search_metric(const LieAlgebra& lie, const ComplexStructure& j, ConditionKind kind,
                           const SearchConfig& config) {
  if (!validate_complex_structure(lie, j).integrable)
    throw Error(ErrorCode::NotIntegrable, "J is not integrable");
  if (config.seeds.empty()) throw Error(ErrorCode::InvalidInput, "seed list is empty");
  const ResidualModel model(lie, j, kind);
  SearchResult result;
  SeedRun best;
  std::uint64_t best_seed = config.seeds.front();
  for (std::uint64_t seed : config.seeds) {
    SeedRun run = run_seed(model, config, seed);
    if (run.found || run.residual < best.residual) {
      best = run;
      best_seed = seed;
    }
    if (run.found) break;
  }
  result.status = best.found ? SearchStatus::Found : SearchStatus::NotFound;
  result.metric = model.metric_of(best.x);
  result.residual = best.residual;
  result.iterations = best.iterations;
  result.seed = best_seed;
  result.min_eigenvalue = min_eigenvalue(result.metric);
  result.message = best.found ? "witness found" : "no witness found (inconclusive)";
  if (best.found) rationalize(lie, j, model, best.x, result);
  return result;
}

}  // namespace hermlie
