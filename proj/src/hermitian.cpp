#include "hermlie/hermitian.hpp"

#include "hermlie/error.hpp"

#include <random>

namespace hermlie {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw Error(ErrorCode::DimensionMismatch, what);
}

void require_compatible(const Metric& g, const ComplexStructure& j) {
  require_same_dim(g.dim(), j.dim(), "metric and complex structure dimensions differ");
  if (!g.compatible_with(j))
    throw Error(ErrorCode::IncompatibleMetric, "metric is not J-invariant (J^T S J != S)");
}

bool is_j_invariant(const Subspace& s, const ComplexStructure& j) {
  for (const auto& v : s.basis())
    if (!s.contains(j.apply(v))) return false;
  return true;
}

Matrix random_invertible(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  while (true) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = coeff(rng);
    if (determinant(m) != 0) return m;
  }
}

Matrix gram(const Metric& g, const std::vector<Vector>& vs) {
  Matrix m(vs.size(), vs.size());
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = 0; b < vs.size(); ++b) m(a, b) = g.inner(vs[a], vs[b]);
  return m;
}

/// Metric whose Gram matrix in the basis given by the columns of P is G:
/// S = P^{-T} G P^{-1}.
Metric metric_from_gram(const Matrix& p, const Matrix& g) {
  auto p_inv = inverse(p);
  if (!p_inv) throw Error(ErrorCode::DimensionMismatch, "subspaces are not complementary");
  return Metric(p_inv->transpose() * g * *p_inv);
}

}  // namespace

ComplexStructure::ComplexStructure(Matrix j) : j_(std::move(j)) {
  if (j_.rows() != j_.cols() || j_.rows() % 2 != 0)
    throw Error(ErrorCode::NotAComplexStructure, "J must be a square matrix of even size");
  Matrix sq = j_ * j_;
  const std::size_t n = j_.rows();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (sq(a, b) != (a == b ? Scalar(-1) : Scalar(0)))
        throw Error(ErrorCode::NotAComplexStructure, "J^2 != -1");
}

ComplexStructure ComplexStructure::standard(std::size_t dim) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i + 1 < dim; i += 2)
    pairs.emplace_back(static_cast<int>(i + 1), static_cast<int>(i + 2));
  return from_pairs(dim, pairs);
}

ComplexStructure ComplexStructure::from_pairs(std::size_t dim,
                                              const std::vector<std::pair<int, int>>& pairs) {
  Matrix j(dim, dim);
  for (auto [a, b] : pairs) {
    if (a < 1 || b < 1 || a > static_cast<int>(dim) || b > static_cast<int>(dim))
      throw Error(ErrorCode::IndexOutOfRange, "complex structure pair out of range");
    j(static_cast<std::size_t>(b - 1), static_cast<std::size_t>(a - 1)) = 1;
    j(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)) = -1;
  }
  return ComplexStructure(std::move(j));
}

Metric::Metric(Matrix s) : s_(std::move(s)) {
  if (s_.rows() != s_.cols()) throw Error(ErrorCode::NotPositiveDefinite, "metric must be square");
  if (!s_.is_symmetric()) throw Error(ErrorCode::NotPositiveDefinite, "metric is not symmetric");
  if (!is_positive_definite(s_))
    throw Error(ErrorCode::NotPositiveDefinite, "metric is not positive definite");
}

Metric Metric::identity(std::size_t dim) { return Metric(Matrix::identity(dim)); }

Metric Metric::from_orthonormal_basis(const std::vector<Vector>& basis) {
  if (basis.empty()) throw Error(ErrorCode::DimensionMismatch, "empty basis");
  const std::size_t n = basis.front().size();
  Matrix p = Matrix::from_columns(basis, n);
  return metric_from_gram(p, Matrix::identity(n));
}

bool Metric::compatible_with(const ComplexStructure& j) const {
  if (j.dim() != dim()) return false;
  return j.matrix().transpose() * s_ * j.matrix() == s_;
}

Vector nijenhuis(const LieAlgebra& lie, const ComplexStructure& j, const Vector& x, const Vector& y) {
  require_same_dim(lie.dim(), j.dim(), "algebra and complex structure dimensions differ");
  Vector jx = j.apply(x), jy = j.apply(y);
  Vector n = bracket(lie, jx, jy);
  n = subtract(n, j.apply(bracket(lie, jx, y)));
  n = subtract(n, j.apply(bracket(lie, x, jy)));
  return subtract(n, bracket(lie, x, y));
}

IntegrabilityReport validate_complex_structure(const LieAlgebra& lie, const ComplexStructure& j) {
  IntegrabilityReport report;
  const std::size_t n = lie.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!is_zero(nijenhuis(lie, j, unit_vector(n, a), unit_vector(n, b)))) {
        report.integrable = false;
        report.failing_pairs.emplace_back(static_cast<int>(a + 1), static_cast<int>(b + 1));
      }
  return report;
}

KForm fundamental_form(const Metric& g, const ComplexStructure& j) {
  require_compatible(g, j);
  const std::size_t n = g.dim();
  Matrix jt_s = j.matrix().transpose() * g.matrix();  // (i, k) = g(J e_i, e_k)
  KForm sigma(n, 2);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      sigma.add_term((KForm::Mask(1) << a) | (KForm::Mask(1) << b), jt_s(a, b));
  return sigma;
}

KForm j_pullback(const ComplexStructure& j, const KForm& form, PullbackConvention convention) {
  KForm out = pullback(j.matrix(), form);
  if (convention == PullbackConvention::DualAction && form.degree() % 2 == 1) out *= Scalar(-1);
  return out;
}

MetricForms metric_forms(const LieAlgebra& lie, const Metric& g, const ComplexStructure& j,
                         const ClassifyOptions& options) {
  if (!lie.validated()) throw Error(ErrorCode::NotValidated, "algebra fails the Jacobi identity");
  require_same_dim(lie.dim(), j.dim(), "algebra and complex structure dimensions differ");
  require_compatible(g, j);
  if (!options.allow_nonintegrable && !validate_complex_structure(lie, j).integrable)
    throw Error(ErrorCode::NotIntegrable, "Nijenhuis tensor does not vanish");
  const std::size_t n = lie.dim() / 2;
  MetricForms f{fundamental_form(g, j), KForm(lie.dim(), 0), KForm(lie.dim(), 0), KForm(lie.dim(), 0)};
  f.d_sigma = ce_differential(lie, f.sigma);
  f.d_sigma_power = ce_differential(lie, wedge_power(f.sigma, n - 1));
  f.d_j_d_sigma = ce_differential(lie, j_pullback(j, f.d_sigma));
  return f;
}

Verdicts classify_metric(const LieAlgebra& lie, const Metric& g, const ComplexStructure& j,
                         const ClassifyOptions& options) {
  MetricForms f = metric_forms(lie, g, j, options);
  return {f.d_sigma.is_zero(), f.d_sigma_power.is_zero(), f.d_j_d_sigma.is_zero()};
}

std::string pure_type_name(PureType t) {
  switch (t) {
    case PureType::I: return "I";
    case PureType::II: return "II";
    case PureType::III: return "III";
    case PureType::Mixed: return "mixed";
    case PureType::None: return "none";
  }
  return "none";
}

HermitianDecomposition hermitian_decomposition(const LieAlgebra& lie, const Metric& g,
                                               const ComplexStructure& j) {
  if (!lie.validated()) throw Error(ErrorCode::NotValidated, "algebra fails the Jacobi identity");
  require_same_dim(lie.dim(), j.dim(), "algebra and complex structure dimensions differ");
  require_compatible(g, j);
  const std::size_t n = lie.dim();
  const Subspace whole = Subspace::whole(n);
  HermitianDecomposition d;
  d.derg = image_of_bracket(lie);
  Subspace j_derg = image(j.matrix(), d.derg);
  d.derg_J = intersect(d.derg, j_derg);
  d.derg_r = orthogonal_complement(d.derg_J, g.matrix(), d.derg);
  d.V_r = sum(d.derg_r, image(j.matrix(), d.derg_r));
  d.V_J = orthogonal_complement(sum(d.derg, j_derg), g.matrix(), whole);
  d.s = d.derg_J.dim() / 2;
  d.r = d.V_r.dim() / 2;
  d.ell = d.V_J.dim() / 2;
  if (d.derg.dim() == 0) return d;
  d.type_I = d.s == 0;
  d.type_II = d.r == 0;
  d.type_III = d.ell == 0;
  d.pure_type = d.type_I ? PureType::I
                : d.type_II ? PureType::II
                : d.type_III ? PureType::III
                : PureType::Mixed;
  return d;
}

UnitaryBasis unitary_basis(const Subspace& s, const Metric& g, const ComplexStructure& j,
                           std::optional<std::uint64_t> mixing_seed) {
  require_compatible(g, j);
  if (!is_j_invariant(s, j)) throw Error(ErrorCode::NotJInvariant, "subspace is not J-invariant");
  std::vector<Vector> candidates = s.basis();
  if (mixing_seed && !candidates.empty()) {
    std::mt19937_64 rng(*mixing_seed);
    Matrix mix = random_invertible(candidates.size(), rng);
    std::vector<Vector> mixed;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      Vector v = zero_vector(s.ambient_dim());
      for (std::size_t b = 0; b < candidates.size(); ++b) axpy(mix(b, c), candidates[b], v);
      mixed.push_back(std::move(v));
    }
    candidates = std::move(mixed);
  }
  UnitaryBasis u;
  for (const auto& c : candidates) {
    if (u.vectors.size() == s.dim()) break;
    Vector v = c;
    for (std::size_t p = 0; p < u.square_norms.size(); ++p) {
      const Vector& x = u.vectors[2 * p];
      const Vector& jx = u.vectors[2 * p + 1];
      axpy(-g.inner(c, x) / u.square_norms[p], x, v);
      axpy(-g.inner(c, jx) / u.square_norms[p], jx, v);
    }
    // A candidate already in the span of earlier pairs is skipped; the next
    // one serves as the pivot instead.
    if (is_zero(v)) continue;
    Scalar norm = g.inner(v, v);
    Vector jv = j.apply(v);
    u.vectors.push_back(std::move(v));
    u.vectors.push_back(std::move(jv));
    u.square_norms.push_back(norm);
  }
  return u;
}

BalancedStructuralResult balanced_structural(const LieAlgebra& lie, const Metric& g,
                                             const ComplexStructure& j,
                                             std::optional<std::uint64_t> mixing_seed) {
  if (!is_two_step_solvable(lie))
    throw Error(ErrorCode::NotTwoStepSolvable, "derived algebra is not abelian");
  HermitianDecomposition d = hermitian_decomposition(lie, g, j);
  const std::size_t n = lie.dim();
  BalancedStructuralResult out;
  out.C = zero_vector(n);
  std::optional<std::uint64_t> seed_z;
  if (mixing_seed) seed_z = *mixing_seed + 0x9e3779b97f4a7c15ULL;
  UnitaryBasis x = unitary_basis(d.V_r, g, j, mixing_seed);
  UnitaryBasis z = unitary_basis(d.V_J, g, j, seed_z);
  for (const UnitaryBasis* u : {&x, &z})
    for (std::size_t p = 0; p < u->square_norms.size(); ++p)
      axpy(Scalar(1) / u->square_norms[p], bracket(lie, u->vectors[2 * p], u->vectors[2 * p + 1]), out.C);

  if (is_unimodular(lie)) {
    out.unimodular_fast_path = true;
    out.balanced = is_zero(out.C);
    return out;
  }
  out.balanced = true;
  for (const auto& v : d.V_J.basis())
    if (trace_ad(lie, v) != 0) out.balanced = false;
  for (const auto& y : d.derg_J.basis())
    if (g.inner(out.C, y) != 0) out.balanced = false;
  Vector jc = j.apply(out.C);
  for (const auto& v : d.V_r.basis())
    if (trace_ad(lie, v) != -g.inner(jc, v)) out.balanced = false;
  return out;
}

Metric block_metric(const Subspace& s, const Metric& g_on_s, const Subspace& c, const Metric& g_on_c) {
  const std::size_t n = s.ambient_dim();
  std::vector<Vector> cols = s.basis();
  cols.insert(cols.end(), c.basis().begin(), c.basis().end());
  if (cols.size() != n) throw Error(ErrorCode::DimensionMismatch, "subspaces are not complementary");
  Matrix p = Matrix::from_columns(cols, n);
  Matrix gs = gram(g_on_s, s.basis());
  Matrix gc = gram(g_on_c, c.basis());
  Matrix block(n, n);
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = 0; b < s.dim(); ++b) block(a, b) = gs(a, b);
  for (std::size_t a = 0; a < c.dim(); ++a)
    for (std::size_t b = 0; b < c.dim(); ++b) block(s.dim() + a, s.dim() + b) = gc(a, b);
  return metric_from_gram(p, block);
}

Metric splice_metric(const ComplexStructure& j, const Metric& g_inner, const Metric& g_outer,
                     const Subspace& s) {
  require_compatible(g_inner, j);
  require_compatible(g_outer, j);
  if (!is_j_invariant(s, j)) throw Error(ErrorCode::NotJInvariant, "subspace is not J-invariant");
  Subspace w = orthogonal_complement(s, g_outer.matrix(), Subspace::whole(s.ambient_dim()));
  return block_metric(s, g_inner, w, g_outer);
}

NormalizedSkt normalize_skt_typeII(const LieAlgebra& lie, const ComplexStructure& j, const Metric& g) {
  if (!is_two_step_solvable(lie))
    throw Error(ErrorCode::NotTwoStepSolvable, "derived algebra is not abelian");
  HermitianDecomposition d = hermitian_decomposition(lie, g, j);
  if (d.derg.dim() == 0 || !d.type_II)
    throw Error(ErrorCode::NotPureTypeII, "derived algebra is not a nonzero complex subspace");
  if (!classify_metric(lie, g, j).skt) throw Error(ErrorCode::NotSKT, "metric is not SKT");

  const std::size_t n = lie.dim();
  const Subspace& derg = d.derg;
  const std::vector<Vector>& zs = d.V_J.basis();
  Subspace d1 = bracket_span(lie, d.V_J, derg);
  const std::vector<Vector>& ds = d1.basis();
  const std::size_t q = zs.size(), p = ds.size();

  // Unknowns t(a, b): r(z_a) = sum_b t(a, b) d_b, flattened as a * p + b.
  auto var = [p](std::size_t a, std::size_t b) { return a * p + b; };
  std::vector<Vector> rows;
  std::vector<Scalar> rhs;

  // Complex linearity: r(J z_a) = J r(z_a), where J z_a = sum_c M(c, a) z_c.
  for (std::size_t a = 0; a < q; ++a) {
    Vector m = d.V_J.coordinates(j.apply(zs[a]));
    for (std::size_t coord = 0; coord < n; ++coord) {
      Vector row = zero_vector(q * p);
      for (std::size_t c = 0; c < q; ++c)
        for (std::size_t b = 0; b < p; ++b) row[var(c, b)] += m[c] * ds[b][coord];
      for (std::size_t b = 0; b < p; ++b) row[var(a, b)] -= j.apply(ds[b])[coord];
      if (!is_zero(row)) {
        rows.push_back(std::move(row));
        rhs.push_back(0);
      }
    }
  }
  // [z_a + r(z_a), z_c + r(z_c)] orthogonal to every d_e.
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t c = a + 1; c < q; ++c)
      for (std::size_t e = 0; e < p; ++e) {
        Vector gd = g.matrix() * ds[e];
        Vector row = zero_vector(q * p);
        for (std::size_t b = 0; b < p; ++b) {
          row[var(a, b)] += dot(gd, bracket(lie, ds[b], zs[c]));
          row[var(c, b)] += dot(gd, bracket(lie, zs[a], ds[b]));
        }
        rows.push_back(std::move(row));
        rhs.push_back(-dot(gd, bracket(lie, zs[a], zs[c])));
      }

  Vector t = zero_vector(q * p);
  if (!rows.empty()) {
    auto sol = solve(Matrix::from_rows(rows, q * p), rhs);
    if (!sol)
      throw Error(ErrorCode::PreconditionViolated,
                  "no complex complement splits the derived algebra orthogonally");
    t = *sol;
  }
  std::vector<Vector> shifted;
  for (std::size_t a = 0; a < q; ++a) {
    Vector v = zs[a];
    for (std::size_t b = 0; b < p; ++b) axpy(t[var(a, b)], ds[b], v);
    shifted.push_back(std::move(v));
  }
  Subspace complement = Subspace::span(n, shifted);

  // g on the new complement is transported from V_J along z -> z + r(z).
  std::vector<Vector> cols = derg.basis();
  cols.insert(cols.end(), shifted.begin(), shifted.end());
  Matrix pm = Matrix::from_columns(cols, n);
  Matrix block(n, n);
  Matrix gd = gram(g, derg.basis());
  Matrix gz = gram(g, zs);
  for (std::size_t a = 0; a < derg.dim(); ++a)
    for (std::size_t b = 0; b < derg.dim(); ++b) block(a, b) = gd(a, b);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) block(derg.dim() + a, derg.dim() + b) = gz(a, b);
  return {metric_from_gram(pm, block), complement};
}

bool orthogonal_splitting_holds(const LieAlgebra& lie, const Metric& g, const Subspace& complement) {
  Subspace derg = image_of_bracket(lie);
  Subspace a = bracket_span(lie, complement, derg);
  Subspace b = bracket_span(lie, complement, complement);
  if (!derg.contains(b) || !derg.contains(a)) return false;
  if (a.dim() + b.dim() != derg.dim() || sum(a, b).dim() != derg.dim()) return false;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis())
      if (g.inner(x, y) != 0) return false;
  return true;
}

Metric kahler_from_skt_and_balanced_typeII(const LieAlgebra& lie, const ComplexStructure& j,
                                           const Metric& g_skt, const Metric& g_bal) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::PreconditionViolated, why); };
  if (!lie.validated()) fail("algebra fails the Jacobi identity");
  if (!is_unimodular(lie)) fail("algebra is not unimodular");
  if (!is_two_step_solvable(lie)) fail("algebra is not two-step solvable");
  if (!g_skt.compatible_with(j)) fail("SKT metric is not compatible with J");
  if (!g_bal.compatible_with(j)) fail("balanced metric is not compatible with J");
  if (!validate_complex_structure(lie, j).integrable) fail("J is not integrable");
  HermitianDecomposition d = hermitian_decomposition(lie, g_skt, j);
  if (d.derg.dim() == 0 || !d.type_II) fail("structure is not of pure type II");
  if (!classify_metric(lie, g_skt, j).skt) fail("first metric is not SKT");
  if (!classify_metric(lie, g_bal, j).balanced) fail("second metric is not balanced");

  NormalizedSkt normalized = normalize_skt_typeII(lie, j, g_skt);
  const std::size_t n = lie.dim();
  Subspace v_hat = orthogonal_complement(d.derg, g_bal.matrix(), Subspace::whole(n));

  // Project the normalized complement onto v_hat along g'.
  std::vector<Vector> cols = v_hat.basis();
  cols.insert(cols.end(), d.derg.basis().begin(), d.derg.basis().end());
  Matrix split_inv = *inverse(Matrix::from_columns(cols, n));
  std::vector<Vector> projected;
  for (const auto& z : normalized.complement.basis()) {
    Vector coords = split_inv * z;
    Vector w = zero_vector(n);
    for (std::size_t a = 0; a < v_hat.dim(); ++a) axpy(coords[a], v_hat.basis()[a], w);
    projected.push_back(std::move(w));
  }

  std::vector<Vector> basis = d.derg.basis();
  const auto& zs = normalized.complement.basis();
  basis.insert(basis.end(), zs.begin(), zs.end());
  Matrix block(n, n);
  Matrix gd = gram(normalized.metric, d.derg.basis());
  Matrix gz = gram(g_bal, projected);
  for (std::size_t a = 0; a < d.derg.dim(); ++a)
    for (std::size_t b = 0; b < d.derg.dim(); ++b) block(a, b) = gd(a, b);
  for (std::size_t a = 0; a < zs.size(); ++a)
    for (std::size_t b = 0; b < zs.size(); ++b) block(d.derg.dim() + a, d.derg.dim() + b) = gz(a, b);
  return metric_from_gram(Matrix::from_columns(basis, n), block);
}

FingerprintComparison fingerprint_distinguish(const LieAlgebra& a, const LieAlgebra& b) {
  auto describe = [](const std::vector<std::size_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
  };
  if (a.dim() != b.dim())
    return {true, "dimension " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim())};
  Fingerprint fa = structure_invariants(a), fb = structure_invariants(b);
  if (fa.derived_series.front() != fb.derived_series.front())
    return {true, "dim g' " + std::to_string(fa.derived_series.front()) + " vs " +
                      std::to_string(fb.derived_series.front())};
  if (fa.derived_center_dim != fb.derived_center_dim)
    return {true, "dim(g' ∩ center) " + std::to_string(fa.derived_center_dim) + " vs " +
                      std::to_string(fb.derived_center_dim)};
  if (fa.center_dim != fb.center_dim)
    return {true, "dim center " + std::to_string(fa.center_dim) + " vs " + std::to_string(fb.center_dim)};
  if (fa.derived_series != fb.derived_series)
    return {true, "derived series " + describe(fa.derived_series) + " vs " + describe(fb.derived_series)};
  if (fa.lower_central_series != fb.lower_central_series)
    return {true, "lower central series " + describe(fa.lower_central_series) + " vs " +
                      describe(fb.lower_central_series)};
  if (fa.unimodular != fb.unimodular) return {true, "unimodularity differs"};
  if (fa.nilpotent != fb.nilpotent) return {true, "nilpotency differs"};
  return {false, ""};
}

Matrix adapted_basis(const ComplexStructure& j) {
  const std::size_t n = j.dim();
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n && cols.size() < n; ++i) {
    Vector e = unit_vector(n, i);
    std::vector<Vector> trial = cols;
    trial.push_back(e);
    trial.push_back(j.apply(e));
    if (rank(Matrix::from_columns(trial, n)) == trial.size()) cols = std::move(trial);
  }
  return Matrix::from_columns(cols, n);
}

}  // namespace hermlie
