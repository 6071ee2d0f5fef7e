#include "hermlie/shear.hpp"

#include "hermlie/error.hpp"

#include <array>
#include <algorithm>

namespace hermlie {

namespace {

std::string pair_label(std::size_t i, std::size_t j) {
  return "(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ")";
}

KForm::Mask bit(std::size_t i) { return KForm::Mask(1) << i; }

/// Matrix of sigma(e_i, e_k) = g(J e_i, e_k).
Matrix sigma_matrix(const Metric& g, const ComplexStructure& j) {
  return j.matrix().transpose() * g.matrix();
}

/// 3-form x,y,z -> sigma(omega(x,y),z) + cyclic; the shear form of d sigma.
KForm cyclic_sigma_omega(const PreShearData& data, const Matrix& sigma) {
  const std::size_t n = data.dim();
  const Matrix sigma_t = sigma.transpose();
  auto term = [&](std::size_t a, std::size_t b, std::size_t c) {
    return (sigma_t * data.omega.value(a, b))[c];  // sigma(omega(e_a,e_b), e_c)
  };
  KForm out(n, std::min<std::size_t>(3, n));
  if (n < 3) return out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        out.add_term(bit(a) | bit(b) | bit(c), term(a, b, c) + term(b, c, a) + term(c, a, b));
  return out;
}

void require_complex_shear(const PreShearData& data, const ComplexStructure& j) {
  ComplexShearCheck check = check_complex_shear(data, j);
  if (!check.jacobi_ok || !check.integrable_ok)
    throw Error(ErrorCode::NotComplexShearData,
                std::string("data fails the ") + (check.jacobi_ok ? "integrability" : "Jacobi") +
                    " equation");
}

/// Coordinates of v in the columns of `basis` (v must lie in their span).
Vector coords_in(const Matrix& basis, const Vector& v) {
  auto c = solve(basis, v);
  if (!c) throw Error(ErrorCode::DimensionMismatch, "vector outside the expected subspace");
  return *c;
}

Matrix sub_block(const Matrix& m, std::size_t r0, std::size_t rows, std::size_t c0, std::size_t cols) {
  Matrix b(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) b(i, k) = m(r0 + i, c0 + k);
  return b;
}

}  // namespace

VectorValuedTwoForm::VectorValuedTwoForm(std::size_t ambient_dim, Subspace target)
    : dim_(ambient_dim), target_(std::move(target)), table_(ambient_dim * ambient_dim, zero_vector(ambient_dim)) {
  if (target_.ambient_dim() != ambient_dim)
    throw Error(ErrorCode::DimensionMismatch, "target subspace lives in a different space");
}

void VectorValuedTwoForm::set(std::size_t i, std::size_t j, const Vector& v) {
  if (i >= dim_ || j >= dim_ || v.size() != dim_)
    throw Error(ErrorCode::DimensionMismatch, "two-form value out of range");
  if (i == j) {
    if (!hermlie::is_zero(v)) throw Error(ErrorCode::InvalidInput, "omega(e_i, e_i) must vanish");
    return;
  }
  table_[i * dim_ + j] = v;
  table_[j * dim_ + i] = scaled(Scalar(-1), v);
}

Vector VectorValuedTwoForm::evaluate(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw Error(ErrorCode::DimensionMismatch, "arguments must have length dim");
  Vector r = zero_vector(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (y[j] != 0 && i != j) axpy(x[i] * y[j], value(i, j), r);
  }
  return r;
}

KForm VectorValuedTwoForm::component(std::size_t c) const {
  KForm out(dim_, 2);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (!hermlie::is_zero(value(i, j)))
        out.add_term(bit(i) | bit(j), target_.coordinates(value(i, j)).at(c));
  return out;
}

Subspace VectorValuedTwoForm::image() const {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (!hermlie::is_zero(value(i, j))) vs.push_back(value(i, j));
  return Subspace::span(dim_, vs);
}

bool VectorValuedTwoForm::is_zero() const {
  for (const auto& v : table_)
    if (!hermlie::is_zero(v)) return false;
  return true;
}

PreShearData PreShearData::from_algebra(const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  Subspace a = image_of_bracket(lie);
  VectorValuedTwoForm omega(n, a);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) omega.set(i, j, scaled(Scalar(-1), lie.basis_bracket(i, j)));
  return {a, omega};
}

PreShearData PreShearData::zero(std::size_t dim, const Subspace& a) {
  return {a, VectorValuedTwoForm(dim, a)};
}

PreShearReport validate_pre_shear(const PreShearData& data) {
  PreShearReport report;
  const std::size_t n = data.dim();
  if (data.a.ambient_dim() != n) {
    report.valid = false;
    report.violations.push_back("subspace a lives in a different space");
    return report;
  }
  if (!(data.omega.target() == data.a)) {
    report.valid = false;
    report.violations.push_back("target of omega differs from a");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!data.a.contains(data.omega.value(i, j))) {
        report.valid = false;
        report.violations.push_back("omega" + pair_label(i, j) + " is not in a");
      }
  const auto& ab = data.a.basis();
  for (std::size_t p = 0; p < ab.size(); ++p)
    for (std::size_t q = p + 1; q < ab.size(); ++q)
      if (!is_zero(data.omega.evaluate(ab[p], ab[q]))) {
        report.valid = false;
        report.violations.push_back("omega(a_" + std::to_string(p + 1) + ", a_" + std::to_string(q + 1) +
                                    ") != 0");
      }
  return report;
}

ComplexShearCheck check_complex_shear(const PreShearData& data, const ComplexStructure& j) {
  PreShearReport report = validate_pre_shear(data);
  if (!report.valid) throw Error(ErrorCode::InvalidPreShear, report.violations.front());
  const std::size_t n = data.dim();
  if (j.dim() != n) throw Error(ErrorCode::DimensionMismatch, "J has the wrong size");
  const auto& w = data.omega;
  ComplexShearCheck out{true, true};
  for (std::size_t a = 0; a < n && out.jacobi_ok; ++a)
    for (std::size_t b = a + 1; b < n && out.jacobi_ok; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        Vector ea = unit_vector(n, a), eb = unit_vector(n, b), ec = unit_vector(n, c);
        Vector s = w.evaluate(w.value(a, b), ec);
        s = add(s, w.evaluate(w.value(b, c), ea));
        s = add(s, w.evaluate(w.value(c, a), eb));
        if (!is_zero(s)) {
          out.jacobi_ok = false;
          break;
        }
      }
  for (std::size_t a = 0; a < n && out.integrable_ok; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vector ja = j.matrix().column(a), jb = j.matrix().column(b);
      // J^* omega = omega - J o (J.omega), J.omega = -omega(J.,.) - omega(.,J.)
      Vector lhs = w.evaluate(ja, jb);
      Vector rhs = w.value(a, b);
      rhs = add(rhs, j.apply(add(w.evaluate(ja, unit_vector(n, b)), w.evaluate(unit_vector(n, a), jb))));
      if (lhs != rhs) {
        out.integrable_ok = false;
        break;
      }
    }
  return out;
}

LieAlgebra build_shear(const PreShearData& data) {
  const std::size_t n = data.dim();
  std::vector<StructureConstant> cs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector& v = data.omega.value(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (v[k] != 0)
          cs.push_back({static_cast<int>(i + 1), static_cast<int>(j + 1), static_cast<int>(k + 1), -v[k]});
    }
  LieAlgebra lie = make_algebra(n, cs);
  if (!lie.validated()) throw Error(ErrorCode::JacobiFailed, "shear data fails the Jacobi equation");
  return lie;
}

std::string condition_name(ConditionKind kind) {
  switch (kind) {
    case ConditionKind::Kahler: return "kahler";
    case ConditionKind::Balanced: return "balanced";
    case ConditionKind::Skt: return "skt";
  }
  return "";
}

KForm shear_condition_form(const PreShearData& data, const Metric& g, const ComplexStructure& j,
                           ConditionKind kind) {
  require_complex_shear(data, j);
  if (!g.compatible_with(j)) throw Error(ErrorCode::IncompatibleMetric, "metric is not J-invariant");
  const std::size_t n = data.dim();
  const Matrix sigma = sigma_matrix(g, j);

  if (kind == ConditionKind::Kahler) return cyclic_sigma_omega(data, sigma);

  if (kind == ConditionKind::Balanced) {
    const std::size_t half = n / 2;
    if (half < 2) return KForm(n, n - 1);
    KForm sigma_form = fundamental_form(g, j);
    return wedge(cyclic_sigma_omega(data, sigma), wedge_power(sigma_form, half - 2));
  }

  // Full antisymmetrisation of g(J^*omega(x1,x2), omega(x3,x4)) + 2 g(J^*omega(omega(x1,x2),x3), x4)
  // with J^*omega(u, v) = omega(Ju, Jv).
  KForm out(n, std::min<std::size_t>(4, n));
  if (n < 4) return out;
  const auto& w = data.omega;
  const Matrix& jm = j.matrix();
  const Matrix& s = g.matrix();
  std::vector<Vector> jcol(n);
  for (std::size_t a = 0; a < n; ++a) jcol[a] = jm.column(a);
  std::vector<Vector> jj(n * n), s_omega(n * n);
  std::vector<Vector> q(n * n * n);  // S omega(J omega(e_a,e_b), J e_c)
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      jj[a * n + b] = w.evaluate(jcol[a], jcol[b]);
      s_omega[a * n + b] = s * w.value(a, b);
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vector j_omega = j.apply(w.value(a, b));
      for (std::size_t c = 0; c < n; ++c) {
        Vector v = s * w.evaluate(j_omega, jcol[c]);
        q[(a * n + b) * n + c] = v;
        q[(b * n + a) * n + c] = scaled(Scalar(-1), v);
      }
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) q[(a * n + a) * n + c] = zero_vector(n);

  auto t_term = [&](std::size_t x1, std::size_t x2, std::size_t x3, std::size_t x4) {
    return dot(jj[x1 * n + x2], s_omega[x3 * n + x4]);
  };
  auto q_term = [&](std::size_t x1, std::size_t x2, std::size_t x3, std::size_t x4) {
    return q[(x1 * n + x2) * n + x3][x4];
  };
  for (std::size_t i0 = 0; i0 < n; ++i0)
    for (std::size_t i1 = i0 + 1; i1 < n; ++i1)
      for (std::size_t i2 = i1 + 1; i2 < n; ++i2)
        for (std::size_t i3 = i2 + 1; i3 < n; ++i3) {
          std::array<std::size_t, 4> idx{i0, i1, i2, i3};
          std::array<int, 4> perm{0, 1, 2, 3};
          Scalar total = 0;
          do {
            int inversions = 0;
            for (int u = 0; u < 4; ++u)
              for (int v = u + 1; v < 4; ++v)
                if (perm[u] > perm[v]) ++inversions;
            std::size_t x1 = idx[perm[0]], x2 = idx[perm[1]], x3 = idx[perm[2]], x4 = idx[perm[3]];
            Scalar term = t_term(x1, x2, x3, x4) + 2 * q_term(x1, x2, x3, x4);
            if (inversions % 2 == 0)
              total += term;
            else
              total -= term;
          } while (std::next_permutation(perm.begin(), perm.end()));
          out.add_term(bit(i0) | bit(i1) | bit(i2) | bit(i3), total);
        }
  return out;
}

bool shear_condition(const PreShearData& data, const Metric& g, const ComplexStructure& j,
                     ConditionKind kind) {
  return shear_condition_form(data, g, j, kind).is_zero();
}

ShearOperators shear_operators(const PreShearData& data, const Metric& g, const ComplexStructure& j) {
  require_complex_shear(data, j);
  if (!g.compatible_with(j)) throw Error(ErrorCode::IncompatibleMetric, "metric is not J-invariant");
  const std::size_t n = data.dim();
  const Subspace whole = Subspace::whole(n);
  const auto& w = data.omega;
  ShearOperators ops;
  ops.a = w.image();
  Subspace ja = image(j.matrix(), ops.a);
  ops.a_J = intersect(ops.a, ja);
  ops.a_r = orthogonal_complement(ops.a_J, g.matrix(), ops.a);
  ops.U_r = sum(ops.a_r, image(j.matrix(), ops.a_r));
  ops.U_J = orthogonal_complement(sum(ops.a, ja), g.matrix(), whole);
  ops.a_J_basis = ops.a_J.basis();
  ops.a_r_basis = ops.a_r.basis();
  ops.U_J_basis = ops.U_J.basis();
  const std::size_t sj = ops.a_J_basis.size(), sr = ops.a_r_basis.size(), da = sj + sr;
  if (da == 0) return ops;

  std::vector<Vector> a_basis = ops.a_J_basis;
  a_basis.insert(a_basis.end(), ops.a_r_basis.begin(), ops.a_r_basis.end());
  const Matrix ba = Matrix::from_columns(a_basis, n);

  auto restricted = [&](const Vector& first) {
    Matrix m(da, da);
    for (std::size_t c = 0; c < da; ++c) {
      Vector col = coords_in(ba, w.evaluate(first, a_basis[c]));
      for (std::size_t r = 0; r < da; ++r) m(r, c) = col[r];
    }
    return m;
  };
  auto from_coords = [&](const Vector& coords, std::size_t offset, std::size_t count) {
    Vector v = zero_vector(n);
    for (std::size_t k = 0; k < count; ++k) axpy(coords[offset + k], a_basis[offset + k], v);
    return v;
  };

  for (const auto& x : ops.a_r_basis) {
    Matrix a_x = restricted(j.apply(x));
    ops.K.push_back(sub_block(a_x, 0, sj, 0, sj));
    ops.G.push_back(sub_block(a_x, sj, sr, 0, sj));
    ops.H.push_back(sub_block(a_x, 0, sj, sj, sr));
    ops.F.push_back(sub_block(a_x, sj, sr, sj, sr));
    ops.A.push_back(std::move(a_x));
  }
  for (const auto& z : ops.U_J_basis) ops.B.push_back(restricted(z));
  for (std::size_t x = 0; x < sr; ++x) {
    std::vector<Vector> fx, hx;
    for (std::size_t y = 0; y < sr; ++y) {
      Vector c = coords_in(ba, w.evaluate(j.apply(ops.a_r_basis[x]), ops.a_r_basis[y]));
      hx.push_back(from_coords(c, 0, sj));
      fx.push_back(from_coords(c, sj, sr));
    }
    ops.f.push_back(std::move(fx));
    ops.h.push_back(std::move(hx));
  }

  auto fail = [&](const std::string& what) {
    ops.report_clean = false;
    ops.report_failures.push_back(what);
  };
  Matrix j_on_aj(sj, sj);
  if (sj > 0) {
    const Matrix baj = Matrix::from_columns(ops.a_J_basis, n);
    for (std::size_t c = 0; c < sj; ++c) {
      Vector col = coords_in(baj, j.apply(ops.a_J_basis[c]));
      for (std::size_t r = 0; r < sj; ++r) j_on_aj(r, c) = col[r];
    }
  }
  for (std::size_t x = 0; x < sr; ++x) {
    const std::string tag = "X" + std::to_string(x + 1);
    if (!ops.G[x].is_zero()) fail("(i) G_" + tag + " != 0");
    if (!commutator(j_on_aj, ops.K[x]).is_zero()) fail("(ii) [J, K_" + tag + "] != 0");
    for (std::size_t y = 0; y < sr; ++y) {
      const std::string pair = tag + ",X" + std::to_string(y + 1);
      if (ops.f[x][y] != ops.f[y][x]) fail("(iii) f(" + pair + ") not symmetric");
      Vector wj = w.evaluate(j.apply(ops.a_r_basis[x]), j.apply(ops.a_r_basis[y]));
      if (!ops.a_J.contains(wj)) fail("(iv) omega(J" + tag + ",JX" + std::to_string(y + 1) + ") not in a_J");
      if (wj != j.apply(subtract(ops.h[x][y], ops.h[y][x]))) fail("(iv) omega(JX,JX^) != J(h - h^t) at " + pair);
      if (!commutator(ops.A[x], ops.A[y]).is_zero()) fail("(v) [A, A] != 0 at " + pair);
      if (!commutator(ops.K[x], ops.K[y]).is_zero()) fail("(v) [K, K] != 0 at " + pair);
    }
    for (std::size_t z = 0; z < ops.B.size(); ++z)
      if (!commutator(ops.A[x], ops.B[z]).is_zero())
        fail("(v) [A_" + tag + ", B_Z" + std::to_string(z + 1) + "] != 0");
  }
  for (std::size_t z = 0; z < ops.B.size(); ++z)
    for (std::size_t z2 = z + 1; z2 < ops.B.size(); ++z2)
      if (!commutator(ops.B[z], ops.B[z2]).is_zero())
        fail("(v) [B_Z" + std::to_string(z + 1) + ", B_Z" + std::to_string(z2 + 1) + "] != 0");
  for (std::size_t z = 0; z < ops.U_J_basis.size(); ++z)
    for (std::size_t x = 0; x < sr; ++x) {
      const Vector& zv = ops.U_J_basis[z];
      const Vector& xv = ops.a_r_basis[x];
      Vector lhs = coords_in(ba, w.evaluate(j.apply(zv), j.apply(xv)));
      Vector rhs = coords_in(ba, w.evaluate(zv, xv));
      if (from_coords(lhs, sj, sr) != from_coords(rhs, sj, sr))
        fail("(v) omega^r(JZ" + std::to_string(z + 1) + ",JX" + std::to_string(x + 1) + ") != omega^r(Z,X)");
    }
  return ops;
}

PreShearData change_basis(const PreShearData& data, const Matrix& p) {
  const std::size_t n = data.dim();
  auto p_inv = inverse(p);
  if (p.rows() != n || !p_inv) throw Error(ErrorCode::DimensionMismatch, "change of basis must be invertible");
  Subspace a = image(*p_inv, data.a);
  VectorValuedTwoForm omega(n, a);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k)
      omega.set(i, k, *p_inv * data.omega.evaluate(p.column(i), p.column(k)));
  return {a, omega};
}

}  // namespace hermlie
