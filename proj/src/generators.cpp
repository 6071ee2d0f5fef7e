#include "hermlie/generators.hpp"

#include "hermlie/error.hpp"

namespace hermlie {

int Rng::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

Scalar Rng::rational(int max_num, int max_den) {
  return Scalar(integer(-max_num, max_num)) / Scalar(integer(1, max_den));
}

Scalar Rng::nonzero_rational(int max_num, int max_den) {
  int p = integer(1, max_num);
  if (coin()) p = -p;
  return Scalar(p) / Scalar(integer(1, max_den));
}

Vector Rng::vector(std::size_t n, int max_num, int max_den) {
  Vector v(n);
  for (auto& x : v) x = rational(max_num, max_den);
  return v;
}

Vector Rng::nonzero_vector(std::size_t n, int max_num, int max_den) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "no non-zero vector in dimension 0");
  for (;;) {
    Vector v = vector(n, max_num, max_den);
    if (!is_zero(v)) return v;
  }
}

Matrix random_complex_linear(Rng& rng, std::size_t dim) {
  const std::size_t n = dim / 2;
  for (;;) {
    Matrix m(dim, dim);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        // multiplication by x + iy in the coordinates (e_{2a}, Je_{2a})
        Scalar x = rng.integer(-2, 2), y = rng.integer(-2, 2);
        if (a == b) x += 3;
        m(2 * a, 2 * b) = x;
        m(2 * a, 2 * b + 1) = -y;
        m(2 * a + 1, 2 * b) = y;
        m(2 * a + 1, 2 * b + 1) = x;
      }
    if (determinant(m) != 0) return m;
  }
}

Metric random_compatible_metric(Rng& rng, const ComplexStructure& j) {
  const Matrix p = adapted_basis(j);
  const Matrix p_inv = *inverse(p);
  const Matrix a = random_complex_linear(rng, j.dim());
  return Metric(p_inv.transpose() * (a.transpose() * a) * p_inv);
}

std::string profile_name(ShearProfile p) {
  switch (p) {
    case ShearProfile::Nilpotent: return "nilpotent";
    case ShearProfile::TypeI: return "typeI";
    case ShearProfile::TypeII: return "typeII";
    case ShearProfile::TypeIII: return "typeIII";
    case ShearProfile::Mixed: return "mixed";
  }
  return "";
}

ShearProfile parse_profile(const std::string& name) {
  for (ShearProfile p : {ShearProfile::Nilpotent, ShearProfile::TypeI, ShearProfile::TypeII,
                         ShearProfile::TypeIII, ShearProfile::Mixed})
    if (profile_name(p) == name) return p;
  throw Error(ErrorCode::InvalidInput, "unknown profile '" + name + "'");
}

KahlerNormalForm random_kahler_params(Rng& rng, KahlerType type, int s, int r, int ell) {
  KahlerNormalForm p;
  p.type = type;
  p.s = s;
  p.r = r;
  p.ell = ell;
  for (int j = 0; j < s; ++j) {
    p.alpha.push_back(r > 0 ? rng.nonzero_vector(r) : Vector{});
    p.beta.push_back(r == 0 ? rng.nonzero_vector(2 * ell) : rng.vector(2 * ell));
  }
  for (int k = 0; k < r; ++k) p.lambda.push_back(rng.nonzero_rational());
  return p;
}

namespace {

/// Real basis of (1,1)-forms and the (2,0)-form (e^1 + ie^2)^(e^3 + ie^4) on
/// the first four coordinates of V_J.
std::vector<KForm> real_11_basis(std::size_t v) {
  return {KForm::basis(v, {1, 2}), KForm::basis(v, {3, 4}), KForm::basis(v, {1, 3}) + KForm::basis(v, {2, 4}),
          KForm::basis(v, {1, 4}) - KForm::basis(v, {2, 3})};
}

ComplexForm basic_20(std::size_t v) {
  return {KForm::basis(v, {1, 3}) - KForm::basis(v, {2, 4}), KForm::basis(v, {1, 4}) + KForm::basis(v, {2, 3})};
}

}  // namespace

TypeIINormalForm random_typeII_params(Rng& rng, int s, int ell, int m) {
  if (s < 1 || ell < 1 || m < 0 || m > s) throw Error(ErrorCode::InvalidInput, "need s, l >= 1 and 0 <= m <= s");
  if (m < s && (ell < 2 || s - m > 3))
    throw Error(ErrorCode::InvalidInput, "phi/psi pairs need l >= 2 and at most three of them");
  const std::size_t v = static_cast<std::size_t>(2 * ell);
  for (int attempt = 0; attempt < 200; ++attempt) {
    TypeIINormalForm p;
    p.s = s;
    p.ell = ell;
    p.m = m;
    for (int j = 0; j < m; ++j) {
      p.alpha.push_back(rng.nonzero_vector(v));
      p.z.push_back({rng.rational(), rng.rational()});
    }
    const auto basis11 = m < s ? real_11_basis(v) : std::vector<KForm>{};
    const ComplexForm psi0 = m < s ? basic_20(v) : ComplexForm{KForm(v, 2), KForm(v, 2)};
    for (int k = m; k < s; ++k) {
      ComplexForm phi{KForm(v, 2), KForm(v, 2)};
      for (const auto& b : basis11) {
        phi.re += rng.rational() * b;
        phi.im += rng.rational() * b;
      }
      Scalar x = rng.rational(), y = rng.rational();
      p.phi.push_back(phi);
      p.psi.push_back({x * psi0.re - y * psi0.im, y * psi0.re + x * psi0.im});
    }
    if (m < s) {
      // the constraint is one equation on e^{1234}; solve it by shifting Re(phi_s) along e^{12}
      KForm& last = p.phi.back().re;
      Scalar c34 = last.coefficient(std::vector<int>{3, 4});
      if (c34 == 0) continue;
      Scalar total = typeII_quartic_constraint(p).coefficient(std::vector<int>{1, 2, 3, 4});
      last += (-total / (2 * c34)) * KForm::basis(v, {1, 2});
    }
    try {
      skt_typeII_normal_form(p);
      return p;
    } catch (const Error&) {
      // dependent phi + psi; draw again
    }
  }
  throw Error(ErrorCode::InvalidInput, "could not draw type II parameters");
}

namespace {

HermitianAlgebra nilpotent_table(Rng& rng, std::size_t dim) {
  const ComplexStructure j = ComplexStructure::standard(dim);
  for (;;) {
    const std::size_t k = static_cast<std::size_t>(rng.integer(1, static_cast<int>(dim) - 1));
    // unknowns omega(e_p, e_q)_c for k <= p < q, c < k; omega(a, .) = 0 for a = span{e_0..e_{k-1}}
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> unknowns;
    for (std::size_t p = k; p < dim; ++p)
      for (std::size_t q = p + 1; q < dim; ++q)
        for (std::size_t c = 0; c < k; ++c) unknowns.emplace_back(p, q, c);
    if (unknowns.empty()) continue;
    // integrability is linear in omega: one row per (pair, output coordinate)
    auto omega_of = [&](const Vector& coeffs) {
      VectorValuedTwoForm w(dim, Subspace::whole(dim));
      std::vector<Vector> vals(dim * dim, zero_vector(dim));
      for (std::size_t u = 0; u < unknowns.size(); ++u) {
        auto [p, q, c] = unknowns[u];
        vals[p * dim + q][c] += coeffs[u];
      }
      for (std::size_t p = 0; p < dim; ++p)
        for (std::size_t q = p + 1; q < dim; ++q) w.set(p, q, vals[p * dim + q]);
      return w;
    };
    std::vector<Vector> rows;
    std::vector<Vector> columns;
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      Vector e = zero_vector(unknowns.size());
      e[u] = 1;
      VectorValuedTwoForm w = omega_of(e);
      Vector col;
      for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = a + 1; b < dim; ++b) {
          Vector ja = j.matrix().column(a), jb = j.matrix().column(b);
          Vector lhs = w.evaluate(ja, jb);
          Vector rhs = add(w.value(a, b), j.apply(add(w.evaluate(ja, unit_vector(dim, b)),
                                                       w.evaluate(unit_vector(dim, a), jb))));
          Vector diff = subtract(lhs, rhs);
          col.insert(col.end(), diff.begin(), diff.end());
        }
      columns.push_back(col);
    }
    const Matrix system = Matrix::from_columns(columns, columns.front().size());
    const auto kernel = nullspace(system);
    if (kernel.empty()) continue;
    Vector coeffs = zero_vector(unknowns.size());
    for (const auto& b : kernel) axpy(Scalar(rng.integer(-2, 2)), b, coeffs);
    if (is_zero(coeffs)) continue;
    VectorValuedTwoForm w = omega_of(coeffs);
    std::vector<StructureConstant> cs;
    for (std::size_t p = 0; p < dim; ++p)
      for (std::size_t q = p + 1; q < dim; ++q)
        for (std::size_t c = 0; c < dim; ++c)
          if (w.value(p, q)[c] != 0)
            cs.push_back({static_cast<int>(p + 1), static_cast<int>(q + 1), static_cast<int>(c + 1), -w.value(p, q)[c]});
    LieAlgebra lie = make_algebra(dim, cs);
    return {lie, random_compatible_metric(rng, j), j};
  }
}

HermitianAlgebra mixed_table(Rng& rng, std::size_t dim) {
  const int n = static_cast<int>(dim / 2);
  if (n == 3 && rng.coin()) {
    // six-dimensional non-pure table; most random draws violate Jacobi, so retry
    for (int attempt = 0; attempt < 100; ++attempt) {
      SixDNonPureData d;
      Scalar b1 = rng.integer(-1, 1), b2 = rng.integer(-1, 1), b0 = rng.nonzero_rational(2, 2);
      d.b = {b0, b1, b2, -(b1 * b1 + b2 * b2) / b0};
      for (int i = 0; i < 3; ++i) {
        d.delta[i] = rng.integer(0, 1);
        d.z[i] = {-Scalar(d.delta[i]) * d.b[i] / 2, rng.rational(2, 1)};
      }
      if (d.z[0] == Complex{}) d.z[0].im = 1;
      for (auto& w : d.w)
        if (rng.integer(0, 3) == 0) w = {rng.rational(2, 1), rng.rational(2, 1)};
      try {
        SixDNonPureResult r = skt_6d_nonpure_normal_form(d);
        return {r.lie, Metric::identity(dim), r.j};
      } catch (const Error&) {
      }
    }
  }
  const int s = rng.integer(1, n - 2);
  const int r = rng.integer(1, n - s - 1);
  return kahler_normal_form(random_kahler_params(rng, KahlerType::General, s, r, n - s - r));
}

}  // namespace

GeneratedShear random_complex_shear(std::uint64_t seed, ShearProfile profile, std::size_t dim) {
  if (dim < 2 || dim % 2 != 0) throw Error(ErrorCode::InvalidInput, "dimension must be even and positive");
  Rng rng(seed);
  const int n = static_cast<int>(dim / 2);
  if (profile == ShearProfile::Mixed && n < 3) profile = ShearProfile::TypeIII;
  if (profile != ShearProfile::Nilpotent && profile != ShearProfile::TypeI && n < 2) profile = ShearProfile::TypeI;

  HermitianAlgebra h = [&]() -> HermitianAlgebra {
    switch (profile) {
      case ShearProfile::Nilpotent:
        return nilpotent_table(rng, dim);
      case ShearProfile::TypeI: {
        const int r = rng.integer(1, n);
        return kahler_normal_form(random_kahler_params(rng, KahlerType::I, 0, r, n - r));
      }
      case ShearProfile::TypeII: {
        const int s = rng.integer(1, n - 1), ell = n - s;
        const int variant = rng.integer(0, ell >= 2 ? 2 : 1);
        if (variant == 0) return kahler_normal_form(random_kahler_params(rng, KahlerType::II, s, 0, ell));
        const int m = variant == 1 ? s : std::max(0, s - 3);
        return skt_typeII_normal_form(random_typeII_params(rng, s, ell, m));
      }
      case ShearProfile::TypeIII: {
        const int s = rng.integer(1, n - 1);
        return kahler_normal_form(random_kahler_params(rng, KahlerType::III, s, n - s, 0));
      }
      case ShearProfile::Mixed:
        return mixed_table(rng, dim);
    }
    throw Error(ErrorCode::InvalidInput, "unknown profile");
  }();

  const Matrix p = random_complex_linear(rng, dim);
  const LieAlgebra lie = change_basis(h.lie, p);
  const Metric g(p.transpose() * h.metric.matrix() * p);
  return {PreShearData::from_algebra(lie), g, ComplexStructure::standard(dim), profile};
}

}  // namespace hermlie
