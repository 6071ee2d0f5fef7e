#include "hermlie/normal_forms.hpp"

#include "hermlie/error.hpp"

#include <map>
#include <utility>

namespace hermlie {

namespace {

[[noreturn]] void violated(const std::string& what) {
  throw Error(ErrorCode::ParameterConstraintViolated, what);
}

/// Accumulates [e_a, e_b] for 0-based basis indices.
class BracketTable {
 public:
  explicit BracketTable(std::size_t dim) : dim_(dim) {}

  void add(std::size_t a, std::size_t b, std::size_t target, const Scalar& c) {
    if (c == 0) return;
    if (a == b) violated("bracket of a basis vector with itself");
    if (a > b) {
      std::swap(a, b);
      entries_[{a, b}].resize(dim_, Scalar(0));
      entries_[{a, b}][target] -= c;
    } else {
      entries_[{a, b}].resize(dim_, Scalar(0));
      entries_[{a, b}][target] += c;
    }
  }

  /// [e_a, e_b] += c * Y with Y = e_y and JY = e_{y+1}.
  void add_complex(std::size_t a, std::size_t b, std::size_t y, const Complex& c) {
    add(a, b, y, c.re);
    add(a, b, y + 1, c.im);
  }

  LieAlgebra build() const {
    std::vector<StructureConstant> cs;
    for (const auto& [key, v] : entries_)
      for (std::size_t k = 0; k < dim_; ++k)
        if (v[k] != 0)
          cs.push_back({static_cast<int>(key.first + 1), static_cast<int>(key.second + 1),
                        static_cast<int>(k + 1), v[k]});
    return make_algebra(dim_, cs);
  }

 private:
  std::size_t dim_;
  std::map<std::pair<std::size_t, std::size_t>, Vector> entries_;
};

Complex times(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex evaluate_pair(const ComplexForm& f, std::size_t p, std::size_t q) {
  const std::size_t n = f.re.ambient_dim();
  std::vector<Vector> args{unit_vector(n, p), unit_vector(n, q)};
  return {evaluate(f.re, args), evaluate(f.im, args)};
}

/// Complex structure on V_J in its own coordinates: J e_{2i} = e_{2i+1}.
ComplexStructure local_j(int ell) { return ComplexStructure::standard(static_cast<std::size_t>(2 * ell)); }

}  // namespace

HermitianAlgebra kahler_normal_form_unchecked(const KahlerNormalForm& p) {
  if (p.s < 0 || p.r < 0 || p.ell < 0 || p.s + p.r + p.ell == 0) violated("s, r, l must be non-negative with positive sum");
  if (p.alpha.size() != static_cast<std::size_t>(p.s) || p.beta.size() != static_cast<std::size_t>(p.s) ||
      p.lambda.size() != static_cast<std::size_t>(p.r))
    violated("parameter counts do not match s and r");
  for (const auto& a : p.alpha)
    if (a.size() != static_cast<std::size_t>(p.r)) violated("alpha_j must have r entries");
  for (const auto& b : p.beta)
    if (b.size() != static_cast<std::size_t>(2 * p.ell)) violated("beta_j must have 2l entries");

  const std::size_t n = static_cast<std::size_t>(2 * (p.s + p.r + p.ell));
  const std::size_t x0 = 2 * p.s, z0 = 2 * (p.s + p.r);
  BracketTable t(n);
  for (int j = 0; j < p.s; ++j) {
    const std::size_t y = 2 * j;
    for (int k = 0; k < p.r; ++k) {
      const std::size_t jx = x0 + 2 * k + 1;
      const Scalar& a = p.alpha[j][k];
      t.add(jx, y, y + 1, a);   // [JX_k, Y_j] = a JY_j
      t.add(jx, y + 1, y, -a);  // [JX_k, JY_j] = -a Y_j
    }
    for (int q = 0; q < 2 * p.ell; ++q) {
      const std::size_t z = z0 + q;
      const Scalar& b = p.beta[j][q];
      t.add(z, y, y + 1, b);
      t.add(z, y + 1, y, -b);
    }
  }
  for (int k = 0; k < p.r; ++k) t.add(x0 + 2 * k + 1, x0 + 2 * k, x0 + 2 * k, p.lambda[k]);
  return {t.build(), Metric::identity(n), ComplexStructure::standard(n)};
}

HermitianAlgebra kahler_normal_form(const KahlerNormalForm& p) {
  switch (p.type) {
    case KahlerType::I:
      if (p.s != 0 || p.r < 1) violated("pure type I needs s = 0 and r >= 1");
      break;
    case KahlerType::II:
      if (p.r != 0 || p.s < 1 || p.ell < 1) violated("pure type II needs r = 0, s >= 1, l >= 1");
      break;
    case KahlerType::III:
      if (p.ell != 0 || p.s < 1 || p.r < 1) violated("pure type III needs l = 0, s >= 1, r >= 1");
      break;
    case KahlerType::General:
      break;
  }
  if (p.r == 0 && p.s > 0 && p.ell == 0) violated("s > 0 needs r > 0 or l > 0");
  for (std::size_t k = 0; k < p.lambda.size(); ++k)
    if (p.lambda[k] == 0) violated("lambda_" + std::to_string(k + 1) + " must be non-zero");
  for (std::size_t j = 0; j < p.alpha.size(); ++j) {
    if (p.r > 0 && is_zero(p.alpha[j])) violated("alpha_" + std::to_string(j + 1) + " must be non-zero");
    if (p.r == 0 && j < p.beta.size() && is_zero(p.beta[j]))
      violated("beta_" + std::to_string(j + 1) + " must be non-zero when r = 0");
  }
  HermitianAlgebra out = kahler_normal_form_unchecked(p);
  if (!out.lie.validated()) violated("bracket table fails the Jacobi identity");
  return out;
}

KForm typeII_quartic_constraint(const TypeIINormalForm& p) {
  const std::size_t v = static_cast<std::size_t>(2 * p.ell);
  KForm total(v, std::min<std::size_t>(4, v));
  if (v < 4) return total;
  for (const auto& f : p.phi) total += wedge(f.re, f.re) + wedge(f.im, f.im);
  for (const auto& f : p.psi) total -= wedge(f.re, f.re) + wedge(f.im, f.im);
  return total;
}

namespace {

HermitianAlgebra build_typeII(const TypeIINormalForm& p, bool check) {
  if (p.s < 1 || p.ell < 1 || p.m < 0 || p.m > p.s) violated("need s >= 1, l >= 1, 0 <= m <= s");
  const std::size_t v = static_cast<std::size_t>(2 * p.ell);
  const std::size_t rest = static_cast<std::size_t>(p.s - p.m);
  if (p.alpha.size() != static_cast<std::size_t>(p.m) || p.z.size() != static_cast<std::size_t>(p.m) ||
      p.phi.size() != rest || p.psi.size() != rest)
    violated("parameter counts do not match s and m");
  const ComplexStructure jv = local_j(p.ell);
  for (std::size_t j = 0; j < p.alpha.size() && check; ++j) {
    if (is_zero(p.alpha[j])) violated("alpha_" + std::to_string(j + 1) + " must be non-zero");
  }
  for (std::size_t k = 0; k < rest; ++k) {
    for (const KForm* f : {&p.phi[k].re, &p.phi[k].im, &p.psi[k].re, &p.psi[k].im})
      if (f->ambient_dim() != v || f->degree() != 2) violated("phi_k, psi_k must be 2-forms on V_J");
  }
  for (const auto& a : p.alpha)
    if (a.size() != v) violated("alpha_j must live on V_J");
  for (std::size_t k = 0; k < rest && check; ++k) {
    const auto& phi = p.phi[k];
    const auto& psi = p.psi[k];
    if (!(j_pullback(jv, phi.re) == phi.re) || !(j_pullback(jv, phi.im) == phi.im))
      violated("phi_" + std::to_string(p.m + k + 1) + " is not of type (1,1)");
    for (std::size_t a = 0; a < v; ++a)
      for (std::size_t b = 0; b < v; ++b) {
        std::vector<Vector> args{jv.apply(unit_vector(v, a)), unit_vector(v, b)};
        Complex jz{evaluate(psi.re, args), evaluate(psi.im, args)};
        Complex zw = evaluate_pair(psi, a, b);
        if (jz.re != -zw.im || jz.im != zw.re)
          violated("psi_" + std::to_string(p.m + k + 1) + " is not of type (2,0)");
      }
  }
  if (check && !typeII_quartic_constraint(p).is_zero())
    violated("quartic constraint sum phi^phibar - psi^psibar = 0 fails");
  if (check && rest > 0) {
    std::vector<Vector> values;
    for (std::size_t a = 0; a < v; ++a)
      for (std::size_t b = a + 1; b < v; ++b) {
        Vector val;
        for (std::size_t k = 0; k < rest; ++k) {
          Complex c = evaluate_pair(p.phi[k], a, b), d = evaluate_pair(p.psi[k], a, b);
          val.push_back(c.re + d.re);
          val.push_back(c.im + d.im);
        }
        values.push_back(val);
      }
    if (Subspace::span(2 * rest, values).dim() != 2 * rest)
      violated("the forms phi_k + psi_k do not span the remaining derived directions");
  }

  const std::size_t n = 2 * static_cast<std::size_t>(p.s) + v;
  const std::size_t z0 = 2 * static_cast<std::size_t>(p.s);
  BracketTable t(n);
  for (int j = 0; j < p.m; ++j) {
    const std::size_t y = 2 * j;
    for (std::size_t q = 0; q < v; ++q) {
      t.add(z0 + q, y, y + 1, p.alpha[j][q]);
      t.add(z0 + q, y + 1, y, -p.alpha[j][q]);
    }
  }
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = a + 1; b < v; ++b) {
      for (int j = 0; j < p.m; ++j) {
        const Vector& al = p.alpha[j];
        Vector jal = jv.matrix().transpose() * al;  // J^*alpha
        Scalar w = al[a] * jal[b] - al[b] * jal[a];
        t.add_complex(z0 + a, z0 + b, 2 * j, times(p.z[j], {w, 0}));
      }
      for (std::size_t k = 0; k < rest; ++k) {
        Complex c = evaluate_pair(p.phi[k], a, b), d = evaluate_pair(p.psi[k], a, b);
        t.add_complex(z0 + a, z0 + b, 2 * (p.m + k), {c.re + d.re, c.im + d.im});
      }
    }
  LieAlgebra lie = t.build();
  if (check && !lie.validated()) violated("bracket table fails the Jacobi identity");
  return {lie, Metric::identity(n), ComplexStructure::standard(n)};
}

}  // namespace

HermitianAlgebra skt_typeII_normal_form(const TypeIINormalForm& params) { return build_typeII(params, true); }

HermitianAlgebra skt_typeII_normal_form_unchecked(const TypeIINormalForm& params) {
  return build_typeII(params, false);
}

SixDNonPureResult skt_6d_nonpure_normal_form(const SixDNonPureData& p) {
  if (p.b.size() != 4 || p.delta.size() != 3 || p.z.size() != 3 || p.w.size() != 6)
    violated("expected b_0..b_3, delta_0..delta_2, z_0..z_2, w_0..w_5");
  if (is_zero(p.b)) violated("b must be non-zero");
  if (p.b[0] * p.b[3] + p.b[1] * p.b[1] + p.b[2] * p.b[2] != 0) violated("b_0 b_3 + b_1^2 + b_2^2 != 0");
  for (int i = 0; i < 3; ++i) {
    if (p.delta[i] != 0 && p.delta[i] != 1) violated("delta_i must be 0 or 1");
    if (p.z[i].re != -Scalar(p.delta[i]) * p.b[i] / 2)
      violated("Re z_" + std::to_string(i) + " != -delta_" + std::to_string(i) + " b_" + std::to_string(i) + "/2");
  }
  if (p.z[0] == Complex{} && (p.b[0] != 0 || p.b[1] != 0 || p.b[2] != 0))
    violated("z_0 = 0 requires b_0 = b_1 = b_2 = 0");

  enum : std::size_t { Y = 0, JY = 1, X = 2, JX = 3, Z = 4, JZ = 5 };
  BracketTable t(6);
  // complex-linear on span{Y, JY}: [A, JY] = J[A, Y]
  auto y_bracket = [&](std::size_t a, const Complex& c) {
    t.add_complex(a, Y, Y, c);
    t.add_complex(a, JY, Y, times({0, 1}, c));
  };
  y_bracket(JX, p.z[0]);
  y_bracket(Z, p.z[1]);
  y_bracket(JZ, p.z[2]);
  auto x_bracket = [&](std::size_t a, std::size_t b, const Scalar& coeff, const Complex& w) {
    t.add(a, b, X, coeff);
    t.add_complex(a, b, Y, w);
  };
  x_bracket(JX, X, p.b[0], p.w[0]);
  x_bracket(Z, X, p.b[1], p.w[1]);
  x_bracket(JZ, X, p.b[2], p.w[2]);
  x_bracket(Z, JX, -p.b[2], p.w[3]);
  x_bracket(JZ, JX, p.b[1], p.w[4]);
  x_bracket(Z, JZ, p.b[3], p.w[5]);

  LieAlgebra lie = t.build();
  const ComplexStructure j = ComplexStructure::standard(6);
  if (!lie.validated()) violated("bracket table fails the Jacobi identity");
  if (!validate_complex_structure(lie, j).integrable) violated("J is not integrable on this table");
  HermitianDecomposition d = hermitian_decomposition(lie, Metric::identity(6), j);
  if (d.s != 1 || d.r != 1 || d.ell != 1) violated("table is not of non-pure type with s = r = l = 1");
  bool skt = classify_metric(lie, Metric::identity(6), j).skt;
  return {lie, j, d, skt};
}

}  // namespace hermlie
