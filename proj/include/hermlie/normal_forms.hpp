#pragma once

#include "hermlie/forms.hpp"
#include "hermlie/hermitian.hpp"
#include "hermlie/lie_algebra.hpp"

#include <string>
#include <vector>

namespace hermlie {

/// Exact complex number x + iy; acting on a vector v it means x v + y Jv.
struct Complex {
  Scalar re = 0;
  Scalar im = 0;
  friend bool operator==(const Complex&, const Complex&) = default;
};

/// Complex-valued 2-form stored as real and imaginary parts.
struct ComplexForm {
  KForm re;
  KForm im;
};

/// Algebra with a compatible Hermitian structure.
struct HermitianAlgebra {
  LieAlgebra lie;
  Metric metric;
  ComplexStructure j;
};

enum class KahlerType { I, II, III, General };

/// Kaehler two-step solvable normal form.  Basis order:
/// Y_1, JY_1, .., Y_s, JY_s, X_1, JX_1, .., X_r, JX_r, Z_1, JZ_1, .., Z_l, JZ_l
/// with J e_{2i-1} = e_{2i} and the identity metric.  Brackets:
/// [JX, Y_j] = alpha_j(X) JY_j, [Z, Y_j] = beta_j(Z) JY_j, [JX_k, X_k] = lambda_k X_k,
/// extended complex-linearly on span{Y_j, JY_j}.
struct KahlerNormalForm {
  KahlerType type = KahlerType::General;
  int s = 0, r = 0, ell = 0;
  std::vector<Vector> alpha;  // s entries, each alpha_j(X_1..X_r)
  std::vector<Vector> beta;   // s entries, each beta_j(Z_1, JZ_1, ..)
  Vector lambda;              // r entries
};

/// Throws ParameterConstraintViolated when a nonvanishing condition or the
/// type/shape consistency fails.
HermitianAlgebra kahler_normal_form(const KahlerNormalForm& params);

/// Same bracket table without any parameter checks (may not be Kaehler or
/// may have a smaller derived algebra).
HermitianAlgebra kahler_normal_form_unchecked(const KahlerNormalForm& params);

/// SKT pure type II normal form.  Basis Y_1, JY_1, .., Y_s, JY_s, then a
/// J-paired basis of V_J; identity metric.  Brackets:
/// [Z, Y_j] = alpha_j(Z) JY_j (j <= m),
/// [Z, W] = sum_j z_j (alpha_j ^ J^*alpha_j)(Z, W) Y_j + sum_k (phi_k + psi_k)(Z, W) Y_k.
/// Forms live on V_J with its own indices 1..2l.
struct TypeIINormalForm {
  int s = 0, ell = 0, m = 0;
  std::vector<Vector> alpha;        // m entries of length 2l, nonzero
  std::vector<Complex> z;           // m entries
  std::vector<ComplexForm> phi;     // s - m entries, (1,1)
  std::vector<ComplexForm> psi;     // s - m entries, (2,0)
};

/// Throws ParameterConstraintViolated naming the failed condition.
HermitianAlgebra skt_typeII_normal_form(const TypeIINormalForm& params);

/// Same table with only shape checks; the result may fail Jacobi or SKT.
HermitianAlgebra skt_typeII_normal_form_unchecked(const TypeIINormalForm& params);

/// sum_k Re(phi_k)^2 + Im(phi_k)^2 - Re(psi_k)^2 - Im(psi_k)^2 as a 4-form on V_J.
KForm typeII_quartic_constraint(const TypeIINormalForm& params);

/// Six-dimensional non-pure SKT bracket table on the basis Y, JY, X, JX, Z, JZ.
struct SixDNonPureData {
  Vector b = zero_vector(4);
  std::vector<int> delta = {0, 0, 0};
  std::vector<Complex> z = std::vector<Complex>(3);
  std::vector<Complex> w = std::vector<Complex>(6);
};

struct SixDNonPureResult {
  LieAlgebra lie;
  ComplexStructure j;
  HermitianDecomposition decomposition;  // with respect to the identity metric
  bool skt_with_identity_metric = false;
};

/// Throws ParameterConstraintViolated if a parameter condition fails or the
/// table is not a Lie algebra with integrable J and non-pure decomposition.
SixDNonPureResult skt_6d_nonpure_normal_form(const SixDNonPureData& params);

}  // namespace hermlie
