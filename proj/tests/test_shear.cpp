#include "hermlie/catalog.hpp"
#include "hermlie/error.hpp"
#include "hermlie/generators.hpp"
#include "hermlie/shear.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace hermlie;

namespace {

const ShearProfile kProfiles[] = {ShearProfile::Nilpotent, ShearProfile::TypeI, ShearProfile::TypeII,
                                  ShearProfile::TypeIII, ShearProfile::Mixed};

/// [x, y] = -omega(x, y) without the Jacobi check.
LieAlgebra raw_algebra(const PreShearData& data) {
  const std::size_t n = data.dim();
  std::vector<StructureConstant> cs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (data.omega.value(i, j)[k] != 0)
          cs.push_back({static_cast<int>(i + 1), static_cast<int>(j + 1), static_cast<int>(k + 1),
                        -data.omega.value(i, j)[k]});
  return make_algebra(n, cs);
}

bool nijenhuis_vanishes(const LieAlgebra& lie, const ComplexStructure& j) {
  for (std::size_t a = 0; a < lie.dim(); ++a)
    for (std::size_t b = a + 1; b < lie.dim(); ++b)
      if (!is_zero(nijenhuis(lie, j, unit_vector(lie.dim(), a), unit_vector(lie.dim(), b)))) return false;
  return true;
}

/// Adds (beta ^ gamma) (x) v with beta vanishing on a and v in a, which keeps the data pre-shear.
PreShearData perturbed(const PreShearData& data, Rng& rng) {
  const std::size_t n = data.dim();
  const auto annihilator = nullspace(Matrix::from_rows(data.a.basis(), n));
  if (annihilator.empty() || data.a.basis().empty() || n < 2) return data;
  PreShearData out = data;
  for (;;) {
    Vector beta = zero_vector(n), v = zero_vector(n);
    for (const Vector& b : annihilator) axpy(rng.rational(), b, beta);
    for (const Vector& b : data.a.basis()) axpy(rng.rational(), b, v);
    const Vector gamma = rng.vector(n);
    if (is_zero(beta) || is_zero(v)) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Scalar c = beta[i] * gamma[j] - beta[j] * gamma[i];
        if (c != 0) out.omega.set(i, j, add(out.omega.value(i, j), scaled(c, v)));
      }
    if (!(out.omega == data.omega)) return out;
  }
}

PreShearData aff_h3_data() { return PreShearData::from_algebra(catalog_entry("aff_R + h3 + R (pure type I)").algebra); }

}  // namespace

TEST(PreShear, Validation) {
  const Subspace a = Subspace::coordinate(4, {0});
  EXPECT_TRUE(validate_pre_shear(PreShearData::zero(4, a)).valid);
  const PreShearData ex = aff_h3_data();
  EXPECT_EQ(ex.a, Subspace::coordinate(6, {1, 4}));
  EXPECT_TRUE(validate_pre_shear(ex).valid);

  PreShearData bad = PreShearData::zero(4, Subspace::coordinate(4, {0, 1}));
  bad.omega.set(0, 1, unit_vector(4, 0));
  const PreShearReport r = validate_pre_shear(bad);
  EXPECT_FALSE(r.valid);
  EXPECT_FALSE(r.violations.empty());
}

TEST(PreShear, ZeroDataIsAbelianAndFlat) {
  const PreShearData zero = PreShearData::zero(4, Subspace::coordinate(4, {0, 1}));
  const ComplexStructure j = ComplexStructure::standard(4);
  const ComplexShearCheck c = check_complex_shear(zero, j);
  EXPECT_TRUE(c.jacobi_ok && c.integrable_ok);
  EXPECT_EQ(build_shear(zero), abelian_algebra(4));
  for (ConditionKind k : {ConditionKind::Kahler, ConditionKind::Balanced, ConditionKind::Skt})
    EXPECT_TRUE(shear_condition(zero, Metric::identity(4), j, k));
  const ShearOperators ops = shear_operators(zero, Metric::identity(4), j);
  EXPECT_TRUE(ops.report_clean);
}

TEST(PreShear, WorkedExampleReconstruction) {
  const PreShearData ex = aff_h3_data();
  const ComplexStructure j = ComplexStructure::standard(6);
  const ComplexShearCheck c = check_complex_shear(ex, j);
  EXPECT_TRUE(c.jacobi_ok && c.integrable_ok);
  EXPECT_EQ(build_shear(ex), catalog_entry("aff_R + h3 + R (pure type I)").algebra);
  const Metric g = Metric::identity(6);
  EXPECT_TRUE(shear_condition(ex, g, j, ConditionKind::Skt));
  EXPECT_FALSE(shear_condition(ex, g, j, ConditionKind::Balanced));
  EXPECT_FALSE(shear_condition(ex, g, j, ConditionKind::Kahler));
}

TEST(PreShear, ComplexShearChecksMatchDirectOracles) {
  Rng rng(77);
  int jacobi_failures = 0, integrability_failures = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const GeneratedShear gen = random_complex_shear(seed, kProfiles[seed % 5], seed % 3 ? 6 : 4);
    const PreShearData data = seed % 2 ? perturbed(gen.data, rng) : gen.data;
    const ComplexShearCheck c = check_complex_shear(data, gen.j);
    const LieAlgebra raw = raw_algebra(data);
    const bool jacobi = jacobi_residual(raw) == 0;
    EXPECT_EQ(c.jacobi_ok, jacobi) << "seed " << seed;
    EXPECT_EQ(c.integrable_ok, nijenhuis_vanishes(raw, gen.j)) << "seed " << seed;
    if (seed % 2 == 0) {
      EXPECT_TRUE(c.jacobi_ok && c.integrable_ok) << "seed " << seed;
    }
    jacobi_failures += !c.jacobi_ok;
    integrability_failures += !c.integrable_ok;
  }
  EXPECT_GT(jacobi_failures, 0);
  EXPECT_GT(integrability_failures, 0);
}

TEST(PreShear, BuildRejectsJacobiFailure) {
  Rng rng(3);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const PreShearData bad = perturbed(random_complex_shear(seed, ShearProfile::Mixed).data, rng);
    if (jacobi_residual(raw_algebra(bad)) == 0) continue;
    try {
      build_shear(bad);
      FAIL() << "expected JacobiFailed";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::JacobiFailed);
    }
    return;
  }
  FAIL() << "no Jacobi-violating perturbation found";
}

TEST(Shear, ConditionsMatchDirectVerdicts) {
  Rng rng(5);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const GeneratedShear gen = random_complex_shear(seed + 9000, kProfiles[seed % 5], seed % 2 ? 6 : 4);
    const Metric g = seed % 3 ? gen.metric : random_compatible_metric(rng, gen.j);
    const LieAlgebra lie = build_shear(gen.data);
    EXPECT_TRUE(is_two_step_solvable(lie));
    EXPECT_EQ(image_of_bracket(lie), gen.data.omega.image());
    const Verdicts v = classify_metric(lie, g, gen.j);
    EXPECT_EQ(shear_condition(gen.data, g, gen.j, ConditionKind::Kahler), v.kahler) << "seed " << seed;
    EXPECT_EQ(shear_condition(gen.data, g, gen.j, ConditionKind::Balanced), v.balanced) << "seed " << seed;
    EXPECT_EQ(shear_condition(gen.data, g, gen.j, ConditionKind::Skt), v.skt) << "seed " << seed;
  }
}

TEST(Shear, NonShearDataIsRejected) {
  Rng rng(1);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const GeneratedShear gen = random_complex_shear(seed, ShearProfile::Mixed);
    const PreShearData bad = perturbed(gen.data, rng);
    const ComplexShearCheck c = check_complex_shear(bad, gen.j);
    if (c.jacobi_ok && c.integrable_ok) continue;
    try {
      shear_condition(bad, gen.metric, gen.j, ConditionKind::Skt);
      FAIL() << "expected NotComplexShearData";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotComplexShearData);
    }
    return;
  }
}

TEST(ShearOperators, ReportCleanOnGeneratedData) {
  Rng rng(6);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const GeneratedShear gen = random_complex_shear(seed + 300, kProfiles[seed % 5], seed % 2 ? 6 : 4);
    const Metric g = seed % 2 ? gen.metric : random_compatible_metric(rng, gen.j);
    const ShearOperators ops = shear_operators(gen.data, g, gen.j);
    EXPECT_TRUE(ops.report_clean) << "seed " << seed << ": "
                                  << (ops.report_failures.empty() ? "" : ops.report_failures.front());
  }
}

TEST(ShearOperators, KahlerDataConsequences) {
  int kahler = 0;
  for (std::uint64_t seed = 0; seed < 300 && kahler < 60; ++seed) {
    const GeneratedShear gen = random_complex_shear(seed, kProfiles[seed % 5], 6);
    if (!shear_condition(gen.data, gen.metric, gen.j, ConditionKind::Kahler)) continue;
    ++kahler;
    const ShearOperators ops = shear_operators(gen.data, gen.metric, gen.j);
    const auto& w = gen.data.omega;
    for (const Vector& u : ops.U_J_basis)
      for (const Vector& v : ops.U_J_basis) EXPECT_TRUE(is_zero(w.evaluate(u, v))) << "seed " << seed;
    for (const Vector& x : ops.a_r_basis)
      for (const Vector& y : ops.a_r_basis)
        EXPECT_TRUE(is_zero(w.evaluate(gen.j.apply(x), gen.j.apply(y)))) << "seed " << seed;
    for (const auto& row : ops.h)
      for (const Vector& v : row) EXPECT_TRUE(is_zero(v)) << "seed " << seed;
  }
  EXPECT_GE(kahler, 20);
}

TEST(ShearOperators, KahlerTypeIIIBlocks) {
  KahlerNormalForm p;
  p.type = KahlerType::III;
  p.s = 1;
  p.r = 1;
  p.alpha = {Vector{3}};
  p.beta = {Vector{}};
  p.lambda = {1};
  const HermitianAlgebra h = kahler_normal_form(p);
  const ShearOperators ops = shear_operators(PreShearData::from_algebra(h.lie), h.metric, h.j);
  ASSERT_EQ(ops.a_r_basis.size(), 1u);
  ASSERT_EQ(ops.a_r_basis[0], unit_vector(4, 2));
  ASSERT_EQ(ops.a_J_basis, (std::vector<Vector>{unit_vector(4, 0), unit_vector(4, 1)}));
  // K_X(Y_1) = -alpha_1(X) J Y_1 and K_X(J Y_1) = alpha_1(X) Y_1
  Matrix expected(2, 2);
  expected(1, 0) = -3;
  expected(0, 1) = 3;
  EXPECT_EQ(ops.K[0], expected);
}

TEST(Generators, DeterministicAndValid) {
  for (ShearProfile p : kProfiles) {
    const GeneratedShear a = random_complex_shear(1, p), b = random_complex_shear(1, p);
    EXPECT_EQ(a.data, b.data);
    EXPECT_EQ(a.metric, b.metric);
    const ComplexShearCheck c = check_complex_shear(a.data, a.j);
    EXPECT_TRUE(c.jacobi_ok && c.integrable_ok);
  }
  EXPECT_TRUE(structure_invariants(build_shear(random_complex_shear(0, ShearProfile::Nilpotent).data)).nilpotent);
  const GeneratedShear t2 = random_complex_shear(1, ShearProfile::TypeII);
  EXPECT_EQ(hermitian_decomposition(build_shear(t2.data), t2.metric, t2.j).pure_type, PureType::II);
  EXPECT_EQ(random_complex_shear(4, ShearProfile::Mixed, 4).profile, ShearProfile::TypeIII);
}

TEST(Shear, ChangeOfBasisCommutesWithBuild) {
  Rng rng(9);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const GeneratedShear gen = random_complex_shear(seed, kProfiles[seed % 5]);
    const Matrix p = hermlie::testing::random_invertible(rng, 6);
    EXPECT_EQ(build_shear(change_basis(gen.data, p)), change_basis(build_shear(gen.data), p));
  }
}
