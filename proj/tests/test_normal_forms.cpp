#include "hermlie/error.hpp"
#include "hermlie/generators.hpp"
#include "hermlie/normal_forms.hpp"
#include "hermlie/salamon.hpp"

#include <gtest/gtest.h>

using namespace hermlie;

namespace {

bool is_kahler(const HermitianAlgebra& h) { return metric_forms(h.lie, h.metric, h.j).d_sigma.is_zero(); }
bool is_skt(const HermitianAlgebra& h) { return metric_forms(h.lie, h.metric, h.j).d_j_d_sigma.is_zero(); }

template <class F>
ErrorCode thrown_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no hermlie::Error thrown";
  return ErrorCode::InvalidInput;
}

TypeIINormalForm codim_two(const Scalar& second) {
  TypeIINormalForm t;
  t.s = 2;
  t.ell = 1;
  t.m = 2;
  t.alpha = {Vector{-1, 0}, Vector{second, 0}};
  t.z = {{}, {}};
  return t;
}

}  // namespace

TEST(KahlerNormalForm, TypeIAffine) {
  KahlerNormalForm p;
  p.type = KahlerType::I;
  p.r = 1;
  p.lambda = {1};
  const HermitianAlgebra h = kahler_normal_form(p);
  EXPECT_TRUE(is_kahler(h));
  EXPECT_FALSE(fingerprint_distinguish(h.lie, parse_salamon("(0,21)")).distinct);
}

TEST(KahlerNormalForm, TypeIISixDimensional) {
  KahlerNormalForm p;
  p.type = KahlerType::II;
  p.s = 1;
  p.ell = 2;
  p.alpha = {Vector{}};
  p.beta = {Vector{1, 0, 0, 0}};
  const HermitianAlgebra h = kahler_normal_form(p);
  EXPECT_EQ(h.lie, parse_salamon("(-23,13,0,0,0,0)"));
  EXPECT_TRUE(is_kahler(h));
}

TEST(KahlerNormalForm, TypeIIIFourDimensional) {
  KahlerNormalForm p;
  p.type = KahlerType::III;
  p.s = 1;
  p.r = 1;
  p.alpha = {Vector{1}};
  p.beta = {Vector{}};
  p.lambda = {1};
  const HermitianAlgebra h = kahler_normal_form(p);
  EXPECT_EQ(h.lie.dim(), 4u);
  EXPECT_TRUE(is_kahler(h));
  EXPECT_EQ(hermitian_decomposition(h.lie, h.metric, h.j).pure_type, PureType::III);
}

TEST(KahlerNormalForm, RandomDrawsAreKahler) {
  Rng rng(17);
  for (int t = 0; t < 150; ++t) {
    const int s = rng.integer(0, 2), r = rng.integer(0, 2), ell = rng.integer(0, 2);
    if (s + r == 0 || (r == 0 && ell == 0)) continue;
    const HermitianAlgebra h = kahler_normal_form(random_kahler_params(rng, KahlerType::General, s, r, ell));
    EXPECT_TRUE(is_kahler(h)) << "draw " << t;
    EXPECT_EQ(image_of_bracket(h.lie).dim(), static_cast<std::size_t>(2 * s + r)) << "draw " << t;
  }
}

TEST(KahlerNormalForm, VanishingParametersAreRejected) {
  KahlerNormalForm p;
  p.type = KahlerType::I;
  p.r = 1;
  p.lambda = {0};
  EXPECT_EQ(thrown_code([&] { kahler_normal_form(p); }), ErrorCode::ParameterConstraintViolated);
  p.type = KahlerType::II;  // wrong shape for the type
  p.lambda = {1};
  EXPECT_EQ(thrown_code([&] { kahler_normal_form(p); }), ErrorCode::ParameterConstraintViolated);
}

TEST(TypeIINormalForm, CodimensionTwoFamilies) {
  TypeIINormalForm t = codim_two(0);
  t.alpha[1] = Vector{0, -1};
  const HermitianAlgebra rank_two = skt_typeII_normal_form(t);
  EXPECT_EQ(rank_two.lie, parse_salamon("(25,-15,46,-36,0,0)"));
  EXPECT_TRUE(is_skt(rank_two));

  const HermitianAlgebra rank_one = skt_typeII_normal_form(codim_two(Scalar(-1, 2)));
  EXPECT_EQ(rank_one.lie, parse_salamon("(25,-15,1/2.45,-1/2.35,0,0)"));
  EXPECT_TRUE(is_skt(rank_one));

  TypeIINormalForm with_z = codim_two(Scalar(-1, 2));
  with_z.z = {{1, 2}, {0, 1}};
  const HermitianAlgebra h = skt_typeII_normal_form(with_z);
  EXPECT_TRUE(is_skt(h));
  EXPECT_FALSE(is_kahler(h));
}

TEST(TypeIINormalForm, QuarticConstraintBothDirections) {
  TypeIINormalForm u;
  u.s = 1;
  u.ell = 2;
  u.m = 0;
  u.phi = {{KForm::basis(4, {1, 2}) + Scalar(2) * KForm::basis(4, {3, 4}), KForm(4, 2)}};
  u.psi = {{KForm::basis(4, {1, 3}) - KForm::basis(4, {2, 4}), KForm::basis(4, {1, 4}) + KForm::basis(4, {2, 3})}};
  EXPECT_TRUE(typeII_quartic_constraint(u).is_zero());
  EXPECT_TRUE(is_skt(skt_typeII_normal_form(u)));

  u.phi[0].re *= 2;
  EXPECT_FALSE(typeII_quartic_constraint(u).is_zero());
  EXPECT_EQ(thrown_code([&] { skt_typeII_normal_form(u); }), ErrorCode::ParameterConstraintViolated);
  const HermitianAlgebra broken = skt_typeII_normal_form_unchecked(u);
  EXPECT_FALSE(is_skt(broken));
}

TEST(TypeIINormalForm, RandomDrawsAreSktAndNormalize) {
  Rng rng(23);
  const int shapes[][3] = {{1, 2, 0}, {2, 2, 1}, {2, 1, 2}, {1, 2, 1}, {1, 3, 0}};
  for (int t = 0; t < 60; ++t) {
    const auto& sh = shapes[t % 5];
    TypeIINormalForm p = random_typeII_params(rng, sh[0], sh[1], sh[2]);
    if (p.m > 0) p.z[0] = {rng.nonzero_rational(), rng.rational()};
    const HermitianAlgebra h = skt_typeII_normal_form(p);
    EXPECT_TRUE(is_skt(h)) << "draw " << t;
    EXPECT_EQ(hermitian_decomposition(h.lie, h.metric, h.j).pure_type, PureType::II);
    const NormalizedSkt ns = normalize_skt_typeII(h.lie, h.j, h.metric);
    EXPECT_TRUE(orthogonal_splitting_holds(h.lie, ns.metric, ns.complement)) << "draw " << t;
    EXPECT_TRUE(classify_metric(h.lie, ns.metric, h.j).skt) << "draw " << t;
  }
}

TEST(TypeIINormalForm, AlreadySplitInputIsUnchanged) {
  TypeIINormalForm t = codim_two(Scalar(-1, 2));
  const HermitianAlgebra h = skt_typeII_normal_form(t);
  EXPECT_EQ(normalize_skt_typeII(h.lie, h.j, h.metric).metric, h.metric);
}

TEST(SixDNonPure, ValidAndRejectedParameters) {
  SixDNonPureData n;
  n.b = {1, 0, 0, 0};
  n.delta = {1, 0, 0};
  n.z[0] = {Scalar(-1, 2), 0};
  const SixDNonPureResult r = skt_6d_nonpure_normal_form(n);
  EXPECT_TRUE(r.lie.validated());
  EXPECT_TRUE(validate_complex_structure(r.lie, r.j).integrable);
  EXPECT_EQ(r.decomposition.pure_type, PureType::Mixed);
  EXPECT_EQ(std::tie(r.decomposition.s, r.decomposition.r, r.decomposition.ell), std::make_tuple(1, 1, 1));

  n.b = {0, 0, 0, 1};
  n.delta = {0, 0, 0};
  n.z[0] = {};
  EXPECT_EQ(thrown_code([&] { skt_6d_nonpure_normal_form(n); }), ErrorCode::ParameterConstraintViolated);
}

TEST(SixDNonPure, AlmostAbelianEndpointsAreKahler) {
  const ComplexStructure j = ComplexStructure::standard(6);
  for (const std::string text : {"(-24,14,1/2.34,0,0,0)", "(-25,15,34,0,0,0)"}) {
    EXPECT_TRUE(classify_metric(parse_salamon(text), Metric::identity(6), j).kahler) << text;
  }
}
