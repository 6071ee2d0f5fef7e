#include "hermlie/catalog.hpp"
#include "hermlie/error.hpp"
#include "hermlie/forms.hpp"
#include "hermlie/lie_algebra.hpp"
#include "hermlie/salamon.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace hermlie;
using hermlie::testing::random_invertible;

namespace {

KForm e(std::size_t n, std::vector<int> idx) { return KForm::basis(n, idx); }

bool d_squared_vanishes(const LieAlgebra& lie) {
  for (std::size_t i = 0; i < lie.dim(); ++i)
    if (!ce_differential(lie, differential_of_dual(lie, i)).is_zero()) return false;
  return true;
}

/// Lie algebras from small blocks, moved by a random change of basis.
LieAlgebra random_lie_algebra(Rng& rng, std::size_t dim) {
  static const std::vector<std::pair<std::size_t, std::string>> blocks = {
      {2, "(0,21)"}, {3, "(0,0,21)"}, {3, "(0,21,31)"}, {3, "(23,31,12)"}, {3, "(0,21,-31)"}, {1, "(0)"}};
  LieAlgebra lie;
  while (lie.dim() < dim) {
    const auto& [d, text] = blocks[static_cast<std::size_t>(rng.integer(0, static_cast<int>(blocks.size()) - 1))];
    if (lie.dim() + d > dim) continue;
    lie = lie.dim() == 0 ? parse_salamon(text) : direct_sum(lie, parse_salamon(text));
  }
  return change_basis(lie, random_invertible(rng, dim));
}

LieAlgebra random_table(Rng& rng, std::size_t dim) {
  std::vector<StructureConstant> cs;
  const int count = rng.integer(1, 4);
  for (int c = 0; c < count; ++c) {
    int i = rng.integer(1, static_cast<int>(dim)), j = rng.integer(1, static_cast<int>(dim));
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    const int k = rng.integer(1, static_cast<int>(dim));
    if (std::any_of(cs.begin(), cs.end(), [&](const auto& s) { return s.i == i && s.j == j && s.k == k; })) continue;
    cs.push_back({i, j, k, rng.nonzero_rational(2, 1)});
  }
  return make_algebra(dim, cs);
}

}  // namespace

TEST(LieAlgebra, AffineBracket) {
  const LieAlgebra aff = make_lie_algebra(2, {{1, 2, 2, 1}});
  EXPECT_TRUE(aff.validated());
  EXPECT_EQ(bracket(aff, unit_vector(2, 0), unit_vector(2, 1)), unit_vector(2, 1));
  EXPECT_TRUE(is_two_step_solvable(aff));
  EXPECT_FALSE(is_unimodular(aff));
  EXPECT_EQ(trace_ad(aff, unit_vector(2, 0)), 1);
}

TEST(LieAlgebra, BracketIsAlternating) {
  Rng rng(1);
  const LieAlgebra lie = random_lie_algebra(rng, 5);
  for (int t = 0; t < 20; ++t) {
    const Vector x = rng.vector(5);
    EXPECT_TRUE(is_zero(bracket(lie, x, x)));
  }
}

TEST(LieAlgebra, AbelianIsValidated) {
  const LieAlgebra a = make_lie_algebra(6, {});
  EXPECT_TRUE(a.validated());
  EXPECT_EQ(jacobi_residual(a), 0);
  const Fingerprint f = structure_invariants(a);
  EXPECT_EQ(f.center_dim, 6u);
  EXPECT_EQ(f.derived_series, std::vector<std::size_t>{0});
}

TEST(LieAlgebra, JacobiFailureIsReported) {
  // [e1,e2] = e1, [e1,e3] = e2: the cyclic sum on (e1,e2,e3) is e2
  const LieAlgebra bad = make_algebra(3, {{1, 2, 1, 1}, {1, 3, 2, 1}});
  EXPECT_FALSE(bad.validated());
  EXPECT_EQ(jacobi_residual(bad), 1);
  try {
    make_lie_algebra(3, {{1, 2, 1, 1}, {1, 3, 2, 1}});
    FAIL() << "expected JacobiFailed";
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::JacobiFailed);
  }
}

TEST(LieAlgebra, TableErrors) {
  try {
    make_algebra(3, {{1, 2, 3, 1}, {2, 1, 3, 1}});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::DuplicateEntry);
  }
  try {
    make_algebra(3, {{1, 4, 3, 1}});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::IndexOutOfRange);
  }
}

TEST(LieAlgebra, HeisenbergIsUnimodularAndNilpotent) {
  const LieAlgebra h3 = parse_salamon("(0,0,21)");
  EXPECT_EQ(jacobi_residual(h3), 0);
  EXPECT_TRUE(is_two_step_solvable(h3));
  EXPECT_TRUE(is_unimodular(h3));
  EXPECT_TRUE(structure_invariants(h3).nilpotent);
}

TEST(LieAlgebra, TypeIIIExampleBracketsAndTrace) {
  const LieAlgebra lie = parse_salamon("(-15+16,-25+26,2.35+2.46,2.36+2.45,0,0)");
  Vector minus_e1 = zero_vector(6);
  minus_e1[0] = -1;
  EXPECT_EQ(bracket(lie, unit_vector(6, 4), unit_vector(6, 0)), minus_e1);
  EXPECT_TRUE(is_two_step_solvable(lie));
  EXPECT_FALSE(is_unimodular(lie));
}

TEST(LieAlgebra, FingerprintsOfSixDimensionalExamples) {
  const LieAlgebra ex = parse_salamon("(0,21,0,0,43,0)");
  const Fingerprint f = structure_invariants(ex);
  EXPECT_EQ(f.derived_series.front(), 2u);
  EXPECT_EQ(f.derived_center_dim, 1u);
  EXPECT_FALSE(f.unimodular);
  EXPECT_EQ(image_of_bracket(ex), Subspace::coordinate(6, {1, 4}));

  const Fingerprint two_aff = structure_invariants(parse_salamon("(0,21,0,43,0,0)"));
  EXPECT_EQ(two_aff.derived_series.front(), 2u);
  EXPECT_EQ(two_aff.derived_center_dim, 0u);
}

TEST(LieAlgebra, DirectSums) {
  const LieAlgebra aff = parse_salamon("(0,21)");
  const LieAlgebra s = direct_sum(aff, abelian_algebra(4));
  EXPECT_EQ(s.dim(), 6u);
  EXPECT_EQ(image_of_bracket(s).dim(), 1u);
  EXPECT_EQ(direct_sum(abelian_algebra(2), abelian_algebra(3)), abelian_algebra(5));

  const LieAlgebra ex = direct_sum(direct_sum(aff, parse_salamon("(0,0,21)")), abelian_algebra(1));
  EXPECT_EQ(structure_invariants(ex), structure_invariants(parse_salamon("(0,21,0,0,43,0)")));
}

TEST(LieAlgebra, DerivedAlgebraOfDirectSumAdds) {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const LieAlgebra a = random_lie_algebra(rng, static_cast<std::size_t>(rng.integer(2, 4)));
    const LieAlgebra b = random_lie_algebra(rng, static_cast<std::size_t>(rng.integer(2, 4)));
    EXPECT_EQ(image_of_bracket(direct_sum(a, b)).dim(), image_of_bracket(a).dim() + image_of_bracket(b).dim());
  }
}

TEST(LieAlgebra, DSquaredVanishesIffJacobi) {
  Rng rng(2025);
  int lie_count = 0, non_lie = 0;
  for (int t = 0; t < 500; ++t) {
    const std::size_t dim = static_cast<std::size_t>(3 + t % 4);
    const LieAlgebra lie = t % 2 == 0 ? random_lie_algebra(rng, dim) : random_table(rng, dim);
    const bool jacobi = jacobi_residual(lie) == 0;
    EXPECT_EQ(d_squared_vanishes(lie), jacobi) << "trial " << t;
    jacobi ? ++lie_count : ++non_lie;
  }
  EXPECT_GE(lie_count, 250);
  EXPECT_GE(non_lie, 100);
}

TEST(LieAlgebra, FingerprintInvariantUnderChangeOfBasis) {
  Rng rng(7);
  for (int t = 0; t < 100; ++t) {
    const std::size_t dim = static_cast<std::size_t>(3 + t % 4);
    const LieAlgebra lie = random_lie_algebra(rng, dim);
    const LieAlgebra moved = change_basis(lie, random_invertible(rng, dim));
    EXPECT_EQ(structure_invariants(lie), structure_invariants(moved)) << "trial " << t;
  }
}

TEST(Forms, WedgeBasics) {
  EXPECT_EQ(evaluate(wedge(e(2, {1}), e(2, {2})), {unit_vector(2, 0), unit_vector(2, 1)}), 1);
  EXPECT_TRUE(wedge(e(4, {1, 2}), e(4, {1, 2})).is_zero());
  EXPECT_EQ(e(3, {2, 1}), Scalar(-1) * e(3, {1, 2}));
}

TEST(Forms, WedgeMatchesShuffleExpansion) {
  Rng rng(3);
  auto random_form = [&](std::size_t n, std::size_t k) {
    KForm f(n, k);
    for (KForm::Mask m : masks_of_degree(n, k))
      if (rng.coin()) f.add_term(m, rng.nonzero_rational());
    return f;
  };
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(3, 6));
    const std::size_t k = static_cast<std::size_t>(rng.integer(1, std::min<int>(3, static_cast<int>(n) - 1)));
    const std::size_t l = static_cast<std::size_t>(rng.integer(1, std::min<int>(3, static_cast<int>(n - k))));
    const KForm a = random_form(n, k), b = random_form(n, l);
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < k + l; ++i) vs.push_back(rng.vector(n));

    // brute force over all permutations, divided by k! l!
    std::vector<std::size_t> perm(k + l);
    std::iota(perm.begin(), perm.end(), 0);
    Scalar total = 0;
    do {
      int inversions = 0;
      for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
      std::vector<Vector> first, second;
      for (std::size_t i = 0; i < k; ++i) first.push_back(vs[perm[i]]);
      for (std::size_t i = k; i < k + l; ++i) second.push_back(vs[perm[i]]);
      const Scalar term = evaluate(a, first) * evaluate(b, second);
      total += inversions % 2 == 0 ? term : Scalar(-term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    Scalar fact = 1;
    for (std::size_t i = 2; i <= k; ++i) fact *= static_cast<int>(i);
    for (std::size_t i = 2; i <= l; ++i) fact *= static_cast<int>(i);
    EXPECT_EQ(evaluate(wedge(a, b), vs), total / fact) << "trial " << t;
  }
}

TEST(Forms, DifferentialMatchesInvariantFormula) {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(3, 6));
    const LieAlgebra lie = random_lie_algebra(rng, n);
    const KForm alpha = KForm::one_form(rng.vector(n));
    KForm beta(n, 2);
    for (KForm::Mask m : masks_of_degree(n, 2)) beta.add_term(m, rng.rational());
    const Vector x = rng.vector(n), y = rng.vector(n), z = rng.vector(n);
    auto br = [&](const Vector& u, const Vector& v) { return bracket(lie, u, v); };
    EXPECT_EQ(evaluate(ce_differential(lie, alpha), {x, y}), -evaluate(alpha, {br(x, y)}));
    const Scalar direct =
        -evaluate(beta, {br(x, y), z}) + evaluate(beta, {br(x, z), y}) - evaluate(beta, {br(y, z), x});
    EXPECT_EQ(evaluate(ce_differential(lie, beta), {x, y, z}), direct);
  }
}

TEST(Forms, WorkedDifferentials) {
  const LieAlgebra ex = parse_salamon("(0,21,0,0,43,0)");
  const KForm sigma = e(6, {1, 2}) + e(6, {3, 4}) + e(6, {5, 6});
  EXPECT_EQ(ce_differential(ex, sigma), Scalar(-1) * e(6, {3, 4, 6}));
  const KForm hat = Scalar(2) * e(6, {1, 2}) - e(6, {1, 5}) - e(6, {2, 6}) + e(6, {3, 4}) + e(6, {5, 6});
  EXPECT_TRUE(ce_differential(ex, wedge(hat, hat)).is_zero());

  const LieAlgebra n61 = parse_salamon("(-15+16,-25+26,2.35+2.46,2.36+2.45,0,0)");
  const KForm tilde = e(6, {1, 2}) + e(6, {3, 5}) + e(6, {4, 6});
  const KForm expected = Scalar(2) * wedge(e(6, {1, 2}), KForm::one_form(add(unit_vector(6, 4),
                                                                              scaled(-1, unit_vector(6, 5)))));
  EXPECT_EQ(ce_differential(n61, tilde), expected);
  EXPECT_TRUE(ce_differential(abelian_algebra(4), e(4, {1, 3})).is_zero());
}

TEST(Subspaces, Calculus) {
  const Subspace s = Subspace::span(3, {{1, 1, 0}, {0, 1, 1}});
  EXPECT_EQ(intersect(s, s), s);
  EXPECT_EQ(sum(s, Subspace::coordinate(3, {0})), Subspace::whole(3));
  EXPECT_EQ(intersect(s, Subspace::coordinate(3, {0, 2})).dim(), 1u);
  EXPECT_EQ(orthogonal_complement(Subspace::coordinate(2, {0}), Matrix::identity(2), Subspace::whole(2)),
            Subspace::coordinate(2, {1}));
}
