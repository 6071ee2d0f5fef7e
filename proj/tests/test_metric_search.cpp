#include "hermlie/catalog.hpp"
#include "hermlie/error.hpp"
#include "hermlie/generators.hpp"
#include "hermlie/metric_search.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace hermlie;

namespace {

DoubleMatrix to_double_matrix(const Matrix& m) {
  DoubleMatrix d(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = to_double(m(i, j));
  return d;
}

const CatalogEntry& aff_h3() { return catalog_entry("aff_R + h3 + R (pure type I)"); }

const ConditionKind kKinds[] = {ConditionKind::Kahler, ConditionKind::Balanced, ConditionKind::Skt};

}  // namespace

TEST(Parameterization, Dimensions) {
  EXPECT_EQ(metric_parameterization(ComplexStructure::standard(2)).basis.size(), 1u);
  EXPECT_EQ(metric_parameterization(ComplexStructure::standard(4)).basis.size(), 4u);
  EXPECT_EQ(metric_parameterization(*catalog_entry("N_{6,1}^{-1/2,-1/2,0,0} presentation (pure type III)").j)
                .basis.size(),
            9u);
}

TEST(Residual, Examples) {
  const DoubleMatrix id = to_double_matrix(Matrix::identity(6));
  EXPECT_EQ(residual(aff_h3().algebra, *aff_h3().j, id, ConditionKind::Skt), 0.0);
  EXPECT_GT(residual(aff_h3().algebra, *aff_h3().j, id, ConditionKind::Balanced), 0.0);
  Rng rng(1);
  const ComplexStructure j = ComplexStructure::standard(6);
  const DoubleMatrix s = to_double_matrix(random_compatible_metric(rng, j).matrix());
  for (ConditionKind k : kKinds) EXPECT_EQ(residual(abelian_algebra(6), j, s, k), 0.0);
}

TEST(Residual, ZeroExactlyWhenVerdictHolds) {
  // integer structure constants and integer metrics keep the double arithmetic exact
  Rng rng(44);
  const ComplexStructure j = ComplexStructure::standard(6);
  std::vector<const CatalogEntry*> entries;
  for (const auto& e : witness_lists())
    if (*e.j == j && e.name.find('/') == std::string::npos) entries.push_back(&e);
  ASSERT_FALSE(entries.empty());
  int zero = 0, positive = 0;
  for (int t = 0; t < 200; ++t) {
    const CatalogEntry& e = *entries[static_cast<std::size_t>(t) % entries.size()];
    const Metric g(t % 4 == 0 ? Matrix::identity(6) : hermlie::testing::random_integer_hermitian(rng, 6));
    const Verdicts v = classify_metric(e.algebra, g, j);
    const DoubleMatrix s = to_double_matrix(g.matrix());
    for (ConditionKind k : kKinds) {
      const double r = residual(e.algebra, j, s, k);
      const bool exact = k == ConditionKind::Kahler ? v.kahler : k == ConditionKind::Balanced ? v.balanced : v.skt;
      EXPECT_EQ(r == 0.0, exact) << e.name << " " << condition_name(k) << " residual " << r;
      r == 0.0 ? ++zero : ++positive;
    }
  }
  EXPECT_GT(zero, 0);
  EXPECT_GT(positive, 0);
}

TEST(Residual, FiniteDifferenceGradientMatchesExact) {
  Rng rng(2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const GeneratedShear gen = random_complex_shear(seed, ShearProfile::Mixed, 4);
    const LieAlgebra lie = build_shear(gen.data);
    for (ConditionKind k : {ConditionKind::Kahler, ConditionKind::Skt, ConditionKind::Balanced}) {
      const ResidualModel model(lie, gen.j, k);
      ASSERT_TRUE(model.linear());
      std::vector<double> x(model.parameters());
      for (double& xi : x) xi = to_double(rng.rational(3, 2));
      const auto fd = model.gradient_fd(x, 1e-6), exact = model.gradient_exact(x);
      for (std::size_t i = 0; i < x.size(); ++i)
        EXPECT_NEAR(fd[i], exact[i], 1e-5 * (1 + std::abs(exact[i]))) << "seed " << seed << " i " << i;
    }
  }
}

TEST(Search, FindsKahlerWitnessAndVerifiesExactly) {
  const auto& e = catalog_entry("2r'_{3,0}");
  const SearchResult r = search_metric(e.algebra, *e.j, ConditionKind::Kahler);
  ASSERT_EQ(r.status, SearchStatus::Found);
  EXPECT_LT(r.residual, 1e-9);
  EXPECT_GT(r.min_eigenvalue, 0);
  ASSERT_TRUE(r.exact_verified);
  EXPECT_TRUE(classify_metric(e.algebra, *r.exact_metric, *e.j).kahler);
}

TEST(Search, FindsSktWitnessOnWorkedExample) {
  const SearchResult r = search_metric(aff_h3().algebra, *aff_h3().j, ConditionKind::Skt);
  ASSERT_EQ(r.status, SearchStatus::Found);
  EXPECT_TRUE(r.exact_verified);
  EXPECT_TRUE(classify_metric(aff_h3().algebra, *r.exact_metric, *aff_h3().j).skt);
}

TEST(Search, NoKahlerWitnessIsInconclusive) {
  SearchConfig c;
  c.seeds = SearchConfig::default_seeds(4);
  const SearchResult r = search_metric(aff_h3().algebra, *aff_h3().j, ConditionKind::Kahler, c);
  EXPECT_EQ(r.status, SearchStatus::NotFound);
  EXPECT_EQ(r.message, "no witness found (inconclusive)");
  EXPECT_FALSE(r.exact_verified);
}

TEST(Search, Deterministic) {
  const auto& e = catalog_entry("N_{6,1}^{-1/2,-1/2,0,0} presentation (pure type III)");
  const SearchResult a = search_metric(e.algebra, *e.j, ConditionKind::Balanced);
  const SearchResult b = search_metric(e.algebra, *e.j, ConditionKind::Balanced);
  EXPECT_EQ(a.iterations, b.iterations);
  EXPECT_EQ(a.seed, b.seed);
  EXPECT_EQ(a.metric, b.metric);
  EXPECT_EQ(a.residual, b.residual);
  EXPECT_EQ(a.exact_metric.has_value(), b.exact_metric.has_value());
}

TEST(Search, FoundResultsPassExactCheck) {
  for (const auto& e : witness_lists()) {
    for (ConditionKind k : {ConditionKind::Skt, ConditionKind::Balanced}) {
      SearchConfig c;
      c.seeds = SearchConfig::default_seeds(2);
      const SearchResult r = search_metric(e.algebra, *e.j, k, c);
      EXPECT_GT(r.min_eigenvalue, 0) << e.name;
      if (r.exact_verified) {
        const Verdicts v = classify_metric(e.algebra, *r.exact_metric, *e.j);
        EXPECT_TRUE(k == ConditionKind::Skt ? v.skt : v.balanced) << e.name;
      }
    }
  }
}

TEST(Search, RejectsBadInput) {
  const LieAlgebra bad = make_lie_algebra(6, {{1, 3, 5, 1}});
  try {
    search_metric(bad, ComplexStructure::standard(6), ConditionKind::Skt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotIntegrable);
  }
}

TEST(ContinuedFraction, Approximations) {
  EXPECT_EQ(continued_fraction(0.5, 10), Scalar(1, 2));
  EXPECT_EQ(continued_fraction(1.0 / 3.0 + 1e-12, 100), Scalar(1, 3));
  EXPECT_EQ(continued_fraction(3.14159265358979, 1000), Scalar(355, 113));
}
