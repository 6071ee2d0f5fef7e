#include "hermlie/catalog.hpp"
#include "hermlie/error.hpp"
#include "hermlie/salamon.hpp"

#include <gtest/gtest.h>

using namespace hermlie;

namespace {

template <class F>
Error thrown(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no hermlie::Error thrown";
  return Error(ErrorCode::InvalidInput, "none");
}

}  // namespace

TEST(Salamon, ParsesBasicStrings) {
  const LieAlgebra aff = parse_salamon("(0,21)");
  EXPECT_EQ(bracket(aff, unit_vector(2, 0), unit_vector(2, 1)), unit_vector(2, 1));
  EXPECT_EQ(parse_salamon("(-15+16,-25+26,2.(35+46),2.(36+45),0,0)"),
            parse_salamon("(-15+16,-25+26,2.35+2.46,2.36+2.45,0,0)"));
  EXPECT_EQ(parse_salamon("(0,l.21+31,-21+l.31)", {{"l", 0}}), parse_salamon("(0,31,-21)"));
}

TEST(Salamon, Renders) {
  EXPECT_EQ(render_salamon(abelian_algebra(3)), "(0,0,0)");
  EXPECT_EQ(render_salamon(parse_salamon("(0,21)")), "(0,21)");
  EXPECT_EQ(render_salamon(parse_salamon("(0,0,21)")), "(0,0,21)");
  EXPECT_EQ(render_salamon(parse_salamon("(0,0,-12)")), "(0,0,21)");
}

TEST(Salamon, UnicodeMinusAndGreekParameters) {
  EXPECT_EQ(parse_salamon("(0,\xE2\x88\x92" "12)"), parse_salamon("(0,-12)"));
  EXPECT_EQ(parse_salamon("(0,\xCE\xBB.21)", {{"lambda", 3}}), parse_salamon("(0,3.21)"));
}

TEST(Salamon, Errors) {
  const Error syntax = thrown([] { parse_salamon("(0,2x1)"); });
  EXPECT_EQ(syntax.code(), ErrorCode::SyntaxError);
  ASSERT_TRUE(syntax.position().has_value());
  EXPECT_EQ(*syntax.position(), 3u);  // start of the offending term
  EXPECT_EQ(thrown([] { parse_salamon("(0,a.21)"); }).code(), ErrorCode::UnboundParameter);
  EXPECT_EQ(thrown([] { parse_salamon("(0,0,14)"); }).code(), ErrorCode::SyntaxError);
  EXPECT_EQ(thrown([] { parse_salamon("(0,0,12,34)"); }).code(), ErrorCode::JacobiFailed);
}

TEST(Salamon, RoundTripsCatalogAndFamilies) {
  for (const auto& e : witness_lists()) {
    EXPECT_EQ(parse_salamon(e.salamon), e.algebra) << e.name;
    EXPECT_EQ(render_salamon(parse_salamon(render_salamon(e.algebra))), render_salamon(e.algebra)) << e.name;
  }
}

TEST(NamedFamilies, Constraints) {
  EXPECT_EQ(named_algebra("r'_{3,lambda}", {{"lambda", 0}}), parse_salamon("(0,31,-21)"));
  EXPECT_EQ(named_algebra("r'_{3,\xCE\xBB}", {{"lambda", 0}}), parse_salamon("(0,31,-21)"));
  EXPECT_EQ(named_algebra("aff_R", {}), parse_salamon("(0,21)"));

  const Error n61 = thrown(
      [] { named_algebra("N_{6,1}", {{"alpha", Scalar(-1, 2)}, {"beta", Scalar(-1, 2)}, {"gamma", 0}, {"delta", 0}}); });
  EXPECT_EQ(n61.code(), ErrorCode::ConstraintViolated);
  EXPECT_NE(std::string(n61.what()).find("(gamma,delta) != (0,0)"), std::string::npos);

  EXPECT_EQ(thrown([] { named_algebra("r_{4,mu,lambda}", {{"mu", 1}, {"lambda", 2}}); }).code(),
            ErrorCode::ConstraintViolated);
  EXPECT_EQ(thrown([] { named_algebra("r'_{3,lambda}", {{"lambda", -1}}); }).code(), ErrorCode::ConstraintViolated);
  EXPECT_EQ(thrown([] { named_algebra("g_{5,17}", {{"alpha", 0}, {"beta", 0}, {"gamma", 0}}); }).code(),
            ErrorCode::ConstraintViolated);
  EXPECT_EQ(thrown([] { named_algebra("g_{6,11}", {{"alpha", 0}, {"beta", 0}, {"gamma", 0}, {"delta", 1}}); }).code(),
            ErrorCode::ConstraintViolated);
  EXPECT_EQ(thrown([] { named_algebra("N_{6,14}", {{"alpha", 0}, {"beta", 1}, {"gamma", 0}}); }).code(),
            ErrorCode::ConstraintViolated);
  EXPECT_EQ(thrown([] { named_algebra("r'_{4,mu,lambda}", {{"mu", 0}, {"lambda", 1}}); }).code(),
            ErrorCode::ConstraintViolated);
  EXPECT_EQ(thrown([] { named_algebra("r_{4,mu,lambda}", {{"mu", 1}}); }).code(), ErrorCode::UnboundParameter);
  EXPECT_EQ(thrown([] { named_algebra("nonexistent", {}); }).code(), ErrorCode::UnknownName);

  // valid rows parse
  EXPECT_NO_THROW(named_algebra("r_{4,mu,lambda}", {{"mu", 1}, {"lambda", Scalar(1, 2)}}));
  EXPECT_NO_THROW(named_algebra("g_{5,17}", {{"alpha", 0}, {"beta", 0}, {"gamma", 1}}));
  EXPECT_NO_THROW(named_algebra("N_{6,1}", {{"alpha", 1}, {"beta", 1}, {"gamma", 1}, {"delta", 0}}));
}

TEST(Catalog, ExpectedVerdictsReproduce) {
  for (const auto& e : witness_lists()) {
    ASSERT_TRUE(e.j.has_value()) << e.name;
    EXPECT_TRUE(validate_complex_structure(e.algebra, *e.j).integrable) << e.name;
    for (const auto& w : e.witnesses)
      EXPECT_EQ(classify_metric(e.algebra, w.metric, *e.j), w.expected) << e.name << " / " << w.label;
  }
}

TEST(Catalog, NamedEntries) {
  EXPECT_TRUE(catalog_entry("2r'_{3,0}").witnesses.front().expected.kahler);
  const auto& rank_one = catalog_entry("skt-codim2 rank one (lambda=1/2)");
  EXPECT_TRUE(classify_metric(rank_one.algebra, Metric::identity(6), *rank_one.j).skt);
  const auto& ex = catalog_entry("aff_R + h3 + R (pure type I)");
  for (const auto& w : ex.witnesses) EXPECT_FALSE(w.expected.kahler);
  EXPECT_EQ(thrown([] { catalog_entry("missing"); }).code(), ErrorCode::UnknownName);
}
