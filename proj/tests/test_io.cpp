#include "hermlie/error.hpp"
#include "hermlie/generators.hpp"
#include "hermlie/io.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace hermlie;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no hermlie::Error thrown";
  return ErrorCode::IndexOutOfRange;
}

Json matrix2(const char* a, const char* b, const char* c, const char* d) {
  return Json::array({Json::array({a, b}), Json::array({c, d})});
}

}  // namespace

TEST(Json, Scalars) {
  EXPECT_EQ(scalar_json(Scalar(-3, 4)), "-3/4");
  EXPECT_EQ(scalar_from_json("5/10"), Scalar(1, 2));
  EXPECT_EQ(scalar_from_json(7), 7);
  EXPECT_EQ(code_of([] { scalar_from_json(0.5); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { scalar_from_json("1/0"); }), ErrorCode::InvalidInput);
}

TEST(Json, AlgebraDocuments) {
  const Json salamon = {{"schema", 1}, {"dim", 3}, {"salamon", "(0,0,a.21)"}, {"params", {{"a", "2"}}}};
  const LieAlgebra h = algebra_from_json(salamon);
  const Json constants = {{"schema", 1}, {"dim", 3}, {"constants", {{1, 2, 3, "2"}}}};
  EXPECT_EQ(algebra_from_json(constants), h);
  EXPECT_EQ(algebra_from_json(algebra_json(h)), h);

  EXPECT_EQ(code_of([] { algebra_from_json({{"dim", 3}}); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { algebra_from_json({{"dim", 2}, {"salamon", "(0,0,12)"}}); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { algebra_from_json({{"schema", 2}, {"dim", 2}, {"salamon", "(0,21)"}}); }),
            ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { algebra_from_json({{"dim", 4}, {"salamon", "(0,0,12,34)"}}); }), ErrorCode::JacobiFailed);
}

TEST(Json, StructureDocuments) {
  const Json doc = {{"J", matrix_json(ComplexStructure::standard(2).matrix())},
                    {"metric", matrix2("2", "0", "0", "2")}};
  const StructureDocument s = structure_from_json(doc, 2);
  EXPECT_EQ(*s.j, ComplexStructure::standard(2));
  EXPECT_EQ(s.metric->matrix()(0, 0), 2);
  EXPECT_EQ(code_of([] { structure_from_json({{"J", matrix2("1", "0", "0", "1")}}, 2); }),
            ErrorCode::NotAComplexStructure);
  EXPECT_EQ(code_of([] { structure_from_json({{"metric", {{"1", "0"}}}}, 2); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { structure_from_json({{"metric", matrix2("-1", "0", "0", "1")}}, 2); }),
            ErrorCode::NotPositiveDefinite);
}

TEST(Json, ShearRoundTrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const GeneratedShear gen = random_complex_shear(seed, static_cast<ShearProfile>(seed % 5));
    const ShearDocument doc = shear_from_json(shear_json(gen.data, gen.j, gen.metric));
    EXPECT_EQ(doc.data, gen.data);
    EXPECT_EQ(doc.j, gen.j);
    EXPECT_EQ(doc.metric, gen.metric);
  }
}

TEST(Json, DeterministicSerialization) {
  EXPECT_EQ(catalog_json().dump(), catalog_json().dump());
  EXPECT_EQ(catalog_json().at("schema"), kSchemaVersion);
}
