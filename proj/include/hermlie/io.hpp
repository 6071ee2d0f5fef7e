#pragma once

#include "hermlie/catalog.hpp"
#include "hermlie/hermitian.hpp"
#include "hermlie/metric_search.hpp"
#include "hermlie/shear.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

namespace hermlie {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Rationals travel as "p/q" strings; integers are also accepted on input.
Json scalar_json(const Scalar& x);
Scalar scalar_from_json(const Json& j);

Json vector_json(const Vector& v);
Vector vector_from_json(const Json& j, std::size_t size);
Json matrix_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);

/// {"dim", "salamon" | "constants", "params"}; exactly one of salamon/constants.
LieAlgebra algebra_from_json(const Json& doc);
Json algebra_json(const LieAlgebra& lie);

/// {"J": [[..]], "metric": [[..]]}; either key may be absent.
struct StructureDocument {
  std::optional<ComplexStructure> j;
  std::optional<Metric> metric;
};
StructureDocument structure_from_json(const Json& doc, std::size_t dim);

/// {"dim", "a": [[..]] (optional, defaults to the span of the values),
///  "omega": [[i, j, [..]], ..] with 1-based i < j, "J", "metric"}.
struct ShearDocument {
  PreShearData data;
  ComplexStructure j;
  Metric metric;
};
ShearDocument shear_from_json(const Json& doc);
Json shear_json(const PreShearData& data, const ComplexStructure& j, const Metric& g);

Json fingerprint_json(const Fingerprint& f);
Json verdicts_json(const Verdicts& v);
Json decomposition_json(const HermitianDecomposition& d);
Json search_result_json(const SearchResult& r);
Json catalog_json();

/// Parses a file; throws InvalidInput with the parser message on failure.
Json read_json_file(const std::string& path);

}  // namespace hermlie
