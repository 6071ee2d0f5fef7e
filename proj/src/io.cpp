#include "hermlie/io.hpp"

#include "hermlie/error.hpp"

#include <fstream>

namespace hermlie {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

void check_schema(const Json& doc) {
  if (!doc.is_object()) invalid("document must be a JSON object");
  if (doc.contains("schema") && doc.at("schema") != kSchemaVersion)
    invalid("unsupported schema version " + doc.at("schema").dump());
}

std::size_t dim_of(const Json& doc) {
  if (!doc.contains("dim") || !doc.at("dim").is_number_integer() || doc.at("dim").get<long long>() <= 0)
    invalid("\"dim\" must be a positive integer");
  return doc.at("dim").get<std::size_t>();
}

}  // namespace

Json scalar_json(const Scalar& x) { return to_string(x); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long long>());
  if (!j.is_string()) invalid("rationals must be \"p/q\" strings, got " + j.dump());
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const Error& e) {
    invalid(e.what());
  }
}

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(scalar_json(x));
  return out;
}

Vector vector_from_json(const Json& j, std::size_t size) {
  if (!j.is_array() || j.size() != size) invalid("expected an array of " + std::to_string(size) + " rationals");
  Vector v;
  for (const auto& x : j) v.push_back(scalar_from_json(x));
  return v;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
  return out;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    invalid("expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    Vector row = vector_from_json(j.at(r), cols);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

LieAlgebra algebra_from_json(const Json& doc) {
  check_schema(doc);
  const std::size_t dim = dim_of(doc);
  const bool has_salamon = doc.contains("salamon"), has_constants = doc.contains("constants");
  if (has_salamon == has_constants) invalid("exactly one of \"salamon\" and \"constants\" is required");
  if (has_salamon) {
    Bindings params;
    if (doc.contains("params")) {
      if (!doc.at("params").is_object()) invalid("\"params\" must be an object");
      for (const auto& [k, v] : doc.at("params").items()) params[k] = scalar_from_json(v);
    }
    if (!doc.at("salamon").is_string()) invalid("\"salamon\" must be a string");
    LieAlgebra lie = parse_salamon(doc.at("salamon").get<std::string>(), params);
    if (lie.dim() != dim) invalid("\"dim\" does not match the number of differentials");
    return lie;
  }
  if (!doc.at("constants").is_array()) invalid("\"constants\" must be an array");
  std::vector<StructureConstant> cs;
  for (const auto& e : doc.at("constants")) {
    if (!e.is_array() || e.size() != 4 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
        !e[2].is_number_integer())
      invalid("each constant is [i, j, k, \"p/q\"]");
    cs.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), scalar_from_json(e[3])});
  }
  return make_lie_algebra(dim, cs);
}

Json algebra_json(const LieAlgebra& lie) {
  Json out{{"schema", kSchemaVersion}, {"dim", lie.dim()}};
  if (lie.dim() <= 9) {
    out["salamon"] = render_salamon(lie);
  } else {
    Json cs = Json::array();
    for (const auto& c : lie.constants()) cs.push_back({c.i, c.j, c.k, scalar_json(c.value)});
    out["constants"] = cs;
  }
  return out;
}

StructureDocument structure_from_json(const Json& doc, std::size_t dim) {
  check_schema(doc);
  StructureDocument out;
  if (doc.contains("J")) out.j = ComplexStructure(matrix_from_json(doc.at("J"), dim, dim));
  if (doc.contains("metric")) out.metric = Metric(matrix_from_json(doc.at("metric"), dim, dim));
  return out;
}

ShearDocument shear_from_json(const Json& doc) {
  check_schema(doc);
  const std::size_t dim = dim_of(doc);
  if (!doc.contains("omega") || !doc.at("omega").is_array()) invalid("\"omega\" must be an array");
  std::vector<std::tuple<std::size_t, std::size_t, Vector>> values;
  std::vector<Vector> image;
  for (const auto& e : doc.at("omega")) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer())
      invalid("each omega entry is [i, j, [values]]");
    const long long i = e[0].get<long long>(), k = e[1].get<long long>();
    if (i < 1 || k < 1 || i > static_cast<long long>(dim) || k > static_cast<long long>(dim) || i == k)
      invalid("omega indices must be distinct and in 1..dim");
    Vector v = vector_from_json(e[2], dim);
    values.emplace_back(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(k - 1), v);
    image.push_back(v);
  }
  Subspace a = Subspace::span(dim, image);
  if (doc.contains("a")) {
    if (!doc.at("a").is_array()) invalid("\"a\" must be an array of vectors");
    std::vector<Vector> basis;
    for (const auto& v : doc.at("a")) basis.push_back(vector_from_json(v, dim));
    a = Subspace::span(dim, basis);
    if (!a.contains(Subspace::span(dim, image))) invalid("omega takes values outside a");
  }
  VectorValuedTwoForm omega(dim, a);
  for (const auto& [i, k, v] : values) omega.set(i, k, add(omega.value(i, k), v));
  StructureDocument s = structure_from_json(doc, dim);
  ComplexStructure j = s.j ? *s.j : ComplexStructure::standard(dim);
  Metric g = s.metric ? *s.metric : Metric::identity(dim);
  return {{a, omega}, j, g};
}

Json shear_json(const PreShearData& data, const ComplexStructure& j, const Metric& g) {
  const std::size_t n = data.dim();
  Json a = Json::array(), omega = Json::array();
  for (const auto& v : data.a.basis()) a.push_back(vector_json(v));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q)
      if (!is_zero(data.omega.value(p, q))) omega.push_back({p + 1, q + 1, vector_json(data.omega.value(p, q))});
  return {{"schema", kSchemaVersion}, {"dim", n},           {"a", a},
          {"omega", omega},           {"J", matrix_json(j.matrix())}, {"metric", matrix_json(g.matrix())}};
}

Json fingerprint_json(const Fingerprint& f) {
  return {{"derived_series", f.derived_series},   {"lower_central_series", f.lower_central_series},
          {"center_dim", f.center_dim},           {"derived_center_dim", f.derived_center_dim},
          {"unimodular", f.unimodular},           {"nilpotent", f.nilpotent}};
}

Json verdicts_json(const Verdicts& v) {
  return {{"kahler", v.kahler}, {"balanced", v.balanced}, {"skt", v.skt}};
}

Json decomposition_json(const HermitianDecomposition& d) {
  return {{"s", d.s}, {"r", d.r}, {"l", d.ell}, {"pure_type", pure_type_name(d.pure_type)}};
}

Json search_result_json(const SearchResult& r) {
  Json out{{"status", r.status == SearchStatus::Found ? "found" : "not_found"},
           {"message", r.message},
           {"metric", r.metric},
           {"residual", r.residual},
           {"iterations", r.iterations},
           {"seed", r.seed},
           {"min_eigenvalue", r.min_eigenvalue},
           {"exact_verified", r.exact_verified}};
  out["exact_metric"] = r.exact_metric ? matrix_json(r.exact_metric->matrix()) : Json(nullptr);
  return out;
}

Json catalog_json() {
  Json families = Json::array();
  for (const auto& f : named_families())
    families.push_back({{"name", f.name},
                        {"aliases", f.aliases},
                        {"dim", f.dim},
                        {"differentials", f.differentials},
                        {"parameters", f.parameters},
                        {"constraint", f.constraint}});
  Json entries = Json::array();
  for (const auto& e : witness_lists()) {
    Json witnesses = Json::array();
    for (const auto& w : e.witnesses)
      witnesses.push_back({{"label", w.label}, {"metric", matrix_json(w.metric.matrix())},
                           {"expected", verdicts_json(w.expected)}});
    entries.push_back({{"name", e.name},
                       {"salamon", e.salamon},
                       {"J", e.j ? matrix_json(e.j->matrix()) : Json(nullptr)},
                       {"witnesses", witnesses},
                       {"citation", e.citation},
                       {"notes", e.notes}});
  }
  return {{"schema", kSchemaVersion}, {"families", families}, {"entries", entries}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) invalid("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    invalid("malformed JSON in '" + path + "': " + e.what());
  }
}

}  // namespace hermlie
