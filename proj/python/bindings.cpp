// JSON-in, JSON-out bindings; the Python package decodes the strings.

#include "hermlie/acceptance.hpp"
#include "hermlie/error.hpp"
#include "hermlie/io.hpp"
#include "hermlie/metric_search.hpp"
#include "hermlie/salamon.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hermlie;

namespace {

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

ConditionKind kind_of(const std::string& name) {
  if (name == "kahler") return ConditionKind::Kahler;
  if (name == "balanced") return ConditionKind::Balanced;
  if (name == "skt") return ConditionKind::Skt;
  throw Error(ErrorCode::InvalidInput, "unknown condition '" + name + "'");
}

std::string describe(const std::string& algebra) {
  const LieAlgebra lie = algebra_from_json(parse(algebra));
  return Json{{"schema", kSchemaVersion},
              {"salamon", render_salamon(lie)},
              {"fingerprint", fingerprint_json(structure_invariants(lie))},
              {"two_step_solvable", is_two_step_solvable(lie)},
              {"unimodular", is_unimodular(lie)},
              {"derived_dim", image_of_bracket(lie).dim()}}
      .dump();
}

std::string classify(const std::string& algebra, const std::string& structure) {
  const LieAlgebra lie = algebra_from_json(parse(algebra));
  const StructureDocument s = structure_from_json(parse(structure), lie.dim());
  if (!s.metric) throw Error(ErrorCode::InvalidInput, "the structure document needs a \"metric\"");
  const ComplexStructure j = s.j ? *s.j : ComplexStructure::standard(lie.dim());
  Json out{{"schema", kSchemaVersion}, {"verdicts", verdicts_json(classify_metric(lie, *s.metric, j))}};
  out["decomposition"] = is_two_step_solvable(lie)
                             ? decomposition_json(hermitian_decomposition(lie, *s.metric, j))
                             : Json(nullptr);
  return out.dump();
}

std::string shear(const std::string& data) {
  const ShearDocument doc = shear_from_json(parse(data));
  Json verdicts = Json::object();
  for (ConditionKind k : {ConditionKind::Kahler, ConditionKind::Balanced, ConditionKind::Skt})
    verdicts[condition_name(k)] = shear_condition(doc.data, doc.metric, doc.j, k);
  return Json{{"schema", kSchemaVersion}, {"verdicts", verdicts}, {"algebra", algebra_json(build_shear(doc.data))}}
      .dump();
}

std::string search(const std::string& algebra, const std::string& structure, const std::string& target,
                   const std::vector<std::uint64_t>& seeds) {
  const LieAlgebra lie = algebra_from_json(parse(algebra));
  const StructureDocument s = structure_from_json(parse(structure), lie.dim());
  const ComplexStructure j = s.j ? *s.j : ComplexStructure::standard(lie.dim());
  SearchConfig config;
  if (!seeds.empty()) config.seeds = seeds;
  return Json{{"schema", kSchemaVersion}, {"result", search_result_json(search_metric(lie, j, kind_of(target), config))}}
      .dump();
}

std::string salamon(const std::string& text, const std::map<std::string, std::string>& params) {
  Bindings b;
  for (const auto& [k, v] : params) b[k] = scalar_from_json(v);
  return render_salamon(parse_salamon(text, b));
}

std::string verify(const std::vector<int>& only) {
  AcceptanceOptions opts;
  opts.only = only;
  Json criteria = Json::array();
  for (const auto& r : run_acceptance(opts))
    criteria.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail},
                        {"seconds", r.seconds}});
  return criteria.dump();
}

}  // namespace

PYBIND11_MODULE(_hermlie, m) {
  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error(e.what());
    }
  });
  m.attr("SCHEMA") = kSchemaVersion;
  m.def("describe", &describe, py::arg("algebra"));
  m.def("classify", &classify, py::arg("algebra"), py::arg("structure"));
  m.def("shear", &shear, py::arg("data"));
  m.def("search", &search, py::arg("algebra"), py::arg("structure"), py::arg("target"),
        py::arg("seeds") = std::vector<std::uint64_t>{});
  m.def("salamon", &salamon, py::arg("text"), py::arg("params") = std::map<std::string, std::string>{});
  m.def("catalog", [] { return catalog_json().dump(); });
  m.def("verify", &verify, py::arg("only") = std::vector<int>{});
}
