// hermlie command-line front end. Exit codes: 0 pass, 1 checked and false, 2 invalid input.

#include "hermlie/acceptance.hpp"
#include "hermlie/catalog.hpp"
#include "hermlie/error.hpp"
#include "hermlie/generators.hpp"
#include "hermlie/io.hpp"
#include "hermlie/metric_search.hpp"
#include "hermlie/salamon.hpp"
#include "hermlie/shear.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

using namespace hermlie;

namespace {

constexpr int kPass = 0, kFalse = 1, kInvalid = 2;

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

Json report(Json body) {
  body["schema"] = kSchemaVersion;
  return body;
}

Json residuals_json(const MetricForms& f) {
  return {{"d_sigma", f.d_sigma.to_string()},
          {"d_sigma_power", f.d_sigma_power.to_string()},
          {"d_j_d_sigma", f.d_j_d_sigma.to_string()}};
}

std::vector<ConditionKind> kinds_for(const std::string& name) {
  if (name == "all") return {ConditionKind::Kahler, ConditionKind::Balanced, ConditionKind::Skt};
  if (name == "kahler") return {ConditionKind::Kahler};
  if (name == "balanced") return {ConditionKind::Balanced};
  return {ConditionKind::Skt};
}

bool verdict_of(const Verdicts& v, ConditionKind k) {
  return k == ConditionKind::Kahler ? v.kahler : k == ConditionKind::Balanced ? v.balanced : v.skt;
}

/// "0,3,10-12" -> {0, 3, 10, 11, 12}.
std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      const auto dash = item.find('-');
      if (dash == std::string::npos) {
        out.push_back(std::stoull(item));
      } else {
        const auto lo = std::stoull(item.substr(0, dash)), hi = std::stoull(item.substr(dash + 1));
        if (hi < lo) throw std::invalid_argument("range");
        for (auto s = lo; s <= hi; ++s) out.push_back(s);
      }
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidInput, "HERMLIE_SEEDS: cannot parse '" + item + "'");
    }
  }
  if (out.empty()) throw Error(ErrorCode::InvalidInput, "HERMLIE_SEEDS is empty");
  return out;
}

SearchConfig config_from_json(const Json& doc) {
  SearchConfig c;
  try {
    if (doc.contains("seeds")) c.seeds = doc.at("seeds").get<std::vector<std::uint64_t>>();
    if (doc.contains("max_iterations")) c.max_iterations = doc.at("max_iterations").get<int>();
    if (doc.contains("tolerance")) c.tolerance = doc.at("tolerance").get<double>();
    if (doc.contains("barrier_start")) c.barrier_start = doc.at("barrier_start").get<double>();
    if (doc.contains("barrier_decay")) c.barrier_decay = doc.at("barrier_decay").get<double>();
    if (doc.contains("barrier_period")) c.barrier_period = doc.at("barrier_period").get<int>();
    if (doc.contains("barrier_floor")) c.barrier_floor = doc.at("barrier_floor").get<double>();
    if (doc.contains("fd_step")) c.fd_step = doc.at("fd_step").get<double>();
    if (doc.contains("eigenvalue_floor")) c.eigenvalue_floor = doc.at("eigenvalue_floor").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("search config: ") + e.what());
  }
  return c;
}

int cmd_describe(const std::string& path) {
  const LieAlgebra lie = algebra_from_json(read_json_file(path));
  emit(report({{"algebra", algebra_json(lie)},
               {"fingerprint", fingerprint_json(structure_invariants(lie))},
               {"two_step_solvable", is_two_step_solvable(lie)},
               {"unimodular", is_unimodular(lie)},
               {"derived_dim", image_of_bracket(lie).dim()},
               {"salamon", render_salamon(lie)}}));
  return kPass;
}

int cmd_check(const std::string& algebra_path, const std::string& structure_path, const std::string& condition,
              bool allow_nonintegrable) {
  const LieAlgebra lie = algebra_from_json(read_json_file(algebra_path));
  const StructureDocument s = structure_from_json(read_json_file(structure_path), lie.dim());
  if (!s.metric) throw Error(ErrorCode::InvalidInput, "the structure document needs a \"metric\"");
  const ComplexStructure j = s.j ? *s.j : ComplexStructure::standard(lie.dim());
  ClassifyOptions opts;
  opts.allow_nonintegrable = allow_nonintegrable;
  const MetricForms forms = metric_forms(lie, *s.metric, j, opts);
  const Verdicts v = classify_metric(lie, *s.metric, j, opts);
  Json out{{"verdicts", verdicts_json(v)},
           {"residuals", residuals_json(forms)},
           {"condition", condition},
           {"citations",
            {"Kaehler: d sigma = 0", "balanced: d(sigma^{n-1}) = 0", "SKT: d(J^* d sigma) = 0"}}};
  if (is_two_step_solvable(lie) && validate_complex_structure(lie, j).integrable)
    out["decomposition"] = decomposition_json(hermitian_decomposition(lie, *s.metric, j));
  else
    out["decomposition"] = nullptr;
  emit(report(out));
  for (ConditionKind k : kinds_for(condition))
    if (!verdict_of(v, k)) return kFalse;
  return kPass;
}

int cmd_shear(const std::string& path, std::optional<std::uint64_t> random_seed, const std::string& profile,
              std::size_t dim, const std::string& kind, bool cross_check) {
  std::optional<ShearDocument> doc;
  if (random_seed) {
    GeneratedShear gen = random_complex_shear(*random_seed, parse_profile(profile), dim);
    doc = ShearDocument{gen.data, gen.j, gen.metric};
  } else {
    if (path.empty()) throw Error(ErrorCode::InvalidInput, "give a shear data file or --random SEED");
    doc = shear_from_json(read_json_file(path));
  }
  const PreShearData& data = doc->data;
  const ComplexStructure* j = &doc->j;
  const Metric* g = &doc->metric;
  Json out{{"input", shear_json(data, *j, *g)}};
  if (kind == "build") {
    out["algebra"] = algebra_json(build_shear(data));
    emit(report(out));
    return kPass;
  }
  const ComplexShearCheck lemma = check_complex_shear(data, *j);
  out["complex_shear"] = {{"jacobi", lemma.jacobi_ok}, {"integrable", lemma.integrable_ok}};
  if (!lemma.jacobi_ok || !lemma.integrable_ok) {
    std::cerr << "hermlie: the data is not complex shear data\n";
    emit(report(out));
    return kInvalid;
  }
  const std::vector<ConditionKind> kinds = kinds_for(kind);
  Json verdicts = Json::object();
  bool all = true;
  for (ConditionKind k : kinds) {
    const bool v = shear_condition(data, *g, *j, k);
    verdicts[condition_name(k)] = v;
    all = all && v;
  }
  out["verdicts"] = verdicts;
  bool agreement = true;
  if (cross_check) {
    const LieAlgebra lie = build_shear(data);
    const Verdicts direct = classify_metric(lie, *g, *j);
    for (ConditionKind k : kinds) agreement = agreement && verdict_of(direct, k) == verdicts[condition_name(k)];
    out["agreement"] = agreement;
    out["direct"] = verdicts_json(direct);
  }
  emit(report(out));
  return agreement && all ? kPass : kFalse;
}

int cmd_search(const std::string& algebra_path, const std::string& structure_path, const std::string& target,
               const std::string& config_path) {
  const LieAlgebra lie = algebra_from_json(read_json_file(algebra_path));
  const StructureDocument s = structure_from_json(read_json_file(structure_path), lie.dim());
  const ComplexStructure j = s.j ? *s.j : ComplexStructure::standard(lie.dim());
  SearchConfig config = config_path.empty() ? SearchConfig{} : config_from_json(read_json_file(config_path));
  if (const char* env = std::getenv("HERMLIE_SEEDS")) config.seeds = parse_seed_list(env);
  const ConditionKind kind = kinds_for(target).front();
  const SearchResult r = search_metric(lie, j, kind, config);
  emit(report({{"target", condition_name(kind)}, {"result", search_result_json(r)}}));
  return r.status == SearchStatus::Found ? kPass : kFalse;
}

int cmd_catalog(const std::string& name) {
  Json doc = catalog_json();
  if (!name.empty()) {
    Json hits = Json::array();
    for (const auto& e : doc["entries"])
      if (e["name"] == name) hits.push_back(e);
    if (hits.empty()) throw Error(ErrorCode::UnknownName, "no catalog entry named '" + name + "'");
    doc["entries"] = hits;
    doc.erase("families");
  }
  emit(doc);
  return kPass;
}

int cmd_verify(bool json, const std::string& tamper, const std::vector<int>& only) {
  AcceptanceOptions opts;
  if (!tamper.empty()) {
    catalog_entry(tamper);  // unknown names are input errors
    opts.tamper_entry = tamper;
  }
  opts.only = only;
  const auto results = run_acceptance(opts);
  bool all = true;
  Json criteria = Json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    if (json) {
      criteria.push_back({{"id", r.id}, {"title", r.title}, {"citation", r.citation}, {"passed", r.passed},
                          {"detail", r.detail}, {"seconds", r.seconds}, {"time_limit", r.time_limit}});
    } else {
      std::cout << format_result(r) << "\n";
    }
  }
  if (json) emit(report({{"criteria", criteria}, {"passed", all}}));
  else std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
  return all ? kPass : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kaehler, balanced and SKT checks on two-step solvable Lie algebras"};
  app.require_subcommand(1);

  std::string algebra_path, structure_path, condition = "all", shear_path, profile = "mixed", kind = "all",
                                            target = "kahler", config_path, entry_name, tamper;
  bool allow_nonintegrable = false, cross_check = false, json = false;
  std::uint64_t seed = 0;
  std::size_t dim = 6;
  std::vector<int> only;

  auto* describe = app.add_subcommand("describe", "fingerprint and Salamon form of an algebra document");
  describe->add_option("algebra", algebra_path, "algebra JSON file")->required();

  auto* check = app.add_subcommand("check", "exact Kaehler/balanced/SKT verdicts for a metric");
  check->add_option("algebra", algebra_path, "algebra JSON file")->required();
  check->add_option("structure", structure_path, "J and metric JSON file")->required();
  check->add_option("--condition", condition)->check(CLI::IsMember({"all", "kahler", "balanced", "skt"}));
  check->add_flag("--allow-nonintegrable", allow_nonintegrable, "skip the integrability check");

  auto* shear = app.add_subcommand("shear", "evaluate the shear-data equations");
  shear->add_option("data", shear_path, "shear data JSON file");
  auto* random = shear->add_option("--random", seed, "generate data from this seed instead");
  shear->add_option("--profile", profile)
      ->check(CLI::IsMember({"nilpotent", "typeI", "typeII", "typeIII", "mixed"}));
  shear->add_option("--dim", dim, "dimension for --random");
  shear->add_option("--kind", kind)->check(CLI::IsMember({"all", "kahler", "balanced", "skt", "build"}));
  shear->add_flag("--cross-check", cross_check, "compare with the direct check on the built algebra");

  auto* search = app.add_subcommand("search", "numerical search for a compatible metric");
  search->add_option("algebra", algebra_path, "algebra JSON file")->required();
  search->add_option("structure", structure_path, "JSON file with \"J\"")->required();
  search->add_option("--target", target)->check(CLI::IsMember({"kahler", "balanced", "skt"}));
  search->add_option("--config", config_path, "search config JSON file");

  auto* catalog = app.add_subcommand("catalog", "export the catalog as JSON");
  catalog->add_option("--name", entry_name, "only this entry");

  auto* verify = app.add_subcommand("verify-paper", "run the reproduction criteria");
  verify->add_flag("--json", json, "machine-readable summary");
  verify->add_option("--tamper", tamper, "flip the expected Kaehler verdict of this catalog entry");
  verify->add_option("--only", only, "criterion ids to run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInvalid;
  }

  try {
    if (*describe) return cmd_describe(algebra_path);
    if (*check) return cmd_check(algebra_path, structure_path, condition, allow_nonintegrable);
    if (*shear)
      return cmd_shear(shear_path, *random ? std::optional<std::uint64_t>(seed) : std::nullopt, profile, dim, kind,
                       cross_check);
    if (*search) return cmd_search(algebra_path, structure_path, target, config_path);
    if (*catalog) return cmd_catalog(entry_name);
    if (*verify) return cmd_verify(json, tamper, only);
  } catch (const Error& e) {
    std::cerr << "hermlie: " << e.what();
    if (e.position()) std::cerr << " (at byte " << *e.position() << ")";
    std::cerr << "\n";
    return kInvalid;
  }
  return kInvalid;
}
