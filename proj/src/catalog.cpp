#include "hermlie/catalog.hpp"

#include "hermlie/error.hpp"

#include <algorithm>
#include <cctype>

namespace hermlie {

namespace {

std::string name_key(const std::string& name) {
  std::string ascii = ascii_transliterate(name), key;
  for (char c : ascii)
    if (c != '{' && c != '}' && c != '_' && c != '^' && !std::isspace(static_cast<unsigned char>(c))) key += c;
  return key;
}

void require(bool ok, const std::string& inequality) {
  if (!ok) throw Error(ErrorCode::ConstraintViolated, "constraint " + inequality + " fails");
}

Scalar param(const Bindings& b, const std::string& name) {
  auto it = b.find(name);
  if (it == b.end()) throw Error(ErrorCode::UnboundParameter, "parameter '" + name + "' has no value");
  return it->second;
}

void check_constraints(const std::string& family, const Bindings& b) {
  if (family == "r'_{3,lambda}") {
    require(param(b, "lambda") >= 0, "lambda >= 0");
  } else if (family == "r_{4,mu,lambda}") {
    Scalar mu = abs_value(param(b, "mu")), la = abs_value(param(b, "lambda"));
    require(0 < la, "0 < |lambda|");
    require(la <= mu, "|lambda| <= |mu|");
    require(mu <= 1, "|mu| <= 1");
  } else if (family == "r'_{4,mu,lambda}") {
    require(param(b, "mu") > 0, "mu > 0");
  } else if (family == "g_{5,17}^{alpha,beta,gamma}") {
    require(param(b, "alpha") >= 0, "alpha >= 0");
    require(param(b, "gamma") != 0, "gamma != 0");
  } else if (family == "g_{6,11}^{alpha,beta,gamma,delta}") {
    require(param(b, "alpha") * param(b, "delta") != 0, "alpha*delta != 0");
  } else if (family == "N_{6,1}^{alpha,beta,gamma,delta}") {
    require(param(b, "alpha") * param(b, "beta") != 0, "alpha*beta != 0");
    require(param(b, "gamma") != 0 || param(b, "delta") != 0, "(gamma,delta) != (0,0)");
  } else if (family == "N_{6,14}^{alpha,beta,gamma}") {
    require(param(b, "alpha") * param(b, "beta") != 0, "alpha*beta != 0");
  }
}

Verdicts verdicts(bool kahler, bool balanced, bool skt) { return {kahler, balanced, skt}; }

Vector vec(std::initializer_list<int> xs) {
  Vector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

CatalogEntry kahler_entry(const std::string& name, const std::string& salamon, const Bindings& b,
                          const ComplexStructure& j, const std::string& citation, const std::string& notes) {
  LieAlgebra lie = parse_salamon(salamon, b);
  std::string rendered = render_salamon(lie);
  return {name,      rendered, lie, j, {{"identity metric", Metric::identity(6), verdicts(true, true, true)}},
          citation, notes};
}

std::vector<CatalogEntry> build_witness_lists() {
  const ComplexStructure std6 = ComplexStructure::standard(6);
  const ComplexStructure paired_35_46 = ComplexStructure::from_pairs(6, {{1, 2}, {3, 5}, {4, 6}});
  const std::string kahler_cite = "six-dimensional two-step solvable algebras admitting a Kaehler structure";
  std::vector<CatalogEntry> out;

  // Kaehler families, each in a normal form where the standard metric is Kaehler
  out.push_back(kahler_entry("N_{6,14}^{alpha,beta,0} (a1=1, a2=2, c=1)", "(-25-c.26,15+c.16,a1.35,a2.46,0,0)",
                             {{"a1", 1}, {"a2", 2}, {"c", 1}}, paired_35_46, kahler_cite,
                             "pure type III normal form with dim derg_J = 2"));
  out.push_back(kahler_entry("g_{6,11}^{alpha,0,0,delta} (a=1, c=1)", "(-26,16,-c.46,c.36,a.56,0)",
                             {{"a", 1}, {"c", 1}}, std6, kahler_cite, "pure type III normal form with dim derg_J = 4"));
  for (const Scalar& la : {Scalar(1, 4), Scalar(1, 2), Scalar(1)})
    out.push_back(kahler_entry("g_{5,17}^{0,0,lambda} + R (lambda=" + to_string(la) + ")",
                               "(-25,15,-lambda.45,lambda.35,0,0)", {{"lambda", la}}, std6, kahler_cite,
                               "pure type II normal form, rank-one parameters"));
  for (const Scalar& a : {Scalar(1, 2), Scalar(1), Scalar(2)})
    out.push_back(kahler_entry("r'_{4,a,0} + 2R (a=" + to_string(a) + ")", "(-24,14,a.34,0,0,0)", {{"a", a}}, std6,
                               kahler_cite, "non-pure Kaehler family, almost Abelian"));
  out.push_back(kahler_entry("2r'_{3,0}", "(-25,15,-46,36,0,0)", {}, std6, kahler_cite,
                             "pure type II normal form, rank-two parameters"));
  out.push_back(kahler_entry("r'_{3,0} + aff_R + R", "(-25,15,34,0,0,0)", {}, std6, kahler_cite,
                             "non-pure Kaehler algebra"));
  out.push_back(kahler_entry("r'_{3,0} + 3R", "(-23,13,0,0,0,0)", {}, std6, kahler_cite,
                             "pure type II normal form with dim derg = 2; the named presentation is (0,31,21)+3R"));
  out.push_back(kahler_entry("3aff_R", "(0,21,0,43,0,65)", {}, std6, kahler_cite, "pure type I"));
  out.push_back(kahler_entry("2aff_R + 2R", "(0,21,0,43,0,0)", {}, std6, kahler_cite, "pure type I"));
  out.push_back(kahler_entry("aff_R + 4R", "(0,21,0,0,0,0)", {}, std6, kahler_cite, "pure type I"));
  out.push_back(kahler_entry("6R", "(0,0,0,0,0,0)", {}, std6, kahler_cite, "Abelian"));

  // codimension-two SKT families of pure type II
  const std::string skt_cite = "SKT two-step solvable algebras of pure type II with derived algebra of codimension two";
  {
    LieAlgebra lie = parse_salamon("(25,-15,46,-36,0,0)");
    out.push_back({"skt-codim2 rank two", render_salamon(lie), lie, std6,
                   {{"identity metric", Metric::identity(6), verdicts(true, true, true)}}, skt_cite,
                   "isomorphic to 2r'_{3,0}; the standard metric is SKT and in fact Kaehler"});
  }
  for (const Scalar& la : {Scalar(1, 4), Scalar(1, 2), Scalar(1)}) {
    LieAlgebra lie = parse_salamon("(25,-15,lambda.45,-lambda.35,0,0)", {{"lambda", la}});
    out.push_back({"skt-codim2 rank one (lambda=" + to_string(la) + ")", render_salamon(lie), lie, std6,
                   {{"identity metric", Metric::identity(6), verdicts(true, true, true)}}, skt_cite,
                   "isomorphic to g_{5,17}^{0,0,lambda} + R; the standard metric is SKT and in fact Kaehler"});
  }

  // SKT and balanced but not Kaehler
  {
    LieAlgebra lie = parse_salamon("(0,21,0,0,43,0)");
    Metric hat = Metric::from_orthonormal_basis({vec({1, 0, 0, 0, 0, -1}), vec({0, 1, 0, 0, 1, 0}),
                                                 vec({0, 0, 0, 0, 0, 1}), vec({0, 0, 0, 0, -1, 0}),
                                                 vec({0, 0, 1, 0, 0, 0}), vec({0, 0, 0, 1, 0, 0})});
    out.push_back({"aff_R + h3 + R (pure type I)", render_salamon(lie), lie, std6,
                   {{"g~ identity", Metric::identity(6), verdicts(false, false, true)},
                    {"g^ balanced", hat, verdicts(false, true, false)}},
                   "pure type I Hermitian algebra with SKT and balanced metrics but no Kaehler metric",
                   "no Kaehler metric: Kaehler pure type I algebras are k aff_R + R^{6-2k}, and the fingerprint "
                   "(g' meets the centre) distinguishes this algebra from all of them"});
  }
  {
    LieAlgebra lie = parse_salamon("(-15+16,-25+26,2.(35+46),2.(36+45),0,0)");
    Metric hat = Metric::from_orthonormal_basis({vec({1, 0, 0, 0, 0, 0}), vec({0, 1, 0, 0, 0, 0}),
                                                 vec({0, 0, 1, 0, 0, 0}), vec({0, 0, 0, 0, 1, 0}),
                                                 vec({0, 0, 1, 1, 0, 0}), vec({0, 0, 0, 0, 1, 1})});
    out.push_back({"N_{6,1}^{-1/2,-1/2,0,0} presentation (pure type III)", render_salamon(lie), lie, paired_35_46,
                   {{"g~ identity", Metric::identity(6), verdicts(false, false, true)},
                    {"g^ balanced", hat, verdicts(false, true, false)}},
                   "pure type III Hermitian algebra with SKT and balanced metrics but no Kaehler metric",
                   "entered by its differentials: the N_{6,1} constraint (gamma,delta) != (0,0) excludes the "
                   "parameters under which this algebra is usually named"});
  }
  return out;
}

}  // namespace

const std::vector<NamedFamily>& named_families() {
  static const std::vector<NamedFamily> families = {
      {"aff_R", {"aff", "affR"}, 2, "(0,21)", {}, ""},
      {"h_3", {"h3", "heisenberg"}, 3, "(0,0,21)", {}, ""},
      {"r'_{3,lambda}", {"r'_3"}, 3, "(0,lambda.21+31,-21+lambda.31)", {"lambda"}, "lambda >= 0"},
      {"r_{4,mu,lambda}", {"r_4"}, 4, "(0,21,mu.31,lambda.41)", {"mu", "lambda"}, "0 < |lambda| <= |mu| <= 1"},
      {"r'_{4,mu,lambda}", {"r'_4"}, 4, "(0,mu.21,lambda.31+41,-31+lambda.41)", {"mu", "lambda"}, "mu > 0"},
      {"g_{5,17}^{alpha,beta,gamma}", {"g_{5,17}"}, 5,
       "(0,alpha.21+31,-21+alpha.31,beta.41+gamma.51,-gamma.41+alpha.51)", {"alpha", "beta", "gamma"},
       "alpha >= 0, gamma != 0"},
      {"g_{6,11}^{alpha,beta,gamma,delta}", {"g_{6,11}"}, 6,
       "(0,alpha.21,beta.31+41,-31+beta.41,gamma.51+delta.61,-delta.51+gamma.61)",
       {"alpha", "beta", "gamma", "delta"}, "alpha*delta != 0"},
      {"N_{6,1}^{alpha,beta,gamma,delta}", {"N_{6,1}"}, 6, "(alpha.15+beta.16,gamma.25+delta.26,35,46,0,0)",
       {"alpha", "beta", "gamma", "delta"}, "alpha*beta != 0, (gamma,delta) != (0,0)"},
      {"N_{6,14}^{alpha,beta,gamma}", {"N_{6,14}"}, 6, "(alpha.15+beta.16,26,gamma.35-45,gamma.45+35,0,0)",
       {"alpha", "beta", "gamma"}, "alpha*beta != 0"},
  };
  return families;
}

LieAlgebra named_algebra(const std::string& name, const Bindings& params) {
  const std::string key = name_key(name);
  Bindings ascii;
  for (const auto& [k, v] : params) ascii[ascii_transliterate(k)] = v;
  for (const auto& f : named_families()) {
    bool match = name_key(f.name) == key;
    for (const auto& a : f.aliases) match = match || name_key(a) == key;
    if (!match) continue;
    check_constraints(f.name, ascii);
    return parse_salamon(f.differentials, ascii);
  }
  throw Error(ErrorCode::UnknownName, "unknown algebra name '" + name + "'");
}

const std::vector<CatalogEntry>& witness_lists() {
  static const std::vector<CatalogEntry> entries = build_witness_lists();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : witness_lists())
    if (e.name == name) return e;
  throw Error(ErrorCode::UnknownName, "no catalog entry named '" + name + "'");
}

}  // namespace hermlie
