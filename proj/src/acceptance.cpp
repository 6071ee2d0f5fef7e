#include "hermlie/acceptance.hpp"

#include "hermlie/catalog.hpp"
#include "hermlie/error.hpp"
#include "hermlie/generators.hpp"
#include "hermlie/metric_search.hpp"
#include "hermlie/normal_forms.hpp"
#include "hermlie/shear.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

namespace hermlie {

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

bool kind_verdict(const Verdicts& v, ConditionKind k) {
  switch (k) {
    case ConditionKind::Kahler: return v.kahler;
    case ConditionKind::Balanced: return v.balanced;
    case ConditionKind::Skt: return v.skt;
  }
  return false;
}

const ConditionKind kKinds[] = {ConditionKind::Kahler, ConditionKind::Balanced, ConditionKind::Skt};

/// Catalog expectations, with the optional tamper applied.
Verdicts expected(const CatalogEntry& e, std::size_t w, const AcceptanceOptions& opt) {
  Verdicts v = e.witnesses.at(w).expected;
  if (opt.tamper_entry && *opt.tamper_entry == e.name && w == 0) v.kahler = !v.kahler;
  return v;
}

std::string check_entry(const CatalogEntry& e, const AcceptanceOptions& opt) {
  for (std::size_t w = 0; w < e.witnesses.size(); ++w) {
    Verdicts got = classify_metric(e.algebra, e.witnesses[w].metric, *e.j);
    if (!(got == expected(e, w, opt)))
      return "entry '" + e.name + "' witness '" + e.witnesses[w].label + "' verdicts differ from the catalog";
  }
  return "";
}

Outcome example_aff_h3(const AcceptanceOptions& opt) {
  const CatalogEntry& e = catalog_entry("aff_R + h3 + R (pure type I)");
  if (auto bad = check_entry(e, opt); !bad.empty()) return {false, bad};
  const MetricForms tilde = metric_forms(e.algebra, e.witnesses[0].metric, *e.j);
  if (!(tilde.d_sigma == Scalar(-1) * KForm::basis(6, {3, 4, 6})))
    return {false, "d sigma~ = " + tilde.d_sigma.to_string() + ", expected -e^{346}"};
  if (!tilde.d_j_d_sigma.is_zero()) return {false, "d J^* d sigma~ != 0"};
  const MetricForms hat = metric_forms(e.algebra, e.witnesses[1].metric, *e.j);
  if (!hat.d_sigma_power.is_zero()) return {false, "d(sigma^^2) != 0"};
  const LieAlgebra aff = parse_salamon("(0,21)");
  for (int r = 1; r <= 3; ++r) {
    LieAlgebra other = aff;
    for (int k = 1; k < r; ++k) other = direct_sum(aff, other);
    if (r < 3) other = direct_sum(other, abelian_algebra(static_cast<std::size_t>(6 - 2 * r)));
    if (!fingerprint_distinguish(e.algebra, other).distinct)
      return {false, "fingerprints do not separate the algebra from " + std::to_string(r) + " aff_R + R^" +
                         std::to_string(6 - 2 * r)};
  }
  return {true, "d sigma~ = -e^{346}, d J^* d sigma~ = 0, d(sigma^^2) = 0, distinct from r aff_R + R^{6-2r}, r=1..3"};
}

Outcome example_n61(const AcceptanceOptions& opt) {
  const CatalogEntry& e = catalog_entry("N_{6,1}^{-1/2,-1/2,0,0} presentation (pure type III)");
  if (auto bad = check_entry(e, opt); !bad.empty()) return {false, bad};
  if (!validate_complex_structure(e.algebra, *e.j).integrable) return {false, "J is not integrable"};
  const Metric& tilde = e.witnesses[0].metric;
  const Metric& hat = e.witnesses[1].metric;
  Verdicts vt = classify_metric(e.algebra, tilde, *e.j), vh = classify_metric(e.algebra, hat, *e.j);
  if (!vt.skt || !vh.balanced || vt.kahler || vh.kahler) return {false, "verdicts differ"};
  const KForm expected_hat = KForm::basis(6, {1, 2}) + KForm::basis(6, {3, 5}) + Scalar(2) * KForm::basis(6, {4, 6}) -
                             KForm::basis(6, {3, 6}) - KForm::basis(6, {4, 5});
  if (!(fundamental_form(hat, *e.j) == expected_hat)) return {false, "sigma^ differs"};
  HermitianDecomposition d = hermitian_decomposition(e.algebra, tilde, *e.j);
  if (d.pure_type != PureType::III) return {false, "pure type is " + pure_type_name(d.pure_type)};
  return {true, "g~ SKT, g^ balanced, neither Kaehler, pure type III"};
}

Outcome shear_oracle() {
  int cases = 0, mismatches = 0;
  std::string first;
  const ShearProfile profiles[] = {ShearProfile::Nilpotent, ShearProfile::TypeI, ShearProfile::TypeII,
                                   ShearProfile::TypeIII, ShearProfile::Mixed};
  for (std::size_t dim : {4, 6})
    for (ShearProfile p : profiles)
      for (std::uint64_t seed = 0; seed < 50; ++seed) {
        GeneratedShear gen = random_complex_shear(seed, p, dim);
        Rng rng(seed * 7919 + dim);
        const Metric g = seed % 2 == 0 ? gen.metric : random_compatible_metric(rng, gen.j);
        const LieAlgebra lie = build_shear(gen.data);
        const Verdicts v = classify_metric(lie, g, gen.j);
        ++cases;
        for (ConditionKind k : kKinds)
          if (shear_condition(gen.data, g, gen.j, k) != kind_verdict(v, k)) {
            ++mismatches;
            if (first.empty())
              first = profile_name(p) + " dim " + std::to_string(dim) + " seed " + std::to_string(seed) + " " +
                      condition_name(k);
          }
      }
  std::string detail = std::to_string(cases) + " data sets x 3 conditions, " + std::to_string(mismatches) + " mismatches";
  if (!first.empty()) detail += " (first: " + first + ")";
  return {mismatches == 0 && cases >= 500, detail};
}

Outcome structural_balanced() {
  int cases = 0, balanced = 0, mismatches = 0, basis_changes = 0;
  const ShearProfile profiles[] = {ShearProfile::Nilpotent, ShearProfile::TypeI, ShearProfile::TypeII,
                                   ShearProfile::TypeIII, ShearProfile::Mixed};
  for (std::uint64_t i = 0; i < 200; ++i) {
    GeneratedShear gen = random_complex_shear(1000 + i, profiles[i % 5], i % 2 == 0 ? 6 : 4);
    Rng rng(i);
    const Metric g = i % 3 == 0 ? random_compatible_metric(rng, gen.j) : gen.metric;
    const LieAlgebra lie = build_shear(gen.data);
    const bool direct = classify_metric(lie, g, gen.j).balanced;
    const bool structural = balanced_structural(lie, g, gen.j).balanced;
    const bool remixed = balanced_structural(lie, g, gen.j, 77 + i).balanced;
    ++cases;
    balanced += direct;
    if (structural != direct) ++mismatches;
    if (remixed != structural) ++basis_changes;
  }
  return {mismatches == 0 && basis_changes == 0 && balanced > 0 && balanced < cases,
          std::to_string(cases) + " instances (" + std::to_string(balanced) + " balanced), " +
              std::to_string(mismatches) + " mismatches, " + std::to_string(basis_changes) +
              " verdict changes under another unitary basis"};
}

Outcome kahler_normal_forms() {
  int built = 0, bad_kahler = 0, drops = 0, drop_failures = 0;
  Rng rng(2024);
  for (KahlerType type : {KahlerType::I, KahlerType::II, KahlerType::III})
    for (int draw = 0; draw < 100; ++draw) {
      int s = 0, r = 0, ell = 0;
      const int n = type == KahlerType::I ? rng.integer(1, 3) : rng.integer(2, 3);
      if (type == KahlerType::I) {
        r = rng.integer(1, n);
        ell = n - r;
      } else if (type == KahlerType::II) {
        s = rng.integer(1, n - 1);
        ell = n - s;
      } else {
        s = rng.integer(1, n - 1);
        r = n - s;
      }
      KahlerNormalForm p = random_kahler_params(rng, type, s, r, ell);
      HermitianAlgebra h = kahler_normal_form(p);
      ++built;
      if (!metric_forms(h.lie, h.metric, h.j).d_sigma.is_zero()) ++bad_kahler;
      // drop one nonvanishing parameter
      KahlerNormalForm q = p;
      if (type == KahlerType::II) {
        q.beta[rng.integer(0, s - 1)] = zero_vector(2 * ell);
      } else if (type == KahlerType::I || rng.coin()) {
        q.lambda[rng.integer(0, r - 1)] = 0;
      } else {
        q.alpha[rng.integer(0, s - 1)] = zero_vector(r);
      }
      ++drops;
      bool rejected = false;
      try {
        kahler_normal_form(q);
      } catch (const Error& e) {
        rejected = e.code() == ErrorCode::ParameterConstraintViolated;
      }
      const std::size_t expected_derived = static_cast<std::size_t>(2 * s + r);
      const bool shrinks = image_of_bracket(kahler_normal_form_unchecked(q).lie).dim() < expected_derived;
      if (!rejected || !shrinks) ++drop_failures;
    }
  return {bad_kahler == 0 && drop_failures == 0,
          std::to_string(built) + " outputs with d sigma = 0 (" + std::to_string(bad_kahler) + " failures); " +
              std::to_string(drops) + " dropped constraints, " + std::to_string(drop_failures) +
              " not rejected or with unchanged g'"};
}

Outcome typeII_iff() {
  int outputs = 0, not_skt = 0, violations = 0, violation_skt = 0, split_failures = 0;
  Rng rng(4242);
  auto normalize_check = [&](const HermitianAlgebra& h) {
    NormalizedSkt ns = normalize_skt_typeII(h.lie, h.j, h.metric);
    if (!orthogonal_splitting_holds(h.lie, ns.metric, ns.complement) || !classify_metric(h.lie, ns.metric, h.j).skt)
      ++split_failures;
  };
  // phi/psi data: the quartic constraint is active
  const int shapes[3][3] = {{1, 2, 0}, {2, 2, 1}, {2, 2, 0}};
  for (int draw = 0; draw < 100; ++draw) {
    const auto& sh = shapes[draw % 3];
    TypeIINormalForm p = random_typeII_params(rng, sh[0], sh[1], sh[2]);
    HermitianAlgebra h = skt_typeII_normal_form(p);
    ++outputs;
    if (!classify_metric(h.lie, h.metric, h.j).skt) ++not_skt;
    normalize_check(h);
    TypeIINormalForm bad = p;
    bad.phi.back().re += rng.nonzero_rational() * KForm::basis(static_cast<std::size_t>(2 * p.ell), {1, 2});
    if (typeII_quartic_constraint(bad).is_zero()) continue;
    ++violations;
    HermitianAlgebra hb = skt_typeII_normal_form_unchecked(bad);
    if (hb.lie.validated() && validate_complex_structure(hb.lie, hb.j).integrable &&
        classify_metric(hb.lie, hb.metric, hb.j).skt)
      ++violation_skt;
  }
  // alpha/z data: normalization is non-trivial when some z_j != 0
  const int zshapes[3][2] = {{2, 1}, {1, 2}, {1, 1}};
  for (int draw = 0; draw < 100; ++draw) {
    const auto& sh = zshapes[draw % 3];
    TypeIINormalForm p = random_typeII_params(rng, sh[0], sh[1], sh[0]);
    p.z[0] = {rng.nonzero_rational(), rng.rational()};
    HermitianAlgebra h = skt_typeII_normal_form(p);
    ++outputs;
    if (!classify_metric(h.lie, h.metric, h.j).skt) ++not_skt;
    normalize_check(h);
  }
  return {not_skt == 0 && violations >= 100 && violation_skt == 0 && split_failures == 0,
          std::to_string(outputs) + " outputs (" + std::to_string(not_skt) + " not SKT); " +
              std::to_string(violations) + " constraint violations (" + std::to_string(violation_skt) +
              " still SKT); " + std::to_string(split_failures) + " normalization failures"};
}

Outcome six_dim_lists(const AcceptanceOptions& opt) {
  int skt = 0, kahler = 0;
  for (const auto& e : witness_lists()) {
    if (auto bad = check_entry(e, opt); !bad.empty()) return {false, bad};
    const Verdicts v = classify_metric(e.algebra, e.witnesses[0].metric, *e.j);
    if (e.name.rfind("skt-codim2", 0) == 0) {
      if (!v.skt) return {false, "entry '" + e.name + "' is not SKT"};
      ++skt;
    } else if (e.citation.find("Kaehler structure") != std::string::npos) {
      if (!v.kahler) return {false, "entry '" + e.name + "' is not Kaehler"};
      ++kahler;
    }
  }
  return {skt > 0 && kahler > 0,
          std::to_string(skt) + " codimension-two SKT entries and " + std::to_string(kahler) +
              " Kaehler entries verified"};
}

Outcome compatibility_pipeline() {
  int runs = 0, kahler = 0;
  for (const std::string name : {"2r'_{3,0}", "g_{5,17}^{0,0,lambda} + R (lambda=1)"}) {
    const CatalogEntry& e = catalog_entry(name);
    const ComplexStructure& j = *e.j;
    const ResidualModel skt_model(e.algebra, j, ConditionKind::Skt);
    const auto kernel = nullspace(skt_model.exact_map());
    const auto& basis = skt_model.parameterization().basis;
    const Subspace derived = image_of_bracket(e.algebra);
    const Subspace outer = Subspace::coordinate(6, {4, 5});
    Rng rng(99);
    for (int trial = 0; trial < 5; ++trial) {
      // SKT: identity plus a small random element of the SKT kernel
      std::optional<Metric> g_skt;
      while (!g_skt) {
        Matrix s = Matrix::identity(6);
        for (const auto& k : kernel) {
          const Scalar c = rng.rational(2, 5) / 4;
          for (std::size_t i = 0; i < basis.size(); ++i) s = s + (c * k[i]) * basis[i];
        }
        if (is_positive_definite(s) && classify_metric(e.algebra, Metric(s), j).skt) g_skt = Metric(s);
      }
      // balanced: random blocks on g' and on the complement, kept only if verified
      std::optional<Metric> g_bal;
      for (int attempt = 0; attempt < 20 && !g_bal; ++attempt) {
        const Metric inner = random_compatible_metric(rng, j), out = random_compatible_metric(rng, j);
        Metric candidate = block_metric(derived, inner, outer, out);
        if (classify_metric(e.algebra, candidate, j).balanced) g_bal = candidate;
      }
      if (!g_bal) return {false, "no balanced metric drawn on '" + name + "'"};
      Metric g = kahler_from_skt_and_balanced_typeII(e.algebra, j, *g_skt, *g_bal);
      ++runs;
      if (metric_forms(e.algebra, g, j).d_sigma.is_zero()) ++kahler;
    }
  }
  return {kahler == runs,
          std::to_string(kahler) + "/" + std::to_string(runs) + " outputs Kaehler from random SKT and balanced inputs"};
}

Outcome metric_search_criterion() {
  std::ostringstream detail;
  bool ok = true;
  struct Target {
    std::string entry;
    ConditionKind kind;
  };
  for (const Target& t : {Target{"2r'_{3,0}", ConditionKind::Kahler},
                          Target{"aff_R + h3 + R (pure type I)", ConditionKind::Skt}}) {
    const CatalogEntry& e = catalog_entry(t.entry);
    const auto start = std::chrono::steady_clock::now();
    SearchResult r = search_metric(e.algebra, *e.j, t.kind);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = r.status == SearchStatus::Found && r.residual < 1e-9 && r.exact_verified && secs < 10.0;
    ok = ok && pass;
    char buf[200];
    std::snprintf(buf, sizeof buf, "%s on '%s': residual %.2e, seed %llu, %d iterations, exact %s, %.2f s; ",
                  condition_name(t.kind).c_str(), t.entry.c_str(), r.residual,
                  static_cast<unsigned long long>(r.seed), r.iterations, r.exact_verified ? "yes" : "no", secs);
    detail << buf;
  }
  return {ok, detail.str()};
}

Outcome skt_balanced_property() {
  int cases = 0, counterexamples = 0, both = 0, skt = 0, balanced = 0;
  const auto& entries = witness_lists();
  Rng rng(31337);
  for (int i = 0; i < 500; ++i) {
    const CatalogEntry& e = entries[static_cast<std::size_t>(i) % entries.size()];
    const Metric g = random_compatible_metric(rng, *e.j);
    const Verdicts v = classify_metric(e.algebra, g, *e.j);
    ++cases;
    skt += v.skt;
    balanced += v.balanced;
    if (v.skt && v.balanced) {
      ++both;
      if (!v.kahler) ++counterexamples;
    }
    if (v.kahler && !(v.skt && v.balanced)) ++counterexamples;
  }
  return {counterexamples == 0 && cases >= 500,
          std::to_string(cases) + " random metrics (" + std::to_string(skt) + " SKT, " + std::to_string(balanced) +
              " balanced, " + std::to_string(both) + " both), " + std::to_string(counterexamples) +
              " SKT-and-balanced metrics that are not Kaehler"};
}

struct Criterion {
  int id;
  std::string title;
  std::string citation;
  double time_limit;
  std::function<Outcome(const AcceptanceOptions&)> run;
};

std::vector<Criterion> criteria() {
  return {
      {1, "aff_R + h3 + R example", "SKT metric and balanced metric on a pure type I algebra without Kaehler metric", 1.0,
       example_aff_h3},
      {2, "N_{6,1}-type example", "SKT metric and balanced metric on a pure type III algebra without Kaehler metric", 1.0,
       example_n61},
      {3, "shear oracle equivalence", "SKT, balanced and Kaehler equations for complex shear data", 60.0,
       [](const AcceptanceOptions&) { return shear_oracle(); }},
      {4, "structural balanced criterion", "balanced iff C orthogonal to derg_J and trace condition on V_r", 30.0,
       [](const AcceptanceOptions&) { return structural_balanced(); }},
      {5, "Kaehler normal forms", "two-step solvable Kaehler brackets in a unitary basis, pure types I/II/III", 60.0,
       [](const AcceptanceOptions&) { return kahler_normal_forms(); }},
      {6, "type II SKT normal form", "SKT pure type II iff the phi/psi quartic constraint holds; orthogonal splitting",
       60.0, [](const AcceptanceOptions&) { return typeII_iff(); }},
      {7, "six-dimensional lists", "codimension-two SKT families and six-dimensional Kaehler classification", 10.0,
       six_dim_lists},
      {8, "SKT + balanced -> Kaehler pipeline", "Kaehler metric built from SKT and balanced metrics, pure type II",
       30.0, [](const AcceptanceOptions&) { return compatibility_pipeline(); }},
      {9, "metric search", "numerical witness search with exact rational verification", 20.0,
       [](const AcceptanceOptions&) { return metric_search_criterion(); }},
      {10, "SKT and balanced implies Kaehler", "no compatible metric is SKT and balanced without being Kaehler", 60.0,
       [](const AcceptanceOptions&) { return skt_balanced_property(); }},
  };
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), c.id) == options.only.end())
      continue;
    CriterionResult r{c.id, c.title, c.citation, false, "", 0, c.time_limit};
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = c.run(options);
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.seconds > r.time_limit) {
      r.passed = false;
      r.detail += " [time limit exceeded]";
    }
    out.push_back(r);
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char head[160];
  std::snprintf(head, sizeof head, "[%s] %2d %s (%.2f s / %.0f s): ", r.passed ? "PASS" : "FAIL", r.id,
                r.title.c_str(), r.seconds, r.time_limit);
  return head + r.detail;
}

}  // namespace hermlie
