#include "dsga/suites.hpp"

#include <algorithm>
#include <set>

#include "dsga/algebras.hpp"
#include "dsga/ga_checks.hpp"
#include "dsga/geometry.hpp"
#include "dsga/operators.hpp"
#include "dsga/spinor.hpp"

namespace dsga {

namespace {

void append(std::vector<Check>& out, std::vector<Check> more) {
  for (auto& c : more) out.push_back(std::move(c));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> v{"ga", "algebras", "repr", "geometry", "operators", "limit"};
  return v;
}

const std::map<std::string, std::vector<std::string>>& manifest() {
  static const std::map<std::string, std::vector<std::string>> m{
      {"ga",
        {"ga.associativity", "ga.contraction_components", "ga.duality.roundtrip", "ga.duality.swap",
         "ga.duality.vector_inverse", "ga.errors", "ga.examples", "ga.exp.boost", "ga.exp.exact_series",
         "ga.exp.simple_unit", "ga.generator_relations", "ga.grade_decomposition", "ga.oracle.basis_pairs",
         "ga.oracle.dense_pairs", "ga.reversion", "ga.text_roundtrip"}},
      {"algebras",
        {"algebras.adjoint.double_cover", "algebras.adjoint.identity", "algebras.adjoint.isometry",
         "algebras.adjoint.rotation12", "algebras.bulk_pseudoscalar_central", "algebras.exp_so41.identity",
         "algebras.exp_so41.membership", "algebras.exp_so41.rotation12", "algebras.generators.Gamma",
         "algebras.generators.bulk", "algebras.generators.euclid3", "algebras.generators.minkowski",
         "algebras.idempotents", "algebras.lie.triple_agreement", "algebras.reciprocal_basis",
         "algebras.so41.commutator_examples", "algebras.so41.commutator_table",
         "algebras.so41.commutator_table_printed_sign", "algebras.spin.commutator_examples",
         "algebras.spin.commutator_table", "algebras.spin.commutator_table_printed_sign"}},
      {"repr",
        {"repr.column_examples", "repr.column_roundtrip", "repr.dictionary.bar", "repr.dictionary.conj",
         "repr.dictionary.dagger", "repr.dictionary.gamma", "repr.dictionary.i", "repr.dictionary.i_gamma5",
         "repr.dictionary.i_gamma5_printed_sign", "repr.frame_change_single", "repr.generalized.ideal",
         "repr.generalized.normalization_bracket", "repr.generalized.null_part", "repr.generalized.odd_part",
         "repr.generalized.phi_even", "repr.generalized.unit", "repr.rho.bulk_relations",
         "repr.rho.generators", "repr.rho.homomorphism", "repr.rho.injective", "repr.rho.unit",
         "repr.takabayasi.examples", "repr.takabayasi.roundtrip", "repr.takabayasi.singular"}},
      {"geometry",
        {"geometry.chart.conformal_metric", "geometry.chart.errors", "geometry.chart.exact",
         "geometry.chart.origin", "geometry.chart.pseudo_sphere", "geometry.chart.radius_scaling",
         "geometry.chart.roundtrip", "geometry.killing.bracket_table",
         "geometry.killing.bracket_table_printed_sign", "geometry.killing.equation",
         "geometry.killing.examples", "geometry.killing.tangency"}},
      {"operators",
        {"operators.ansatz.lambda_factor", "operators.ansatz.normalization_printed",
         "operators.ansatz.tangency", "operators.casimir2.examples", "operators.casimir2.three_way",
         "operators.casimir_chain", "operators.chart.bulk_agreement", "operators.chart.constant",
         "operators.chart.example_x1", "operators.chart.field_vs_pointwise", "operators.classical.examples",
         "operators.classical.identities", "operators.dhe.beta_counterexample_printed",
         "operators.dhe.current", "operators.dhe.current_is_vector", "operators.dhe.dirac_translation",
         "operators.dhe.idempotent_projection", "operators.dhe.phase_printed", "operators.dhess1.examples",
         "operators.dhess2.agreement", "operators.dhess2.agreement_printed", "operators.dhess2.inverse_derivative",
         "operators.dhess2.transport", "operators.dhess2.trivial_z", "operators.errors",
         "operators.factorization.constraint_to_fourth", "operators.factorization.fourth_order",
         "operators.factorization.spin_half", "operators.factorization.telescoping", "operators.lambda",
         "operators.momentum.commute", "operators.momentum.examples", "operators.so41.realization",
         "operators.so41.realization_printed", "operators.split.commutator_part", "operators.split.constant",
         "operators.split.contraction_components", "operators.split.literal", "operators.split.three_part",
         "operators.tangency.examples"}},
      {"limit", {"operators.limit.errors", "operators.limit.massless_constant", "operators.limit.sweep"}},
  };
  return m;
}

void RunConfig::validate() const {
  if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw ConfigError("unknown suite '" + suite + "'");
  if (!(ell > 0)) throw ConfigError("--ell must be > 0");
  if (!(m >= 0)) throw ConfigError("--m must be >= 0");
  std::set<std::string> known;
  for (const auto& [s, names] : manifest()) known.insert(names.begin(), names.end());
  for (const auto& [name, tol] : tolerances) {
    if (!known.count(name)) throw ConfigError("--tol names no check: '" + name + "'");
    if (!(tol >= 0)) throw ConfigError("--tol " + name + " must be >= 0");
  }
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["ell"] = ell;
  j["m"] = m;
  j["seed"] = seed;
  j["mode"] = mode == Mode::Exact ? "exact" : "float";
  j["tolerances"] = tolerances;
  return j;
}

void apply_tolerance(Check& c, double tol) {
  const bool explained = c.status == Status::Discrepancy;
  c.tolerance = tol;
  bool ok = c.max_residual <= tol;
  if (c.data.is_object() && c.data.contains("decreasing")) ok = ok && c.data["decreasing"].get<bool>();
  c.status = ok ? Status::Pass : explained ? Status::Discrepancy : Status::Fail;
}

std::vector<Check> run_suite(const std::string& suite, const RunConfig& cfg) {
  const uint64_t seed = cfg.seed;
  std::vector<Check> out;
  if (suite == "ga") {
    append(out, ga_checks(seed, cfg.mode == Mode::Exact));
  } else if (suite == "algebras") {
    append(out, gamma_matrices_check());
    append(out, spin_commutator_check());
    append(out, so41_commutator_check());
    append(out, algebra_property_checks(seed, 200));
    append(out, lie_triple_agreement());
  } else if (suite == "repr") {
    append(out, rho_checks(seed, 500));
    append(out, dictionary_check(seed, 1000));
    append(out, takabayasi_checks(seed, 500));
    append(out, generalized_spinor_checks(seed, 200));
  } else if (suite == "geometry") {
    append(out, killing_checks());
    append(out, chart_checks(seed, 10000));
    append(out, chart_examples());
  } else if (suite == "operators") {
    OperatorParams p{cfg.ell, cfg.m};
    append(out, operator_basic_checks(seed, 20));
    append(out, operator_realization_checks(seed, 50));
    append(out, split_checks(seed, 50));
    append(out, casimir_checks(seed, 500));
    append(out, factorization_checks(seed, 50, p, 1e-9));
    append(out, dhess2_checks(seed, 20, 20, p, 1e-11, 1e-9));
    append(out, chart_operator_checks(seed, 20));
    append(out, ansatz_checks());
    append(out, dhe_checks(seed, 50));
    append(out, classical_checks(seed, 500));
  } else if (suite == "limit") {
    append(out, limit_checks(seed, cfg.m, -0.8));
  } else {
    throw ConfigError("unknown suite '" + suite + "'");
  }
  for (auto& c : out) {
    auto it = cfg.tolerances.find(c.name);
    if (it != cfg.tolerances.end()) apply_tolerance(c, it->second);
  }
  return out;
}

Report run_suites(const RunConfig& cfg) {
  cfg.validate();
  Report r;
  r.config = cfg.to_json();
  for (const auto& s : suite_names())
    if (cfg.suite == "all" || cfg.suite == s) r.add_all(run_suite(s, cfg), s);
  return r;
}

}  // namespace dsga
