// Acceptance run: one line per criterion. A criterion whose literal statement
// fails in a verified, explained way while its corrected form passes prints
// "FAIL (known)" and does not affect the exit code.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "dsga/algebras.hpp"
#include "dsga/geometry.hpp"
#include "dsga/operators.hpp"
#include "dsga/oracle.hpp"
#include "dsga/parallel.hpp"
#include "dsga/random.hpp"
#include "dsga/spinor.hpp"
#include "dsga/suites.hpp"

using namespace dsga;

namespace {

constexpr uint64_t kSeed = 20240101;

enum class Verdict { Pass, Fail, KnownFail };

struct Outcome {
  Verdict v = Verdict::Pass;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit;  // seconds; 0 for none
  std::function<Outcome()> run;
};

const Check* find(const std::vector<Check>& cs, const std::string& name) {
  for (const auto& c : cs)
    if (c.name == name) return &c;
  return nullptr;
}

bool passed(const std::vector<Check>& cs, const std::string& name) {
  const Check* c = find(cs, name);
  return c && c->status == Status::Pass;
}

bool explained(const std::vector<Check>& cs, const std::string& name) {
  const Check* c = find(cs, name);
  return c && c->status == Status::Discrepancy;
}

std::string res(const std::vector<Check>& cs, const std::string& name) {
  const Check* c = find(cs, name);
  if (!c) return name + " missing";
  return name + " " + status_name(c->status) + " " + format_residual(c->max_residual) + "/" +
         format_residual(c->tolerance);
}

// Pass when all `must` pass; if additionally `literal` is set it must pass too,
// or be an explained discrepancy, which makes the criterion a known failure.
Outcome judge(const std::vector<Check>& cs, const std::vector<std::string>& must, const std::string& literal = {}) {
  Outcome o;
  for (const auto& n : must) {
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += res(cs, n);
    if (!passed(cs, n)) o.v = Verdict::Fail;
  }
  if (!literal.empty()) {
    o.detail += "; literal " + res(cs, literal);
    if (o.v == Verdict::Pass && !passed(cs, literal)) o.v = explained(cs, literal) ? Verdict::KnownFail : Verdict::Fail;
  }
  return o;
}

Outcome duality() {
  const Signature& B = bulk();
  long swap = parallel_count(1000, [&](size_t k) {
    Rng g(derive_seed(kSeed, "acceptance.duality_swap", k));
    int l = int(k % 6);
    MVQ a = random_grade<Q>(g, B, l), b = random_grade<Q>(g, B, 5 - l);
    return !(left_contraction(a, hodge_star(b)) == left_contraction(b, hodge_star(a)));
  });
  long inv = parallel_count(1000, [&](size_t k) {
    Rng g(derive_seed(kSeed, "acceptance.vector_inverse", k));
    MVQ a = random_grade<Q>(g, B, 1);
    return !(hodge_star_inv(a) == -hodge_star(a));
  });
  return {swap == 0 && inv == 0 ? Verdict::Pass : Verdict::Fail,
          "swap failures " + std::to_string(swap) + "/1000, vector inverse failures " + std::to_string(inv) + "/1000"};
}

Outcome oracle() {
  const Signature& B = bulk();
  long bad = 0, pairs = 0;
  for (uint32_t a = 0; a <= B.full_mask(); ++a)
    for (uint32_t b = 0; b <= B.full_mask(); ++b) {
      ++pairs;
      MVQ x = MVQ::blade(B, a, Q(1)), y = MVQ::blade(B, b, Q(1));
      if (!(x * y == oracle_product(x, y))) ++bad;
    }
  return {bad == 0 && pairs == 1024 ? Verdict::Pass : Verdict::Fail,
          std::to_string(pairs) + " pairs, " + std::to_string(bad) + " mismatches"};
}

Outcome determinism() {
  RunConfig cfg;
  cfg.seed = kSeed;
  std::string a = run_suites(cfg).to_json().dump(2), b = run_suites(cfg).to_json().dump(2);
  return {a == b ? Verdict::Pass : Verdict::Fail, "two full runs, " + std::to_string(a.size()) + " bytes each"};
}

}  // namespace

int main() {
  const OperatorParams p{1.0, 1.0};
  std::vector<Criterion> cs{
      {1, "generator relations in all three algebras, exact", 1.0,
       [] {
         auto c = gamma_matrices_check();
         return judge(c, {"algebras.generators.bulk", "algebras.generators.minkowski", "algebras.generators.euclid3",
                          "algebras.generators.Gamma"});
       }},
      {2, "kernel product equals transposition-count oracle on 1024 R41 blade pairs", 5.0, oracle},
      {3, "duality swap and vector inverse identities, 1000 exact instances each", 10.0, duality},
      {4, "casimir2 three-way equality on 500 grade-4 elements", 10.0,
       [] { return judge(casimir_checks(kSeed, 500), {"operators.casimir2.three_way"}); }},
      {5, "structure constants from S_AB, M_AB and Killing brackets agree on 100 pairs", 30.0,
       [] { return judge(lie_triple_agreement(), {"algebras.lie.triple_agreement"}); }},
      {6, "Killing equation holds exactly for every xi_AB", 0.0,
       [] { return judge(killing_checks(), {"geometry.killing.equation"}); }},
      {7, "chart round trip, pseudo-sphere and conformal metric on 10^4 points", 30.0,
       [] {
         return judge(chart_checks(kSeed, 10000),
                      {"geometry.chart.roundtrip", "geometry.chart.pseudo_sphere", "geometry.chart.conformal_metric"});
       }},
      {8, "operator realization of so(4,1) on 50 fields, literal commutator form", 60.0,
       [] {
         return judge(operator_realization_checks(kSeed, 50), {"operators.so41.realization"},
                      "operators.so41.realization_printed");
       }},
      {9, "literal L(L phi) split exact; telescoping within 1e-9 on 50 float fields", 0.0,
       [&] {
         auto c = split_checks(kSeed, 50);
         auto f = factorization_checks(kSeed, 50, p, 1e-9);
         c.insert(c.end(), f.begin(), f.end());
         return judge(c, {"operators.split.three_part", "operators.factorization.telescoping"},
                      "operators.split.literal");
       }},
      {10, "DHESS1 and DHESS2 coincide: 20 configurations x 20 points, inverse-derivative residual < 1e-11, agreement < 1e-9", 0.0,
       [&] {
         return judge(dhess2_checks(kSeed, 20, 20, p, 1e-11, 1e-9),
                      {"operators.dhess2.inverse_derivative", "operators.dhess2.agreement"}, "operators.dhess2.agreement_printed");
       }},
      {11, "limit deviation strictly decreasing over ell = 10..10^4 with slope <= -0.8", 60.0,
       [] { return judge(limit_checks(kSeed, 1.0, -0.8), {"operators.limit.sweep"}); }},
      {12, "six dictionary lines on 1000 spinors; rho homomorphism on 500 pairs", 0.0,
       [] {
         auto c = dictionary_check(kSeed, 1000);
         auto r = rho_checks(kSeed, 500);
         c.insert(c.end(), r.begin(), r.end());
         return judge(c,
                      {"repr.dictionary.gamma", "repr.dictionary.i", "repr.dictionary.bar", "repr.dictionary.dagger",
                       "repr.dictionary.conj", "repr.dictionary.i_gamma5", "repr.rho.homomorphism"},
                      "repr.dictionary.i_gamma5_printed_sign");
       }},
      {13, "Takabayasi round trip < 1e-10 on 500 elements; singular inputs raise", 0.0,
       [] { return judge(takabayasi_checks(kSeed, 500), {"repr.takabayasi.roundtrip", "repr.takabayasi.singular"}); }},
      {14, "classical identities exact on 500 valid states", 0.0,
       [] { return judge(classical_checks(kSeed, 500), {"operators.classical.identities"}); }},
      {15, "identical seed and config give bit-identical reports", 0.0, determinism},
  };

  int hard = 0, known = 0;
  for (auto& c : cs) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {Verdict::Fail, std::string("threw: ") + e.what()};
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit > 0 && dt > c.time_limit) {
      o.v = Verdict::Fail;
      o.detail += "; over time limit " + format_residual(c.time_limit) + " s";
    }
    const char* tag = o.v == Verdict::Pass ? "PASS" : o.v == Verdict::KnownFail ? "FAIL (known)" : "FAIL";
    std::printf("[%s] %2d %s (%.2f s) -- %s\n", tag, c.id, c.title.c_str(), dt, o.detail.c_str());
    if (o.v == Verdict::Fail) ++hard;
    if (o.v == Verdict::KnownFail) ++known;
  }
  std::printf("%zu criteria: %zu pass, %d known failures, %d failures\n", cs.size(), cs.size() - known - hard, known,
              hard);
  return hard == 0 ? 0 : 1;
}
