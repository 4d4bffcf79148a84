#include "doctest.h"
#include "dsga/operators.hpp"
#include "dsga/random.hpp"
#include "helpers.hpp"

using namespace dsga;

namespace {
FieldQ sample_field(uint64_t k) {
  Rng g(derive_seed(21, "test.field", k));
  return random_field<Q>(g, bulk(), Domain::Bulk, FieldShape{5, 2, 2, 0.3, true});
}
}  // namespace

TEST_SUITE("operators") {
  TEST_CASE("right multiplication by E^2 E^1 squares to minus one") {
    CHECK(e21<Q>() * e21<Q>() == MVQ(bulk(), Q(-1)));
  }

  TEST_CASE("momentum of a coordinate") {
    FieldQ f(bulk(), Domain::Bulk);
    f.add(0, Polynomial<Q>::var(bulk_slot(1)));
    FieldQ want(bulk(), Domain::Bulk);
    want.add(0, Polynomial<Q>(Q(1)));
    CHECK(momentum_op(1, f) == want.right(e21<Q>()));
  }

  TEST_CASE("grade-two part of L(L phi) is 3 (L phi) E^2 E^1") {
    for (uint64_t k = 0; k < 5; ++k) {
      FieldQ f = sample_field(k);
      auto s = L_squared_split(f);
      CHECK(s.commutator == commutator_closed_form(f));
      CHECK(s.sum() == L_squared(f));
      CHECK(s.contraction == contraction_by_components(f));
    }
  }

  TEST_CASE("chart fields are rejected by bulk operators") {
    FieldQ f(bulk(), Domain::Chart);
    CHECK_THROWS_AS(momentum_op(1, f), DomainMismatch);
  }

  TEST_CASE("lambda branches") {
    CHECK(OperatorParams{1.0, 0.0}.lambda() == 0.0);
    CHECK_THROWS_AS((OperatorParams{1.0, 1.0, 0.5, true}.lambda_squared()), InvalidParams);
  }

  TEST_CASE("parallel limit sweep equals serial reference") {
    FieldD f = limit_family(2);
    auto pts = limit_points(2, 8);
    std::vector<double> ells{10, 100, 1000, 10000};
    auto a = limit_sweep(f, 1.0, ells, pts, true), b = limit_sweep(f, 1.0, ells, pts, false);
    REQUIRE(a.rows.size() == b.rows.size());
    for (size_t i = 0; i < a.rows.size(); ++i) CHECK(a.rows[i].deviation == b.rows[i].deviation);
    CHECK(a.decreasing);
    CHECK(a.slope <= -0.8);
  }

  TEST_CASE("classical state validation") {
    MVQ x = MVQ::vec(bulk(), 4) * Q(2), p = MVQ::vec(bulk(), 0);
    CHECK_NOTHROW(ClassicalState(x, p, Q(2)));
    CHECK_THROWS(ClassicalState(x, p, Q(3)));
  }

  TEST_CASE("operator check groups") {
    OperatorParams p{1.0, 1.0};
    test::expect_clean(operator_basic_checks(8, 5));
    test::expect_clean(operator_realization_checks(8, 5), {"operators.so41.realization_printed"});
    test::expect_clean(split_checks(8, 5), {"operators.split.literal"});
    test::expect_clean(casimir_checks(8, 50));
    test::expect_clean(factorization_checks(8, 5, p, 1e-9));
    test::expect_clean(dhess2_checks(8, 4, 4, p, 1e-11, 1e-9), {"operators.dhess2.agreement_printed"});
    test::expect_clean(chart_operator_checks(8, 5));
    test::expect_clean(ansatz_checks(), {"operators.ansatz.normalization_printed"});
    test::expect_clean(limit_checks(8, 1.0, -0.8));
    test::expect_clean(dhe_checks(8, 10),
                       {"operators.dhe.phase_printed", "operators.dhe.beta_counterexample_printed"});
    test::expect_clean(classical_checks(8, 50));
  }
}
