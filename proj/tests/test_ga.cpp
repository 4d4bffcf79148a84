#include "doctest.h"
#include "dsga/ga_checks.hpp"
#include "dsga/oracle.hpp"
#include "dsga/parallel.hpp"
#include "dsga/random.hpp"
#include "helpers.hpp"

using namespace dsga;

TEST_SUITE("ga") {
  TEST_CASE("basis vectors square to the metric") {
    CHECK(MVQ::vec(bulk(), 0) * MVQ::vec(bulk(), 0) == MVQ(bulk(), Q(-1)));
    CHECK(MVQ::vec(bulk(), 4) * MVQ::vec(bulk(), 4) == MVQ(bulk(), Q(1)));
    CHECK(MVQ::vec(minkowski(), 0) * MVQ::vec(minkowski(), 0) == MVQ(minkowski(), Q(1)));
    CHECK(MVQ::vec(minkowski(), 2) * MVQ::vec(minkowski(), 2) == MVQ(minkowski(), Q(-1)));
  }

  TEST_CASE("oracle agrees on every blade pair") {
    for (const Signature* s : {&bulk(), &minkowski(), &euclid3()})
      for (uint32_t a = 0; a <= s->full_mask(); ++a)
        for (uint32_t b = 0; b <= s->full_mask(); ++b) {
          auto [sg, m] = oracle_blade_product(*s, a, b);
          CHECK(sg == s->blade_sign(a, b));
          CHECK(m == (a ^ b));
        }
  }

  TEST_CASE("contraction and wedge examples") {
    MVQ e1 = MVQ::vec(bulk(), 1), e2 = MVQ::vec(bulk(), 2);
    CHECK(left_contraction(e1, wedge(e1, e2)) == e2);
    CHECK(wedge(e1, e1).zero());
    CHECK(hodge_star(MVQ(bulk(), Q(1))) == pseudoscalar<Q>(bulk()));
  }

  TEST_CASE("text form uses canonical label order") {
    MVQ t = MVQ::product_of(bulk(), {1, 4, 0}, Coeff<Q>::from_ratio(3, 2));
    CHECK(to_text(t) == "3/2*e140");
    CHECK(parse_text<Q>(bulk(), "3/2*e140") == t);
    CHECK_THROWS(parse_text<Q>(bulk(), "3/2*e014"));
  }

  TEST_CASE("cancelled terms are not stored") {
    Rng g(7);
    MVQ a = random_multivector<Q>(g, bulk());
    CHECK((a - a).terms().empty());
  }

  TEST_CASE("mixing signatures raises") {
    CHECK_THROWS_AS((void)(MVQ::vec(bulk(), 1) + MVQ::vec(euclid3(), 1)), SignatureMismatch);
  }

  TEST_CASE("exact suite") { test::expect_clean(ga_checks(11, true)); }
  TEST_CASE("float suite") { test::expect_clean(ga_checks(11, false)); }

  TEST_CASE("dense products match the oracle under both reductions") {
    auto f = [](size_t k) {
      Rng g(derive_seed(3, "test.oracle", k));
      MVD a = random_multivector<double>(g, bulk()), b = random_multivector<double>(g, bulk());
      return max_abs(a * b - oracle_product(a, b));
    };
    CHECK(serial_max(64, f) == parallel_max(64, f));
    CHECK(serial_max(64, f) == 0.0);
  }
}
