#include <sstream>

#include "doctest.h"
#include "dsga/geometry.hpp"
#include "helpers.hpp"

using namespace dsga;

TEST_SUITE("geometry") {
  TEST_CASE("origin maps to the pole X^4 = -ell") {
    auto p = embed<double>({0, 0, 0, 0}, 2.0);
    CHECK(p.omega == 1.0);
    CHECK(p.bulk(4) == doctest::Approx(-2.0));
    CHECK(pseudo_sphere_residual(p.X, 2.0) == doctest::Approx(0.0));
  }

  TEST_CASE("exact embedding round trip") {
    std::array<Q, 4> x{Q(1, 3), Q(-1, 2), Q(0), Q(2, 5)};
    auto p = embed<Q>(x, Q(3));
    CHECK(unembed<Q>(p.X, Q(3)) == x);
    CHECK(pseudo_sphere_residual<Q>(p.X, Q(3)) == 0);
  }

  TEST_CASE("points on the absolute raise") {
    CHECK_THROWS_AS(embed<double>({5, 4, 0, 0}, 1.5), AbsoluteHit);
  }

  TEST_CASE("region classification") {
    CHECK(classify(0, 0, 1) == Region::Inside);
    CHECK(classify(3, 0, 1) == Region::Outside);
    CHECK(classify(2, 0, 1) == Region::Absolute);
  }

  TEST_CASE("chart CSV layout") {
    std::ostringstream os;
    emit_chart_grid(os, 1.0, 3.0, 3, false);
    std::string s = os.str();
    CHECK(s.rfind("t,x1,region\n", 0) == 0);
    CHECK(std::count(s.begin(), s.end(), '\n') == 10);
    CHECK_THROWS(emit_chart_grid(os, 1.0, 3.0, 1, false));
  }

  TEST_CASE("parallel chart sweep equals serial reference") {
    CHECK(chart_sweep(17, 500, true) == chart_sweep(17, 500, false));
  }

  TEST_CASE("Killing and chart checks") {
    test::expect_clean(killing_checks(), {"geometry.killing.bracket_table_printed_sign"});
    test::expect_clean(chart_checks(4, 1000));
    test::expect_clean(chart_examples());
  }
}
