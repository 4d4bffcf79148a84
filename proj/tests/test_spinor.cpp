#include <cmath>

#include "doctest.h"
#include "dsga/random.hpp"
#include "dsga/spinor.hpp"
#include "helpers.hpp"

using namespace dsga;

TEST_SUITE("spinor") {
  TEST_CASE("gamma5 squares to minus one") {
    CHECK(dirac_gamma5() * dirac_gamma5() == GaussQ(-1) * MatQ::identity());
  }

  TEST_CASE("rho is multiplicative on basis vectors") {
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        MVQ a = MVQ::vec(bulk(), i), b = MVQ::vec(bulk(), j);
        CHECK(rho_map(a * b) == rho_map(a) * rho_map(b));
      }
    CHECK(rho_bulk_rank() == 32);
  }

  TEST_CASE("column and even element round trip") {
    Rng g(3);
    for (int k = 0; k < 50; ++k) {
      MVQ psi = random_even<Q>(g, minkowski());
      CHECK(column_to_dhsf(dhsf_to_column(psi)) == psi);
    }
  }

  TEST_CASE("takabayasi on a pure rotor") {
    MVD R = MVD(minkowski(), std::cos(0.3)) + MVD::product_of(minkowski(), {1, 2}, std::sin(0.3));
    auto d = takabayasi_decompose(R);
    CHECK(d.rho == doctest::Approx(1.0));
    CHECK(d.beta == doctest::Approx(0.0));
    CHECK(max_abs(takabayasi_reconstruct(d) - R) < 1e-12);
  }

  TEST_CASE("null spinor is singular") {
    MVQ n = MVQ(minkowski(), Q(1)) + MVQ::product_of(minkowski(), {0, 1});
    CHECK_THROWS_AS(takabayasi_decompose(n), SingularSpinor);
  }

  TEST_CASE("representation checks") {
    test::expect_clean(rho_checks(9, 60));
    test::expect_clean(dictionary_check(9, 100), {"repr.dictionary.i_gamma5_printed_sign"});
    test::expect_clean(takabayasi_checks(9, 60));
    test::expect_clean(generalized_spinor_checks(9, 40), {"repr.generalized.normalization_bracket"});
  }
}
