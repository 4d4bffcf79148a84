#include "doctest.h"
#include "dsga/algebras.hpp"
#include "dsga/geometry.hpp"
#include "helpers.hpp"

using namespace dsga;

TEST_SUITE("algebras") {
  TEST_CASE("ten generator pairs") {
    CHECK(generator_pairs().size() == 10);
    for (auto [a, b] : generator_pairs()) CHECK(pair_index(a, b).first >= 0);
  }

  TEST_CASE("spin, matrix and Killing structure constants agree") {
    StructureTable s = spin_structure(), m = so41_structure(), k = killing_structure();
    CHECK(table_max_diff(s, m) == 0);
    CHECK(table_max_diff(s, k) == 0);
    CHECK(table_max_diff(s, expected_structure(1)) == 0);
    // The opposite overall sign is a different table.
    CHECK(table_max_diff(s, expected_structure(-1)) != 0);
  }

  TEST_CASE("spin generators are bivectors") {
    for (auto [a, b] : generator_pairs()) CHECK(grade(spin_generator(a, b), 2) == spin_generator(a, b));
  }

  TEST_CASE("gamma and commutator checks") {
    test::expect_clean(gamma_matrices_check());
    test::expect_clean(spin_commutator_check(), {"algebras.spin.commutator_table_printed_sign"});
    test::expect_clean(so41_commutator_check(), {"algebras.so41.commutator_table_printed_sign"});
  }

  TEST_CASE("property checks") { test::expect_clean(algebra_property_checks(5, 40)); }
  TEST_CASE("triple agreement") { test::expect_clean(lie_triple_agreement()); }
}
