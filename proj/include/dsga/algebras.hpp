#pragma once

#include <array>
#include <utility>
#include <vector>

#include "dsga/linsolve.hpp"
#include "dsga/multivector.hpp"
#include "dsga/report.hpp"

namespace dsga {

// Named elements of the three registered algebras (exact).
struct Catalog {
  // Minkowski R_{1,3}; arrays indexed by mu = 0..3.
  std::array<MVQ, 4> gamma_up, gamma_dn;
  std::array<MVQ, 3> sigma;  // sigma_k = gamma_k gamma_0, k = 1..3 at index k-1
  MVQ i_mink;                // gamma_0 gamma_1 gamma_2 gamma_3
  MVQ e_mink;                // (1 + gamma^0)/2
  // Bulk R_{4,1}; arrays indexed by label 0..4.
  std::array<MVQ, 5> E_up, E_dn;
  MVQ i_bulk;                // E^0 E^1 E^2 E^3 E^4
  std::array<MVQ, 4> Gamma;  // Gamma^mu = E^mu E^4
  std::array<MVQ, 4> Gamma_dn;
  MVQ f_bulk;                // (1 + Gamma^0)/2
  MVQ f41;                   // (1 + Gamma^0)/2 (1 + i Gamma^2 Gamma^1)/2
  // Euclidean R_{3,0}.
  std::array<MVQ, 3> e3;
};

const Catalog& catalog();

// Metric of the bulk by label.
inline int eta_bulk(int label) { return label == 0 ? -1 : 1; }
inline int eta_mink(int mu) { return mu == 0 ? 1 : -1; }

// Generator index pairs (A, B) as bulk labels, A before B in canonical order.
const std::vector<std::pair<int, int>>& generator_pairs();
// Position of (A, B) in generator_pairs() with the sign for (B, A) ordering.
std::pair<int, int> pair_index(int a, int b);

std::vector<Check> gamma_matrices_check();

// Spin generators S_AB = (1/2) E_A E_B.
MVQ spin_generator(int a, int b);
// so(4,1) matrices on the bulk label-index basis: (M_AB)^C_D = eta_BD d^C_A - eta_AD d^C_B.
Matrix<Q> so41_generator(int a, int b);

// Structure constants c[p][q][r] with [G_p, G_q] = sum_r c[p][q][r] G_r.
using StructureTable = std::vector<std::vector<std::vector<Q>>>;
StructureTable spin_structure();
StructureTable so41_structure();
// The so(4,1) table in the form [X_AB, X_CD] = eta_BC X_AD + eta_AD X_BC - eta_AC X_BD - eta_BD X_AC.
StructureTable expected_structure(int overall_sign = 1);
Q table_max_diff(const StructureTable& a, const StructureTable& b);

std::vector<Check> spin_commutator_check();
std::vector<Check> so41_commutator_check();

// Lambda = exp(chi^{AB} M_AB / 2) with chi^{AB} antisymmetric (upper indices, label-index order).
Matrix<double> exp_so41(const Matrix<double>& chi);
double so41_membership_residual(const Matrix<double>& L);
// Spin element u = exp(chi_AB E^A E^B / 4) for the same parameters.
MVD spin_element(const Matrix<double>& chi);

// u a u^{-1} with u^{-1} = rev(u); u must satisfy u rev(u) = 1.
MVQ adjoint_action(const MVQ& u, const MVQ& a);
MVD adjoint_action(const MVD& u, const MVD& a, double tol = 1e-9);
// 5x5 matrix of the grade-1 action on the lower basis: Ad_u(E_D) = sum_C A[C][D] E_C.
Matrix<double> adjoint_matrix(const MVD& u);

std::vector<Check> algebra_property_checks(uint64_t seed, int samples);

}  // namespace dsga
