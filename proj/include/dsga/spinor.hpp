#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

#include "dsga/multivector.hpp"
#include "dsga/report.hpp"

namespace dsga {

using cd = std::complex<double>;

template <class Z>
struct MatrixC4 {
  std::array<Z, 16> a{};

  static MatrixC4 identity() {
    MatrixC4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = Z(1);
    return m;
  }
  Z& operator()(int i, int j) { return a[4 * i + j]; }
  const Z& operator()(int i, int j) const { return a[4 * i + j]; }

  friend MatrixC4 operator*(const MatrixC4& x, const MatrixC4& y) {
    MatrixC4 r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        Z s(0);
        for (int k = 0; k < 4; ++k) s = s + x(i, k) * y(k, j);
        r(i, j) = s;
      }
    return r;
  }
  friend MatrixC4 operator+(const MatrixC4& x, const MatrixC4& y) {
    MatrixC4 r;
    for (int i = 0; i < 16; ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
  }
  friend MatrixC4 operator-(const MatrixC4& x, const MatrixC4& y) {
    MatrixC4 r;
    for (int i = 0; i < 16; ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
  }
  friend MatrixC4 operator*(const Z& k, const MatrixC4& x) {
    MatrixC4 r;
    for (int i = 0; i < 16; ++i) r.a[i] = k * x.a[i];
    return r;
  }
  friend bool operator==(const MatrixC4& x, const MatrixC4& y) { return x.a == y.a; }
};

template <class Z> using Column = std::array<Z, 4>;

using MatQ = MatrixC4<GaussQ>;
using MatD = MatrixC4<cd>;
using ColQ = Column<GaussQ>;
using ColD = Column<cd>;

template <class Z> Column<Z> act(const MatrixC4<Z>& m, const Column<Z>& v) {
  Column<Z> r;
  for (int i = 0; i < 4; ++i) {
    Z s(0);
    for (int k = 0; k < 4; ++k) s = s + m(i, k) * v[k];
    r[i] = s;
  }
  return r;
}

// Standard Dirac matrices gamma^mu, gamma^0 = diag(1,1,-1,-1).
MatQ dirac_gamma(int mu);
// gamma_5 = gamma_0 gamma_1 gamma_2 gamma_3 (squares to -1).
MatQ dirac_gamma5();
MatD to_complex(const MatQ& m);

// Ring homomorphism R_{4,1} -> C(4) (E^mu -> i gamma^mu gamma_5, E^4 -> i gamma_5)
// and R_{1,3} -> C(4) (gamma^mu -> gamma^mu).
MatQ rho_map(const MVQ& a);
MatD rho_map(const MVD& a);
// Rank of the 32 real-linear images of the bulk basis blades.
int rho_bulk_rank();

// Column layout (m0 + i m3, -m2 + i m1, n0 + i n3, -n2 + i n1) and the even element
// (m0 + m^k i sigma_k) + (n0 + n^k i sigma_k) sigma_3 of R_{1,3}.
MVQ column_to_dhsf(const ColQ& c);
ColQ dhsf_to_column(const MVQ& psi);
MVD column_to_dhsf(const ColD& c);
ColD dhsf_to_column(const MVD& psi);

// Complex scalar carried by an even element: <M>_0 - i <M gamma_21>_0.
GaussQ complex_scalar(const MVQ& m);

std::vector<Check> rho_checks(uint64_t seed, int samples);
std::vector<Check> dictionary_check(uint64_t seed, int samples);

struct SingularSpinor : std::domain_error {
  using std::domain_error::domain_error;
};

struct TakabayasiData {
  double rho = 0;
  double beta = 0;  // in (-pi, pi]
  MVD R;
  explicit TakabayasiData(const Signature& s) : R(s) {}
};

// psi even in R_{1,3} with psi rev(psi) != 0. Singularity is decided exactly for rational input.
TakabayasiData takabayasi_decompose(const MVQ& psi);
TakabayasiData takabayasi_decompose(const MVD& psi);
MVD takabayasi_reconstruct(const TakabayasiData& d);

std::vector<Check> takabayasi_checks(uint64_t seed, int samples);
std::vector<Check> generalized_spinor_checks(uint64_t seed, int samples);

std::string to_json_text(const ColQ& c);
std::string to_json_text(const MatQ& m);

}  // namespace dsga
