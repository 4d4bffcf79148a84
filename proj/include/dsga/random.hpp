#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "dsga/polyfield.hpp"

namespace dsga {

uint64_t splitmix64(uint64_t x);
// Independent stream per (run seed, check name, item index).
uint64_t derive_seed(uint64_t seed, std::string_view check, uint64_t index);

// Uniform draws are mapped from raw engine output by hand so streams are
// identical across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}
  uint64_t next() { return eng_(); }
  uint64_t below(uint64_t n);
  long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1))); }
  double unit() { return double(next() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * unit(); }
  bool coin() { return (next() >> 63) != 0; }
  // Numerator in [-maxabs, maxabs], denominator in [1, maxabs].
  Q rational(long maxabs = 9);
  Q nonzero_rational(long maxabs = 9);

 private:
  std::mt19937_64 eng_;
};

template <class T> T draw(Rng& r, long maxabs = 9) {
  if constexpr (Coeff<T>::exact) return r.rational(maxabs);
  else return r.rational(maxabs).get_d();
}

template <class T> Multivector<T> random_multivector(Rng& r, const Signature& s, double density = 1.0) {
  Multivector<T> a(s);
  for (uint32_t m = 0; m <= s.full_mask(); ++m)
    if (density >= 1.0 || r.unit() < density) a.add(m, draw<T>(r));
  return a;
}

template <class T> Multivector<T> random_grade(Rng& r, const Signature& s, int k) {
  Multivector<T> a(s);
  for (uint32_t m = 0; m <= s.full_mask(); ++m)
    if (grade_of(m) == k) a.add(m, draw<T>(r));
  return a;
}

template <class T> Multivector<T> random_even(Rng& r, const Signature& s) {
  Multivector<T> a(s);
  for (uint32_t m = 0; m <= s.full_mask(); ++m)
    if (grade_of(m) % 2 == 0) a.add(m, draw<T>(r));
  return a;
}

// Random polynomial in `nvars` variables of total degree <= maxdeg with `nterms` draws.
template <class T> Polynomial<T> random_poly(Rng& r, int nvars, int maxdeg, int nterms) {
  Polynomial<T> p;
  for (int i = 0; i < nterms; ++i) {
    Mono m{};
    int budget = static_cast<int>(r.range(0, maxdeg));
    for (int k = 0; k < budget; ++k) ++m[r.range(0, nvars - 1)];
    p.add(m, draw<T>(r));
  }
  return p;
}

struct FieldShape {
  int nvars = 5;
  int maxdeg = 3;
  int terms_per_blade = 2;
  double blade_density = 0.5;
  bool even_only = true;
};

template <class T> PolyField<T> random_field(Rng& r, const Signature& s, Domain d, const FieldShape& sh = {}) {
  PolyField<T> f(s, d);
  for (uint32_t m = 0; m <= s.full_mask(); ++m) {
    if (sh.even_only && grade_of(m) % 2) continue;
    if (r.unit() >= sh.blade_density) continue;
    f.add(m, random_poly<T>(r, sh.nvars, sh.maxdeg, sh.terms_per_blade));
  }
  return f;
}

}  // namespace dsga
