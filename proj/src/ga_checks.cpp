#include "dsga/ga_checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "dsga/oracle.hpp"
#include "dsga/parallel.hpp"
#include "dsga/random.hpp"

namespace dsga {

namespace {

const std::vector<const Signature*>& registered() {
  static const std::vector<const Signature*> s{&bulk(), &minkowski(), &euclid3()};
  return s;
}

// Exact: 0 or 1 per comparison, summed. Float: relative difference, maximized.
template <class T> double mismatch(const Multivector<T>& a, const Multivector<T>& b) {
  if constexpr (Coeff<T>::exact) {
    return a == b ? 0.0 : 1.0;
  } else {
    double scale = std::max({1.0, max_abs(a), max_abs(b)});
    return max_abs(a - b) / scale;
  }
}

template <class T> double combine(double acc, double v) {
  if constexpr (Coeff<T>::exact) return acc + v;
  else return std::max(acc, v);
}

// Runs f(k) for k < n in parallel, combining residuals by sum (exact) or max (float).
template <class T> double sweep(size_t n, const std::function<double(size_t)>& f) {
  if constexpr (Coeff<T>::exact) {
    return double(parallel_count(n, [&](size_t k) { return f(k) != 0.0; }));
  } else {
    return parallel_max(n, f);
  }
}

template <class T> std::vector<Check> ga_checks_t(uint64_t seed) {
  constexpr bool exact = Coeff<T>::exact;
  const char* mode = exact ? "exact" : "float";
  const double tol = exact ? 0.0 : 1e-10;
  using MV = Multivector<T>;
  const Signature& B = bulk();
  std::vector<Check> out;

  // Blade-level oracle over every registered signature.
  {
    long bad = 0, pairs = 0;
    for (const Signature* s : registered())
      for (uint32_t a = 0; a <= s->full_mask(); ++a)
        for (uint32_t b = 0; b <= s->full_mask(); ++b) {
          auto [sg, m] = oracle_blade_product(*s, a, b);
          ++pairs;
          if (sg != s->blade_sign(a, b) || m != (a ^ b)) ++bad;
        }
    out.push_back(make_check("ga.oracle.basis_pairs", "kernel blade product = transposition-count oracle", "exact", bad, 0,
                             std::to_string(pairs) + " basis-blade pairs (1024 in R41)"));
  }

  double r = sweep<T>(1000, [&](size_t k) {
    Rng g(derive_seed(seed, "ga.oracle.dense", k));
    MV a = random_multivector<T>(g, B), b = random_multivector<T>(g, B);
    return mismatch(a * b, oracle_product(a, b));
  });
  out.push_back(make_check("ga.oracle.dense_pairs", "ab = oracle product on dense R41 multivectors", mode, r, tol,
                           "1000 random dense pairs"));

  {
    long bad = 0;
    for (const Signature* s : registered())
      for (int i = 0; i < s->dim(); ++i)
        for (int j = 0; j < s->dim(); ++j) {
          MV a = MV::blade(*s, 1u << i, T(1)), b = MV::blade(*s, 1u << j, T(1));
          MV want(*s, T(i == j ? 2 * s->square_at(i) : 0));
          if (!(a * b + b * a == want)) ++bad;
        }
    out.push_back(make_check("ga.generator_relations", "e_a e_b + e_b e_a = 2 eta(a, b) in every signature", mode, bad, 0));
  }

  {
    int bad = 0;
    MV E0 = MV::vec(B, 0);
    if (!(E0 * E0 == MV(B, T(-1)))) ++bad;
    Rng g(derive_seed(seed, "ga.examples", 0));
    MV a = random_multivector<T>(g, B);
    if (!(MV(B, T(1)) * a == a)) ++bad;
    MV E1dn = MV::vec(B, 1), E2dn = MV::vec(B, 2);
    if (!(left_contraction(MV::vec(B, 1), wedge(E1dn, E2dn)) == E2dn)) ++bad;
    MV v = random_grade<T>(g, B, 1);
    if (!wedge(v, v).zero()) ++bad;
    if (!(hodge_star(MV(B, T(1))) == pseudoscalar<T>(B))) ++bad;
    if (!(exp_bivector(MV(B)) == MV(B, T(1)))) ++bad;
    if (!(a + (-a)).zero() || !(a - a).terms().empty()) ++bad;
    MV t = MV::product_of(B, {1, 4, 0}, Coeff<T>::from_ratio(3, 2));
    if (to_text(t) != Coeff<T>::str(Coeff<T>::from_ratio(3, 2)) + "*e140") ++bad;
    out.push_back(make_check("ga.examples",
                             "E^0 E^0 = -1; 1 a = a; E^1 _| (E_1 ^ E_2) = E_2; v ^ v = 0; star 1 = tau; exp(0) = 1; "
                             "a - a stores no terms; text form 3/2*e140",
                             mode, bad, 0));
  }

  r = sweep<T>(1500, [&](size_t k) {
    Rng g(derive_seed(seed, "ga.associativity", k));
    const Signature& s = *registered()[k % 3];
    MV a = random_multivector<T>(g, s, 0.5), b = random_multivector<T>(g, s, 0.5), c = random_multivector<T>(g, s, 0.5);
    return mismatch((a * b) * c, a * (b * c));
  });
  out.push_back(make_check("ga.associativity", "(ab)c = a(bc)", mode, r, tol, "500 random triples per signature"));

  r = sweep<T>(1500, [&](size_t k) {
    Rng g(derive_seed(seed, "ga.grades", k));
    const Signature& s = *registered()[k % 3];
    MV a = random_multivector<T>(g, s, 0.6);
    MV sum(s);
    for (int q = 0; q <= s.dim(); ++q) sum += grade(a, q);
    return mismatch(sum, a);
  });
  out.push_back(make_check("ga.grade_decomposition", "sum_k <a>_k = a", mode, r, tol, "500 random elements per signature"));

  r = sweep<T>(1500, [&](size_t k) {
    Rng g(derive_seed(seed, "ga.reversion", k));
    const Signature& s = *registered()[k % 3];
    MV a = random_multivector<T>(g, s, 0.5), b = random_multivector<T>(g, s, 0.5);
    return combine<T>(mismatch(reversion(reversion(a)), a), mismatch(reversion(a * b), reversion(b) * reversion(a)));
  });
  out.push_back(make_check("ga.reversion", "rev(rev(a)) = a, rev(ab) = rev(b) rev(a)", mode, r, tol,
                           "500 random pairs per signature"));

  r = sweep<T>(1500, [&](size_t k) {
    Rng g(derive_seed(seed, "ga.duality.roundtrip", k));
    const Signature& s = *registered()[k % 3];
    MV a = random_grade<T>(g, s, int(k / 3 % (s.dim() + 1)));
    return combine<T>(mismatch(hodge_star_inv(hodge_star(a)), a), mismatch(hodge_star(hodge_star_inv(a)), a));
  });
  out.push_back(make_check("ga.duality.roundtrip", "star^-1(star a) = a = star(star^-1 a)", mode, r, tol,
                           "500 random homogeneous elements per signature, every grade"));

  r = sweep<T>(1000, [&](size_t k) {
    Rng g(derive_seed(seed, "ga.duality.swap", k));
    int l = int(k % 6);
    MV A = random_grade<T>(g, B, l), Bs = random_grade<T>(g, B, 5 - l);
    return mismatch(left_contraction(A, hodge_star(Bs)), left_contraction(Bs, hodge_star(A)));
  });
  out.push_back(make_check("ga.duality.swap", "A_l _| star B_s = B_s _| star A_l for l + s = 5", mode, r, tol,
                           "1000 random pairs in R41"));

  r = sweep<T>(1000, [&](size_t k) {
    Rng g(derive_seed(seed, "ga.duality.vector_inverse", k));
    MV a = random_grade<T>(g, B, 1);
    return mismatch(hodge_star_inv(a), -hodge_star(a));
  });
  out.push_back(make_check("ga.duality.vector_inverse", "star^-1 a = -star a for vectors", mode, r, tol,
                           "1000 random vectors in R41"));

  r = sweep<T>(500, [&](size_t k) {
    Rng g(derive_seed(seed, "ga.contraction", k));
    MV L = random_grade<T>(g, B, 2);
    T sum(0);
    for (const auto& [m, c] : L.terms()) {
      // Blade E^A E^B (A before B) carries L_AB; L^AB = eta_AA eta_BB L_AB.
      int sq = 1;
      for (int i = 0; i < 5; ++i)
        if (m >> i & 1u) sq *= B.square_at(i);
      sum += T(sq) * c * c;
    }
    MV want(B, -sum);
    return mismatch(left_contraction(L, L), want);
  });
  out.push_back(make_check("ga.contraction_components", "L _| L = -(1/2) L_AB L^AB for bivectors", mode, r, tol,
                           "500 random bivectors in R41"));

  r = sweep<T>(1500, [&](size_t k) {
    Rng g(derive_seed(seed, "ga.text", k));
    const Signature& s = *registered()[k % 3];
    MV a = random_multivector<T>(g, s, 0.5);
    return mismatch(parse_text<T>(s, to_text(a)), a);
  });
  out.push_back(make_check("ga.text_roundtrip", "parse(text(a)) = a", mode, r, tol, "500 random elements per signature"));

  {
    int bad = 0;
    auto expect_throw = [&](auto&& f) {
      try {
        f();
        ++bad;
      } catch (const std::invalid_argument&) {
      }
    };
    expect_throw([&] { (void)(MV::vec(B, 1) * MV::vec(minkowski(), 1)); });
    expect_throw([&] { (void)grade(MV(B, T(1)), 6); });
    expect_throw([&] { (void)exp_bivector(MV::vec(B, 1)); });
    expect_throw([&] { (void)parse_text<T>(B, "1*e041"); });
    expect_throw([&] { (void)MV::blade(euclid3(), 0b1000, T(1)); });
    if constexpr (exact) {
      MV nonsimple = MV::product_of(B, {1, 2}) + MV::product_of(B, {3, 4});
      expect_throw([&] { (void)exp_bivector(nonsimple); });
    }
    out.push_back(make_check("ga.errors",
                             "signature mismatch, bad grade index, non-bivector exponent, non-canonical text and "
                             "out-of-range masks raise",
                             mode, bad, 0));
  }
  return out;
}

}  // namespace

std::vector<Check> ga_checks(uint64_t seed, bool exact) {
  std::vector<Check> out = exact ? ga_checks_t<Q>(seed) : ga_checks_t<double>(seed);

  // Exponentials need transcendental functions and always run in float.
  const Signature& B = bulk();
  MVD F = MVD::product_of(B, {1, 0});
  double worst = 0, unit = 0;
  for (int n = -6; n <= 6; ++n) {
    double z = n / 4.0;
    MVD u = exp_bivector(F * z);
    MVD want = MVD(B, std::cosh(z)) + F * std::sinh(z);
    worst = std::max(worst, max_abs(u - want) / std::max(1.0, max_abs(want)));
    unit = std::max(unit, max_abs(u * reversion(u) - MVD(B, 1.0)));
  }
  out.push_back(make_check("ga.exp.boost", "exp(z E^1 E^0) = cosh z + E^1 E^0 sinh z, u rev(u) = 1", "float",
                           std::max(worst, unit), 1e-12, "z in {-3/2, -5/4, ..., 3/2}"));

  double r = parallel_max(200, [&](size_t k) {
    Rng g(derive_seed(seed, "ga.exp.simple", k));
    MVD a(B), b(B);
    for (int i = 0; i < 5; ++i) {
      a.add(1u << i, g.uniform(-1, 1));
      b.add(1u << i, g.uniform(-1, 1));
    }
    MVD u = exp_bivector(wedge(a, b));
    double scale = std::max(1.0, max_abs(u) * max_abs(u));
    return max_abs(u * reversion(u) - MVD(B, 1.0)) / scale;
  });
  out.push_back(make_check("ga.exp.simple_unit", "exp(B) rev(exp(B)) = 1 for simple B", "float", r, 1e-10,
                           "200 random simple bivectors"));

  MVQ Bq = MVQ::product_of(B, {1, 2}, Q(1, 3));
  MVQ uq = exp_bivector(Bq);
  double dev = max_abs(to_float(uq) - MVD(B, std::cos(1.0 / 3)) - to_float(Bq) * (3 * std::sin(1.0 / 3)));
  out.push_back(make_check("ga.exp.exact_series", "rational series for exp((1/3) E^1 E^2) matches cos + B sin", "exact",
                           dev, 1e-15, "30-term truncation"));
  return out;
}

}  // namespace dsga
