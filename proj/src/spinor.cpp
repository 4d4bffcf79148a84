#include "dsga/spinor.hpp"

#include <cmath>
#include <sstream>

#include "dsga/algebras.hpp"
#include "dsga/linsolve.hpp"
#include "dsga/parallel.hpp"
#include "dsga/random.hpp"

namespace dsga {

namespace {

const GaussQ kI{Q(0), Q(1)};

MatQ pauli_block(int k, int sign) {
  // [[0, s sigma_k], [-s sigma_k, 0]]
  GaussQ p[3][2][2] = {{{0, 1}, {1, 0}}, {{0, GaussQ(Q(0), Q(-1))}, {kI, 0}}, {{1, 0}, {0, -1}}};
  MatQ m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      m(i, j + 2) = GaussQ(Q(sign)) * p[k - 1][i][j];
      m(i + 2, j) = GaussQ(Q(-sign)) * p[k - 1][i][j];
    }
  return m;
}

struct BladeImages {
  std::vector<MatQ> img;
};

BladeImages build_images(const Signature& s) {
  std::vector<MatQ> gen(s.dim());
  const bool is_bulk = (&s == &bulk());
  MatQ g5 = dirac_gamma5();
  for (int i = 0; i < s.dim(); ++i) {
    int l = s.label(i);
    if (is_bulk) gen[i] = (l == 4) ? kI * g5 : kI * (dirac_gamma(l) * g5);
    else gen[i] = dirac_gamma(l);
  }
  BladeImages b;
  b.img.resize(s.full_mask() + 1);
  for (uint32_t m = 0; m <= s.full_mask(); ++m) {
    MatQ p = MatQ::identity();
    for (int i = 0; i < s.dim(); ++i)
      if (m & (1u << i)) p = p * gen[i];
    b.img[m] = p;
  }
  return b;
}

const BladeImages& images(const Signature& s) {
  static const BladeImages bulk_img = build_images(bulk());
  static const BladeImages mink_img = build_images(minkowski());
  if (&s == &bulk()) return bulk_img;
  if (&s == &minkowski()) return mink_img;
  throw std::invalid_argument("rho_map: unregistered signature " + s.name());
}

// The eight basis elements of the column bijection: single signed even blades.
struct DhsfBasis {
  std::array<uint32_t, 8> mask;
  std::array<int, 8> sign;
};

MVQ dhsf_basis_element(int j) {
  const Catalog& c = catalog();
  const Signature& M = minkowski();
  MVQ one(M, Q(1));
  MVQ phi = (j % 4 == 0) ? one : c.i_mink * c.sigma[j % 4 - 1];
  return j < 4 ? phi : phi * c.sigma[2];
}

const DhsfBasis& dhsf_basis() {
  static const DhsfBasis b = [] {
    DhsfBasis r{};
    for (int j = 0; j < 8; ++j) {
      MVQ e = dhsf_basis_element(j);
      if (e.size() != 1) throw std::logic_error("column basis element is not a single blade");
      r.mask[j] = e.terms().begin()->first;
      r.sign[j] = sgn(e.terms().begin()->second);
    }
    return r;
  }();
  return b;
}

// (m0, m1, m2, m3, n0, n1, n2, n3) from a column.
template <class R, class Z, class Re, class Im>
std::array<R, 8> column_coords(const Column<Z>& c, Re re, Im im) {
  return {re(c[0]), im(c[1]), R(-re(c[1])), im(c[0]), re(c[2]), im(c[3]), R(-re(c[3])), im(c[2])};
}

std::string gq_json(const GaussQ& z) { return "[\"" + z.re.get_str() + "\",\"" + z.im.get_str() + "\"]"; }

}  // namespace

MatQ dirac_gamma(int mu) {
  if (mu == 0) {
    MatQ m;
    m(0, 0) = 1;
    m(1, 1) = 1;
    m(2, 2) = -1;
    m(3, 3) = -1;
    return m;
  }
  return pauli_block(mu, 1);
}

MatQ dirac_gamma5() {
  // Lower-index matrices gamma_mu = eta_mu mu gamma^mu.
  MatQ g = dirac_gamma(0);
  for (int k = 1; k <= 3; ++k) g = g * (GaussQ(-1) * dirac_gamma(k));
  return g;
}

MatD to_complex(const MatQ& m) {
  MatD r;
  for (int i = 0; i < 16; ++i) r.a[i] = m.a[i].to_complex();
  return r;
}

MatQ rho_map(const MVQ& a) {
  const auto& im = images(a.sig()).img;
  MatQ r;
  for (const auto& [m, c] : a.terms()) r = r + GaussQ(c) * im[m];
  return r;
}

MatD rho_map(const MVD& a) {
  const auto& im = images(a.sig()).img;
  MatD r;
  for (const auto& [m, c] : a.terms()) r = r + cd(c) * to_complex(im[m]);
  return r;
}

int rho_bulk_rank() {
  const auto& im = images(bulk()).img;
  Matrix<Q> rows;
  for (const auto& m : im) {
    std::vector<Q> v;
    for (const auto& z : m.a) {
      v.push_back(z.re);
      v.push_back(z.im);
    }
    rows.push_back(v);
  }
  return rank(rows);
}

MVQ column_to_dhsf(const ColQ& c) {
  auto k = column_coords<Q>(c, [](const GaussQ& z) { return z.re; }, [](const GaussQ& z) { return z.im; });
  const auto& b = dhsf_basis();
  MVQ r(minkowski());
  for (int j = 0; j < 8; ++j) r.add(b.mask[j], k[j] * b.sign[j]);
  return r;
}

MVD column_to_dhsf(const ColD& c) {
  auto k = column_coords<double>(c, [](const cd& z) { return z.real(); }, [](const cd& z) { return z.imag(); });
  const auto& b = dhsf_basis();
  MVD r(minkowski());
  for (int j = 0; j < 8; ++j) r.add(b.mask[j], k[j] * b.sign[j]);
  return r;
}

namespace {
template <class T, class Z>
Column<Z> to_column_impl(const Multivector<T>& psi) {
  if (&psi.sig() != &minkowski()) throw std::invalid_argument("dhsf_to_column: element must live in R13");
  if (!parity(psi, 1).zero()) throw std::invalid_argument("dhsf_to_column: element is not even");
  const auto& b = dhsf_basis();
  std::array<T, 8> k;
  for (int j = 0; j < 8; ++j) k[j] = psi.coeff(b.mask[j]) * T(b.sign[j]);
  // k = (m0, m1, m2, m3, n0, n1, n2, n3)
  return {Z(k[0], k[3]), Z(T(-k[2]), k[1]), Z(k[4], k[7]), Z(T(-k[6]), k[5])};
}
}  // namespace

ColQ dhsf_to_column(const MVQ& psi) { return to_column_impl<Q, GaussQ>(psi); }
ColD dhsf_to_column(const MVD& psi) { return to_column_impl<double, cd>(psi); }

GaussQ complex_scalar(const MVQ& m) {
  const Catalog& c = catalog();
  MVQ g21 = c.gamma_dn[2] * c.gamma_dn[1];
  return {m.scalar(), -(m * g21).scalar()};
}

std::vector<Check> rho_checks(uint64_t seed, int samples) {
  std::vector<Check> out;
  const Catalog& c = catalog();
  const Signature& B = bulk();
  int bad = 0;
  if (!(rho_map(MVQ(B, Q(1))) == MatQ::identity())) ++bad;
  if (!(rho_map(MVQ(minkowski(), Q(1))) == MatQ::identity())) ++bad;
  out.push_back(make_check("repr.rho.unit", "rho(1) = identity", "exact", bad, 0));

  bad = 0;
  for (int mu = 0; mu < 4; ++mu) {
    if (!(rho_map(c.Gamma[mu]) == dirac_gamma(mu))) ++bad;
    if (!(rho_map(c.gamma_up[mu]) == dirac_gamma(mu))) ++bad;
    for (int nu = 0; nu < 4; ++nu) {
      MatQ lhs = rho_map(c.Gamma[mu] * c.Gamma[nu] + c.Gamma[nu] * c.Gamma[mu]);
      MatQ want = GaussQ(Q(mu == nu ? 2 * eta_mink(mu) : 0)) * MatQ::identity();
      if (!(lhs == want)) ++bad;
    }
  }
  if (!(rho_map(c.i_bulk) == kI * MatQ::identity())) ++bad;
  out.push_back(make_check("repr.rho.generators",
                           "rho(Gamma^mu) = gamma^mu, rho(Gamma^mu Gamma^nu + Gamma^nu Gamma^mu) = 2 eta^{mu nu}, rho(i) = i",
                           "exact", bad, 0));

  bad = 0;
  for (int A = 0; A < 5; ++A)
    for (int Bl = 0; Bl < 5; ++Bl) {
      MatQ lhs = rho_map(c.E_up[A]) * rho_map(c.E_up[Bl]) + rho_map(c.E_up[Bl]) * rho_map(c.E_up[A]);
      MatQ want = GaussQ(Q(A == Bl ? 2 * eta_bulk(A) : 0)) * MatQ::identity();
      if (!(lhs == want)) ++bad;
    }
  out.push_back(make_check("repr.rho.bulk_relations", "rho(E^A) rho(E^B) + rho(E^B) rho(E^A) = 2 eta^{AB}", "exact", bad, 0));

  long hom = parallel_count(size_t(samples), [&](size_t k) {
    Rng r(derive_seed(seed, "rho.homomorphism", k));
    const Signature& s = (k % 2 == 0) ? bulk() : minkowski();
    MVQ a = random_multivector<Q>(r, s, 0.4), b = random_multivector<Q>(r, s, 0.4);
    return !(rho_map(a * b) == rho_map(a) * rho_map(b));
  });
  out.push_back(make_check("repr.rho.homomorphism", "rho(ab) = rho(a) rho(b)", "exact", double(hom), 0,
                           std::to_string(samples) + " random pairs over both signatures"));

  int rk = rho_bulk_rank();
  out.push_back(make_check("repr.rho.injective", "the 32 blade images are real-linearly independent", "exact",
                           double(32 - rk), 0, "rank " + std::to_string(rk)));
  return out;
}

std::vector<Check> dictionary_check(uint64_t seed, int samples) {
  const Catalog& c = catalog();
  const Signature& M = minkowski();
  MVQ g21 = c.gamma_dn[2] * c.gamma_dn[1];
  MatQ g5 = dirac_gamma5();
  MatQ g0 = dirac_gamma(0);
  std::array<MatQ, 4> gdn;
  for (int mu = 0; mu < 4; ++mu) gdn[mu] = GaussQ(Q(eta_mink(mu))) * dirac_gamma(mu);

  auto random_column = [](Rng& r) {
    ColQ col;
    for (auto& z : col) z = GaussQ(r.rational(), r.rational());
    return col;
  };
  auto scale = [](const GaussQ& k, ColQ v) {
    for (auto& z : v) z = k * z;
    return v;
  };
  auto dot = [](const ColQ& a, const MatQ& m, const ColQ& b) {
    ColQ mb = act(m, b);
    GaussQ s(0);
    for (int i = 0; i < 4; ++i) s += a[i].conj() * mb[i];
    return s;
  };

  enum { kLineGamma, kLineI, kLineI5, kLineI5Printed, kLineBar, kLineDag, kLineConj, kLineRound, kLines };
  std::array<long, kLines> fails{};
  for (int k = 0; k < samples; ++k) {
    Rng r(derive_seed(seed, "dictionary", k));
    ColQ P = random_column(r), F = random_column(r);
    MVQ psi = column_to_dhsf(P), phi = column_to_dhsf(F);
    if (!(dhsf_to_column(psi) == P)) ++fails[kLineRound];
    for (int mu = 0; mu < 4; ++mu)
      if (!(act(gdn[mu], P) == dhsf_to_column(c.gamma_dn[mu] * psi * c.gamma_dn[0]))) {
        ++fails[kLineGamma];
        break;
      }
    if (!(scale(kI, P) == dhsf_to_column(psi * g21))) ++fails[kLineI];
    ColQ i5 = scale(kI, act(g5, P));
    if (!(i5 == dhsf_to_column(-(psi * c.sigma[2])))) ++fails[kLineI5];
    if (!(i5 == dhsf_to_column(psi * c.sigma[2]))) ++fails[kLineI5Printed];
    if (!(dot(P, g0, F) == complex_scalar(reversion(psi) * phi))) ++fails[kLineBar];
    if (!(dot(P, MatQ::identity(), F) == complex_scalar(c.gamma_dn[0] * reversion(psi) * c.gamma_dn[0] * phi)))
      ++fails[kLineDag];
    ColQ Pc = P;
    for (auto& z : Pc) z = z.conj();
    if (!(Pc == dhsf_to_column(-(c.gamma_dn[2] * psi * c.gamma_dn[2])))) ++fails[kLineConj];
  }

  // Fixed examples: column (1,0,0,0) <-> 1, n0 = 1 <-> sigma_3, real scalar under conjugation.
  int ex = 0;
  ColQ e1{GaussQ(1), GaussQ(0), GaussQ(0), GaussQ(0)}, e3{GaussQ(0), GaussQ(0), GaussQ(1), GaussQ(0)};
  if (!(column_to_dhsf(e1) == MVQ(M, Q(1)))) ++ex;
  if (!(column_to_dhsf(e3) == c.sigma[2])) ++ex;
  MVQ sc(M, Q(7, 3));
  if (!(-(c.gamma_dn[2] * sc * c.gamma_dn[2]) == sc)) ++ex;
  if (!(scale(kI, e1) == dhsf_to_column(MVQ(M, Q(1)) * g21))) ++ex;

  std::string n = std::to_string(samples) + " random column pairs";
  std::vector<Check> out;
  out.push_back(make_check("repr.column_roundtrip", "dhsf_to_column(column_to_dhsf(c)) = c", "exact", fails[kLineRound], 0, n));
  out.push_back(make_check("repr.column_examples", "(1,0,0,0) <-> 1; n0 = 1 <-> sigma_3; -gamma_2 s gamma_2 = s for scalar s",
                           "exact", ex, 0));
  out.push_back(make_check("repr.dictionary.gamma", "gamma_mu Psi <-> gamma_mu psi gamma_0", "exact", fails[kLineGamma], 0, n));
  out.push_back(make_check("repr.dictionary.i", "i Psi <-> psi gamma_21", "exact", fails[kLineI], 0, n));
  out.push_back(make_check("repr.dictionary.i_gamma5", "i gamma_5 Psi <-> -psi sigma_3 (gamma_5 = gamma_0 gamma_1 gamma_2 gamma_3)",
                           "exact", fails[kLineI5], 0, n));
  out.push_back(make_discrepancy("repr.dictionary.i_gamma5_printed_sign", "i gamma_5 Psi <-> +psi sigma_3", "exact",
                                 fails[kLineI5Printed], 0, fails[kLineI5] == 0,
                                 "holds with the opposite sign; no Dirac-type sign convention makes all six lines hold"));
  out.push_back(make_check("repr.dictionary.bar", "Psibar Phi = Psi^dagger gamma^0 Phi <-> <rev(psi) phi>_0 - i <rev(psi) phi gamma_21>_0",
                           "exact", fails[kLineBar], 0, n));
  out.push_back(make_check("repr.dictionary.dagger", "Psi^dagger Phi <-> complex scalar of gamma_0 rev(psi) gamma_0 phi", "exact",
                           fails[kLineDag], 0, n));
  out.push_back(make_check("repr.dictionary.conj", "Psi^* <-> -gamma_2 psi gamma_2", "exact", fails[kLineConj], 0, n));
  return out;
}

namespace {

struct TauPair {
  double s, p;
};

MVD tau_g() { return MVD::blade(minkowski(), 0b1111, 1.0); }

TakabayasiData decompose_from(const MVD& psi, double s, double p) {
  TakabayasiData d(psi.sig());
  d.rho = std::hypot(s, p);
  d.beta = std::atan2(p, s);
  if (d.beta == -M_PI) d.beta = M_PI;
  MVD phase = MVD(psi.sig(), std::cos(d.beta / 2)) - tau_g() * std::sin(d.beta / 2);
  d.R = phase * psi * (1.0 / std::sqrt(d.rho));
  return d;
}

void require_even_r13(const Signature& s, bool odd) {
  if (&s != &minkowski()) throw std::invalid_argument("takabayasi_decompose: element must live in R13");
  if (odd) throw std::invalid_argument("takabayasi_decompose: element is not even");
}

}  // namespace

TakabayasiData takabayasi_decompose(const MVQ& psi) {
  require_even_r13(psi.sig(), !parity(psi, 1).zero());
  MVQ n = psi * reversion(psi);
  Q s = n.coeff(0), p = n.coeff(0b1111);
  if (sgn(s) == 0 && sgn(p) == 0) throw SingularSpinor("psi rev(psi) = 0");
  return decompose_from(to_float(psi), s.get_d(), p.get_d());
}

TakabayasiData takabayasi_decompose(const MVD& psi) {
  require_even_r13(psi.sig(), !parity(psi, 1).zero());
  MVD n = psi * reversion(psi);
  double s = n.coeff(0), p = n.coeff(0b1111);
  double scale = std::max(1e-300, norm2(psi) * norm2(psi));
  if (std::hypot(s, p) <= 1e-14 * scale) throw SingularSpinor("psi rev(psi) = 0");
  return decompose_from(psi, s, p);
}

MVD takabayasi_reconstruct(const TakabayasiData& d) {
  MVD phase = MVD(d.R.sig(), std::cos(d.beta / 2)) + tau_g() * std::sin(d.beta / 2);
  return phase * d.R * std::sqrt(d.rho);
}

std::vector<Check> takabayasi_checks(uint64_t seed, int samples) {
  std::vector<Check> out;
  const Signature& M = minkowski();
  const Catalog& c = catalog();

  double ex = 0;
  TakabayasiData two = takabayasi_decompose(MVQ(M, Q(2)));
  ex = std::max({ex, std::fabs(two.rho - 4), std::fabs(two.beta), max_abs(two.R - MVD(M, 1.0))});
  TakabayasiData tau = takabayasi_decompose(MVQ::blade(M, 0b1111, Q(1)));
  ex = std::max({ex, std::fabs(tau.rho - 1), std::fabs(tau.beta - M_PI)});
  out.push_back(make_check("repr.takabayasi.examples", "psi = 2 -> (4, 0, 1); psi = tau -> beta = pi", "float", ex, 1e-12));

  long skipped = 0;
  double err = 0;
  for (int k = 0; k < samples; ++k) {
    Rng r(derive_seed(seed, "takabayasi", k));
    MVQ psi = random_even<Q>(r, M);
    TakabayasiData d(M);
    try {
      d = takabayasi_decompose(psi);
    } catch (const SingularSpinor&) {
      ++skipped;
      continue;
    }
    MVD back = takabayasi_reconstruct(d);
    MVD unit = d.R * reversion(d.R) - MVD(M, 1.0);
    err = std::max({err, max_abs(back - to_float(psi)) / std::max(1.0, max_abs(to_float(psi))), max_abs(unit)});
  }
  out.push_back(make_check("repr.takabayasi.roundtrip", "psi = rho^{1/2} e^{tau beta/2} R with R rev(R) = 1", "float", err,
                           1e-10, std::to_string(samples - skipped) + " invertible samples"));

  // Null inputs must raise.
  int missed = 0;
  std::vector<MVQ> null_inputs = {MVQ(M, Q(1)) + c.sigma[2], MVQ(M, Q(1)) - c.sigma[0],
                                  (MVQ(M, Q(1)) + c.sigma[2]) * (MVQ(M, Q(3)) + c.i_mink * c.sigma[0])};
  for (const auto& z : null_inputs) {
    try {
      takabayasi_decompose(z);
      ++missed;
    } catch (const SingularSpinor&) {
    }
  }
  out.push_back(make_check("repr.takabayasi.singular", "psi rev(psi) = 0 raises the singular-spinor error", "exact",
                           missed, 0, "fixtures 1 + sigma_3, 1 - sigma_1, (1 + sigma_3)(3 + i sigma_1)"));

  // One-frame change: psi -> psi u keeps rho and beta.
  double fr = 0;
  for (int k = 0; k < samples / 5 + 1; ++k) {
    Rng r(derive_seed(seed, "frame_change", k));
    MVD psi = to_float(random_even<Q>(r, M));
    MVD B = random_grade<double>(r, M, 2) * 0.3;
    MVD u = exp_bivector(B, 30);
    try {
      TakabayasiData a = takabayasi_decompose(psi), b = takabayasi_decompose(psi * u);
      fr = std::max({fr, std::fabs(a.rho - b.rho) / a.rho, std::fabs(std::remainder(a.beta - b.beta, 2 * M_PI))});
    } catch (const SingularSpinor&) {
    }
  }
  out.push_back(make_check("repr.frame_change_single", "psi -> psi u with u rev(u) = 1 leaves rho and beta unchanged",
                           "float", fr, 1e-10));
  return out;
}

std::vector<Check> generalized_spinor_checks(uint64_t seed, int samples) {
  std::vector<Check> out;
  const Catalog& c = catalog();
  const Signature& B = bulk();
  const uint32_t e4 = B.mask_of(4);

  auto random_even00 = [&](Rng& r) {
    MVQ a(B);
    for (uint32_t m = 0; m <= B.full_mask(); ++m)
      if (grade_of(m) % 2 == 0 && !(m & e4)) a.add(m, r.rational());
    return a;
  };
  auto gamma_odd = [&](const MVQ& z) {
    MVQ o(B);
    for (const auto& [m, v] : z.terms())
      if (m & e4) o.add(m, v);
    return o;
  };

  int ex = 0;
  MVQ psi1 = MVQ(B, Q(1)) * c.f41;
  if (!(psi1 == c.f41) || !(c.f41 * c.f41 == c.f41)) ++ex;
  out.push_back(make_check("repr.generalized.unit", "psi = 1 gives Psi = f41 and f41 f41 = f41", "exact", ex, 0));

  long fail_ideal = 0, fail_split = 0, fail_even = 0, fail_null = 0, fail_norm = 0;
  for (int k = 0; k < samples; ++k) {
    Rng r(derive_seed(seed, "generalized", k));
    MVQ psi = random_even00(r);
    MVQ Psi = psi * c.f41;
    if (!(Psi * c.f41 == Psi)) ++fail_ideal;
    MVQ Z0 = random_even00(r);
    MVQ Z = Z0 * (MVQ(B, Q(1)) + c.Gamma[0]);
    if (!(gamma_odd(Z) == Z0 * c.Gamma[0]) || !(Z - gamma_odd(Z) == Z0)) ++fail_split;
    // Phi = psi (1 + Gamma^0)/2 + xi^a Gamma_0 Gamma_a.
    MVQ Pe = psi * c.f_bulk;
    MVQ Xi(B);
    for (int a = 0; a < 4; ++a) Xi += c.Gamma_dn[0] * c.Gamma_dn[a] * r.rational();
    MVQ Phi = Pe + Xi;
    if (!parity(Phi, 1).zero()) ++fail_even;
    if (!(Pe * reversion(Pe)).zero()) ++fail_null;
    // Printed normalization bracket versus Phi rev(Phi).
    MVQ second = (reversion(psi) * (MVQ(B, Q(1)) - c.Gamma[0])) * Q(1, 2) - Xi;
    if (!(Phi * second == Phi * reversion(Phi))) ++fail_norm;
  }
  std::string n = std::to_string(samples) + " random samples";
  out.push_back(make_check("repr.generalized.ideal", "Psi = psi f41 satisfies Psi f41 = Psi", "exact", fail_ideal, 0, n));
  out.push_back(make_check("repr.generalized.odd_part", "Z = Z0 (1 + Gamma^0): Gamma-odd part = Z0 Gamma^0", "exact",
                           fail_split, 0, n));
  out.push_back(make_check("repr.generalized.phi_even", "Phi = psi (1 + Gamma^0)/2 + xi^a Gamma_0 Gamma_a is even", "exact",
                           fail_even, 0, n));
  out.push_back(make_check("repr.generalized.null_part", "(psi (1+Gamma^0)/2) rev(psi (1+Gamma^0)/2) = 0", "exact",
                           fail_null, 0, n));
  out.push_back(make_discrepancy(
      "repr.generalized.normalization_bracket",
      "[psi (1+Gamma^0)/2 + xi Gamma_0 Gamma_a][rev(psi)(1-Gamma^0)/2 - xi Gamma_0 Gamma_a] = Phi rev(Phi)", "exact",
      fail_norm, 0, fail_null == 0 && fail_even == 0,
      "the printed second bracket is not rev(Phi): reversion gives (1-Gamma^0) rev(psi)/2, and rev(Gamma_0 Gamma_0) = +1"));
  return out;
}

std::string to_json_text(const ColQ& c) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 4; ++i) os << (i ? "," : "") << gq_json(c[i]);
  os << "]";
  return os.str();
}

std::string to_json_text(const MatQ& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 4; ++i) {
    os << (i ? "," : "") << "[";
    for (int j = 0; j < 4; ++j) os << (j ? "," : "") << gq_json(m(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace dsga
