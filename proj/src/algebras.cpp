#include "dsga/algebras.hpp"

#include <cmath>
#include <stdexcept>

#include "dsga/parallel.hpp"
#include "dsga/random.hpp"

namespace dsga {

namespace {

MVQ half_one_plus(const MVQ& x) { return (MVQ(x.sig(), Q(1)) + x) * Q(1, 2); }

Catalog build_catalog() {
  const Signature& M = minkowski();
  const Signature& B = bulk();
  Catalog c{};
  for (int mu = 0; mu < 4; ++mu) {
    c.gamma_up[mu] = MVQ::vec(M, mu);
    c.gamma_dn[mu] = MVQ::vec(M, mu, Q(eta_mink(mu)));
  }
  for (int k = 1; k <= 3; ++k) c.sigma[k - 1] = c.gamma_dn[k] * c.gamma_dn[0];
  c.i_mink = c.gamma_dn[0] * c.gamma_dn[1] * c.gamma_dn[2] * c.gamma_dn[3];
  c.e_mink = half_one_plus(c.gamma_up[0]);
  for (int l = 0; l < 5; ++l) {
    c.E_up[l] = MVQ::vec(B, l);
    c.E_dn[l] = MVQ::vec(B, l, Q(eta_bulk(l)));
  }
  c.i_bulk = MVQ::product_of(B, {0, 1, 2, 3, 4});
  for (int mu = 0; mu < 4; ++mu) {
    c.Gamma[mu] = c.E_up[mu] * c.E_up[4];
    c.Gamma_dn[mu] = c.Gamma[mu] * Q(eta_mink(mu));
  }
  c.f_bulk = half_one_plus(c.Gamma[0]);
  c.f41 = c.f_bulk * half_one_plus(c.i_bulk * c.Gamma[2] * c.Gamma[1]);
  for (int k = 1; k <= 3; ++k) c.e3[k - 1] = MVQ::vec(euclid3(), k);
  return c;
}

// Count index pairs violating a b + b a = 2 g(a, b).
template <size_t N, class G>
int relation_failures(const std::array<MVQ, N>& a, const std::array<MVQ, N>& b, G metric) {
  int bad = 0;
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < N; ++j) {
      MVQ lhs = a[i] * b[j] + b[j] * a[i];
      if (!(lhs == MVQ(a[i].sig(), Q(2 * metric(int(i), int(j)))))) ++bad;
    }
  return bad;
}

std::vector<Q> flatten(const MVQ& a) {
  std::vector<Q> v(a.sig().full_mask() + 1, Q(0));
  for (const auto& [m, c] : a.terms()) v[m] = c;
  return v;
}

std::vector<Q> flatten(const Matrix<Q>& a) {
  std::vector<Q> v;
  for (const auto& row : a) v.insert(v.end(), row.begin(), row.end());
  return v;
}

Matrix<Q> matmul(const Matrix<Q>& a, const Matrix<Q>& b) {
  size_t n = a.size();
  Matrix<Q> r(n, std::vector<Q>(n, Q(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

Matrix<double> matmul(const Matrix<double>& a, const Matrix<double>& b) {
  size_t n = a.size();
  Matrix<double> r(n, std::vector<double>(n, 0.0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

Matrix<double> identity5() {
  Matrix<double> r(5, std::vector<double>(5, 0.0));
  for (int i = 0; i < 5; ++i) r[i][i] = 1.0;
  return r;
}

template <class G, class Comm, class Flat>
StructureTable extract(const std::vector<G>& gens, Comm comm, Flat flat) {
  std::vector<std::vector<Q>> basis;
  for (const auto& g : gens) basis.push_back(flat(g));
  size_t n = gens.size();
  StructureTable t(n, std::vector<std::vector<Q>>(n));
  for (size_t p = 0; p < n; ++p)
    for (size_t q = 0; q < n; ++q) {
      auto sol = solve_in_span(basis, flat(comm(gens[p], gens[q])));
      if (!sol) throw std::runtime_error("commutator leaves the generator span");
      t[p][q] = *sol;
    }
  return t;
}

}  // namespace

const Catalog& catalog() {
  static const Catalog c = build_catalog();
  return c;
}

const std::vector<std::pair<int, int>>& generator_pairs() {
  static const std::vector<std::pair<int, int>> pairs = [] {
    std::vector<std::pair<int, int>> v;
    const auto& L = bulk().labels();
    for (size_t i = 0; i < L.size(); ++i)
      for (size_t j = i + 1; j < L.size(); ++j) v.emplace_back(L[i], L[j]);
    return v;
  }();
  return pairs;
}

std::pair<int, int> pair_index(int a, int b) {
  const auto& P = generator_pairs();
  for (size_t k = 0; k < P.size(); ++k) {
    if (P[k] == std::make_pair(a, b)) return {int(k), 1};
    if (P[k] == std::make_pair(b, a)) return {int(k), -1};
  }
  return {-1, 0};
}

std::vector<Check> gamma_matrices_check() {
  const Catalog& c = catalog();
  std::vector<Check> out;
  auto eta_m = [](int i, int j) { return i == j ? eta_mink(i) : 0; };
  auto eta_b = [](int i, int j) { return i == j ? eta_bulk(i) : 0; };
  auto delta = [](int i, int j) { return i == j ? 1 : 0; };
  int bad = relation_failures(c.gamma_up, c.gamma_up, eta_m);
  out.push_back(make_check("algebras.generators.minkowski", "gamma^mu gamma^nu + gamma^nu gamma^mu = 2 eta^{mu nu}",
                           "exact", bad, 0, "16 index pairs"));
  bad = relation_failures(c.E_up, c.E_up, eta_b);
  out.push_back(make_check("algebras.generators.bulk", "E^A E^B + E^B E^A = 2 eta^{AB}, eta = diag(1,1,1,1,-1)",
                           "exact", bad, 0, "25 index pairs"));
  bad = relation_failures(c.Gamma, c.Gamma, eta_m);
  out.push_back(make_check("algebras.generators.Gamma", "Gamma^mu Gamma^nu + Gamma^nu Gamma^mu = 2 eta^{mu nu}",
                           "exact", bad, 0, "Gamma^mu = E^mu E^4, 16 index pairs"));
  bad = relation_failures(c.e3, c.e3, delta);
  out.push_back(make_check("algebras.generators.euclid3", "e_i e_j + e_j e_i = 2 delta_ij", "exact", bad, 0,
                           "9 index pairs"));
  bad = relation_failures(c.gamma_up, c.gamma_dn, delta);
  out.push_back(make_check("algebras.reciprocal_basis", "gamma^mu gamma_nu + gamma_nu gamma^mu = 2 delta^mu_nu",
                           "exact", bad, 0));

  int idem = 0;
  if (!(c.e_mink * c.e_mink == c.e_mink)) ++idem;
  if (!(c.f41 * c.f41 == c.f41)) ++idem;
  if (!(c.f_bulk * c.f_bulk == c.f_bulk)) ++idem;
  out.push_back(make_check("algebras.idempotents", "e e = e, f f = f, f41 f41 = f41", "exact", idem, 0));

  int central = 0;
  for (uint32_t m = 0; m <= bulk().full_mask(); ++m) {
    MVQ b = MVQ::blade(bulk(), m, Q(1));
    if (!(c.i_bulk * b == b * c.i_bulk)) ++central;
  }
  if (!(c.i_bulk * c.i_bulk == MVQ(bulk(), Q(-1)))) ++central;
  out.push_back(make_check("algebras.bulk_pseudoscalar_central", "i = E^0E^1E^2E^3E^4 commutes with all 32 blades, i^2 = -1",
                           "exact", central, 0));
  return out;
}

MVQ spin_generator(int a, int b) {
  const Catalog& c = catalog();
  return c.E_dn[a] * c.E_dn[b] * Q(1, 2);
}

Matrix<Q> so41_generator(int a, int b) {
  const Signature& s = bulk();
  int ia = s.index_of(a), ib = s.index_of(b);
  Matrix<Q> m(5, std::vector<Q>(5, Q(0)));
  for (int C = 0; C < 5; ++C)
    for (int D = 0; D < 5; ++D) {
      int etaD = s.square_at(D);
      Q v(0);
      if (C == ia && D == ib) v += etaD;
      if (C == ib && D == ia) v -= etaD;
      m[C][D] = v;
    }
  return m;
}

StructureTable spin_structure() {
  std::vector<MVQ> gens;
  for (auto [a, b] : generator_pairs()) gens.push_back(spin_generator(a, b));
  return extract(gens, [](const MVQ& x, const MVQ& y) { return x * y - y * x; },
                 [](const MVQ& x) { return flatten(x); });
}

StructureTable so41_structure() {
  std::vector<Matrix<Q>> gens;
  for (auto [a, b] : generator_pairs()) gens.push_back(so41_generator(a, b));
  return extract(
      gens,
      [](const Matrix<Q>& x, const Matrix<Q>& y) {
        Matrix<Q> p = matmul(x, y), q = matmul(y, x);
        for (size_t i = 0; i < p.size(); ++i)
          for (size_t j = 0; j < p.size(); ++j) p[i][j] -= q[i][j];
        return p;
      },
      [](const Matrix<Q>& x) { return flatten(x); });
}

StructureTable expected_structure(int overall_sign) {
  const auto& P = generator_pairs();
  size_t n = P.size();
  StructureTable t(n, std::vector<std::vector<Q>>(n, std::vector<Q>(n, Q(0))));
  auto eta = [](int x, int y) { return x == y ? eta_bulk(x) : 0; };
  for (size_t p = 0; p < n; ++p)
    for (size_t q = 0; q < n; ++q) {
      auto [A, B] = P[p];
      auto [C, D] = P[q];
      auto put = [&](int coef, int x, int y) {
        if (coef == 0 || x == y) return;
        auto [r, s] = pair_index(x, y);
        t[p][q][r] += Q(overall_sign * coef * s);
      };
      put(eta(B, C), A, D);
      put(eta(A, D), B, C);
      put(-eta(A, C), B, D);
      put(-eta(B, D), A, C);
    }
  return t;
}

Q table_max_diff(const StructureTable& a, const StructureTable& b) {
  Q m(0);
  for (size_t p = 0; p < a.size(); ++p)
    for (size_t q = 0; q < a[p].size(); ++q)
      for (size_t r = 0; r < a[p][q].size(); ++r) {
        Q d = abs(a[p][q][r] - b[p][q][r]);
        if (d > m) m = d;
      }
  return m;
}

namespace {

std::vector<Check> commutator_checks(const std::string& prefix, const std::string& sym, const StructureTable& t) {
  std::vector<Check> out;
  StructureTable plus = expected_structure(1), literal = expected_structure(-1);
  double d_plus = table_max_diff(t, plus).get_d();
  double d_lit = table_max_diff(t, literal).get_d();
  out.push_back(make_check(prefix + ".commutator_table",
                           "[" + sym + "_AB," + sym + "_CD] = eta_BC " + sym + "_AD + eta_AD " + sym + "_BC - eta_AC " +
                               sym + "_BD - eta_BD " + sym + "_AC",
                           "exact", d_plus, 0, "all 100 ordered generator pairs"));
  out.push_back(make_discrepancy(
      prefix + ".commutator_table_printed_sign",
      "[" + sym + "_AB," + sym + "_CD] = eta_AC " + sym + "_BD + eta_BD " + sym + "_AC - eta_BC " + sym + "_AD - eta_AD " +
          sym + "_BC",
      "exact", d_lit, 0, d_plus == 0.0,
      "every entry equals minus this form; the table above is the one realized"));
  // Spot entries.
  auto [p12, s12] = pair_index(1, 2);
  auto [p23, s23] = pair_index(2, 3);
  auto [p13, s13] = pair_index(1, 3);
  (void)s12;
  (void)s23;
  int bad = 0;
  for (size_t r = 0; r < t.size(); ++r) {
    if (sgn(t[p12][p12][r]) != 0) ++bad;
    Q want = (int(r) == p13) ? Q(s13 * eta_bulk(2)) : Q(0);
    if (t[p12][p23][r] != want) ++bad;
  }
  out.push_back(make_check(prefix + ".commutator_examples",
                           "[" + sym + "_12," + sym + "_12] = 0 and [" + sym + "_12," + sym + "_23] = eta_22 " + sym + "_13",
                           "exact", bad, 0));
  return out;
}

}  // namespace

std::vector<Check> spin_commutator_check() { return commutator_checks("algebras.spin", "S", spin_structure()); }

std::vector<Check> so41_commutator_check() { return commutator_checks("algebras.so41", "M", so41_structure()); }

Matrix<double> exp_so41(const Matrix<double>& chi) {
  if (chi.size() != 5) throw std::invalid_argument("exp_so41: chi must be 5x5");
  for (int a = 0; a < 5; ++a) {
    if (chi[a].size() != 5) throw std::invalid_argument("exp_so41: chi must be 5x5");
    for (int b = 0; b < 5; ++b)
      if (chi[a][b] != -chi[b][a]) throw std::invalid_argument("exp_so41: chi is not antisymmetric");
  }
  Matrix<double> G(5, std::vector<double>(5, 0.0));
  const auto& L = bulk().labels();
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) {
      Matrix<Q> m = so41_generator(L[a], L[b]);
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) G[i][j] += chi[a][b] * m[i][j].get_d();
    }
  double norm = 0;
  for (auto& row : G) {
    double s = 0;
    for (double v : row) s += std::fabs(v);
    norm = std::max(norm, s);
  }
  int sq = 0;
  while (norm > 0.5) {
    norm /= 2;
    ++sq;
  }
  double scale = std::ldexp(1.0, -sq);
  for (auto& row : G)
    for (double& v : row) v *= scale;
  Matrix<double> acc = identity5(), term = identity5();
  for (int k = 1; k <= 20; ++k) {
    term = matmul(term, G);
    for (auto& row : term)
      for (double& v : row) v /= k;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) acc[i][j] += term[i][j];
  }
  for (int i = 0; i < sq; ++i) acc = matmul(acc, acc);
  return acc;
}

double so41_membership_residual(const Matrix<double>& L) {
  double r = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      double s = 0;
      for (int k = 0; k < 5; ++k) s += L[k][i] * bulk().square_at(k) * L[k][j];
      double g = (i == j) ? bulk().square_at(i) : 0.0;
      r = std::max(r, std::fabs(s - g));
    }
  return r;
}

MVD spin_element(const Matrix<double>& chi) {
  const Signature& s = bulk();
  MVD B(s);
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) {
      double lowered = chi[a][b] * s.square_at(a) * s.square_at(b);
      B += MVD::blade(s, (1u << a) | (1u << b), 0.5 * lowered);
    }
  return exp_bivector(B, 30);
}

MVQ adjoint_action(const MVQ& u, const MVQ& a) {
  if (!(u * reversion(u) == MVQ(u.sig(), Q(1)))) throw std::invalid_argument("adjoint_action: u is not a unit versor");
  return u * a * reversion(u);
}

MVD adjoint_action(const MVD& u, const MVD& a, double tol) {
  MVD n = u * reversion(u) - MVD(u.sig(), 1.0);
  if (max_abs(n) >= tol) throw std::invalid_argument("adjoint_action: u is not a unit versor");
  return u * a * reversion(u);
}

Matrix<double> adjoint_matrix(const MVD& u) {
  const Signature& s = u.sig();
  Matrix<double> A(5, std::vector<double>(5, 0.0));
  for (int D = 0; D < 5; ++D) {
    MVD r = adjoint_action(u, MVD::blade(s, 1u << D, double(s.square_at(D))));
    for (int C = 0; C < 5; ++C) A[C][D] = r.coeff(1u << C) * s.square_at(C);
  }
  return A;
}

std::vector<Check> algebra_property_checks(uint64_t seed, int samples) {
  std::vector<Check> out;
  const Signature& s = bulk();
  Matrix<double> zero(5, std::vector<double>(5, 0.0));

  Matrix<double> L0 = exp_so41(zero);
  double r0 = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) r0 = std::max(r0, std::fabs(L0[i][j] - (i == j ? 1.0 : 0.0)));
  out.push_back(make_check("algebras.exp_so41.identity", "exp(0) = 1 and satisfies L^t G L = G", "float",
                           std::max(r0, so41_membership_residual(L0)), 0));

  const double theta = 0.7;
  int i1 = s.index_of(1), i2 = s.index_of(2);
  Matrix<double> chi = zero;
  chi[i1][i2] = theta;
  chi[i2][i1] = -theta;
  Matrix<double> R = exp_so41(chi);
  Matrix<double> closed = identity5();
  closed[i1][i1] = std::cos(theta);
  closed[i1][i2] = std::sin(theta);
  closed[i2][i1] = -std::sin(theta);
  closed[i2][i2] = std::cos(theta);
  double rr = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) rr = std::max(rr, std::fabs(R[i][j] - closed[i][j]));
  rr = std::max(rr, so41_membership_residual(R));
  out.push_back(make_check("algebras.exp_so41.rotation12", "chi^{12} = theta gives the closed-form 1-2 rotation block",
                           "float", rr, 1e-12));

  auto random_chi = [](Rng& r, double amp) {
    Matrix<double> c(5, std::vector<double>(5, 0.0));
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b) {
        c[a][b] = r.uniform(-amp, amp);
        c[b][a] = -c[a][b];
      }
    return c;
  };

  double mem = parallel_max(size_t(samples), [&](size_t k) {
    Rng r(derive_seed(seed, "exp_so41.membership", k));
    return so41_membership_residual(exp_so41(random_chi(r, 1.0)));
  });
  out.push_back(make_check("algebras.exp_so41.membership", "L^t G L = G for L = exp(chi^{AB} M_AB / 2)", "float", mem,
                           1e-9, std::to_string(samples) + " random chi"));

  MVQ a1 = MVQ::vec(s, 3, Q(5, 2)) + MVQ::blade(s, 0b10011, Q(-1, 3));
  out.push_back(make_check("algebras.adjoint.identity", "Ad_1(a) = a", "exact",
                           adjoint_action(MVQ(s, Q(1)), a1) == a1 ? 0.0 : 1.0, 0));

  MVD u = exp_bivector(MVD::product_of(s, {1, 2}, theta / 2), 30);
  MVD img = adjoint_action(u, MVD::vec(s, 1));
  MVD want = MVD::vec(s, 1, std::cos(theta)) - MVD::vec(s, 2, std::sin(theta));
  Matrix<double> A = adjoint_matrix(spin_element(chi));
  double rot = max_abs(img - want);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) rot = std::max(rot, std::fabs(A[i][j] - R[i][j]));
  out.push_back(make_check("algebras.adjoint.rotation12",
                           "u = exp(theta E^1E^2 / 2): Ad_u(E^1) = cos(theta) E^1 - sin(theta) E^2, matching exp_so41",
                           "float", rot, 1e-12));

  double cover = parallel_max(size_t(samples), [&](size_t k) {
    Rng r(derive_seed(seed, "adjoint.double_cover", k));
    Matrix<double> c = random_chi(r, 0.8);
    Matrix<double> Ad = adjoint_matrix(spin_element(c)), Lm = exp_so41(c);
    double d = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) d = std::max(d, std::fabs(Ad[i][j] - Lm[i][j]));
    return d;
  });
  out.push_back(make_check("algebras.adjoint.double_cover",
                           "Ad_u(E_D) = Lambda^C_D E_C for u = exp(chi_AB E^A E^B / 4), Lambda = exp(chi^{AB} M_AB / 2)",
                           "float", cover, 1e-9, std::to_string(samples) + " random parameter sets incl. boosts"));

  double iso = parallel_max(size_t(samples), [&](size_t k) {
    Rng r(derive_seed(seed, "adjoint.isometry", k));
    MVD uu = spin_element(random_chi(r, 1.0));
    MVD a = random_grade<double>(r, s, 1);
    MVD b = adjoint_action(uu, a);
    double before = (a * a).scalar(), after = (b * b).scalar();
    double grade_leak = max_abs(b - grade(b, 1));
    return std::max(grade_leak, std::fabs(after - before) / std::max(1.0, std::fabs(before)));
  });
  out.push_back(make_check("algebras.adjoint.isometry", "Ad_u maps vectors to vectors and preserves eta(a,a)", "float",
                           iso, 1e-10, std::to_string(samples) + " random (u, a)"));
  return out;
}

}  // namespace dsga
