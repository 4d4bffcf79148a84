#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "dsga/algebras.hpp"
#include "dsga/geometry.hpp"
#include "dsga/polyfield.hpp"
#include "dsga/report.hpp"

namespace dsga {

struct InvalidParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Radius, mass and spin. lambda^2 = m^2 + 4 sqrt(3) m / ell on the default branch,
// m^2 - 4 sqrt(3) m / ell on the alternate branch (valid only for m >= 4 sqrt(3) / ell).
struct OperatorParams {
  double ell = 1.0;
  double m = 1.0;
  double s = 0.5;
  bool alternate_branch = false;

  double lambda_squared() const;
  double lambda() const { return std::sqrt(lambda_squared()); }
  // DHESS2 constant; identified with lambda.
  double kappa() const { return lambda(); }
};

template <class T> const Multivector<T>& e21() {
  static const Multivector<T> v = Multivector<T>::product_of(bulk(), {2, 1});
  return v;
}
template <class T> const Multivector<T>& e12() {
  static const Multivector<T> v = Multivector<T>::product_of(bulk(), {1, 2});
  return v;
}
// Basis bivector E^A E^B of generator pair p.
template <class T> const Multivector<T>& pair_bivector(int p) {
  static const std::vector<Multivector<T>> v = [] {
    std::vector<Multivector<T>> r;
    for (auto [a, b] : generator_pairs()) r.push_back(Multivector<T>::product_of(bulk(), {a, b}));
    return r;
  }();
  return v.at(p);
}

template <class T> void require_bulk(const PolyField<T>& f) {
  if (f.domain() != Domain::Bulk) throw DomainMismatch("bulk field required, got a chart field");
  if (&f.sig() != &bulk()) throw SignatureMismatch("bulk field must live in R41");
}
template <class T> void require_chart(const PolyField<T>& f) {
  if (f.domain() != Domain::Chart) throw DomainMismatch("chart field required, got a bulk field");
}

template <class T> Polynomial<T> bulk_coordinate(int label, int lower = 0) {
  return Polynomial<T>::var(bulk_slot(label), T(lower ? eta_bulk(label) : 1));
}

// P_A phi = d_A phi E^2 E^1.
template <class T> PolyField<T> momentum_op(int a, const PolyField<T>& f) {
  require_bulk(f);
  return f.derivative(bulk_slot(a)).right(e21<T>());
}

// L_AB phi = eta_AC X^C P_B phi - eta_BC X^C P_A phi.
template <class T> PolyField<T> angular_op(int a, int b, const PolyField<T>& f) {
  return momentum_op(b, f).times(bulk_coordinate<T>(a, 1)) - momentum_op(a, f).times(bulk_coordinate<T>(b, 1));
}

// L_AB phi for all generator pairs, sharing the five momenta.
template <class T> std::vector<PolyField<T>> angular_components(const PolyField<T>& f) {
  require_bulk(f);
  std::array<PolyField<T>, 5> P{f, f, f, f, f};
  for (int l = 0; l < 5; ++l) P[l] = momentum_op(l, f);
  std::vector<PolyField<T>> out;
  for (auto [a, b] : generator_pairs())
    out.push_back(P[b].times(bulk_coordinate<T>(a, 1)) - P[a].times(bulk_coordinate<T>(b, 1)));
  return out;
}

// L phi = (1/2) E^A E^B L_AB phi, summed over all A, B.
template <class T> PolyField<T> L_total(const PolyField<T>& f) {
  auto Lc = angular_components(f);
  PolyField<T> r(f.sig(), f.domain());
  for (size_t p = 0; p < Lc.size(); ++p) r += Lc[p].left(pair_bivector<T>(p));
  return r;
}

// L(L phi) grouped by the grade of E^A E^B E^C E^D: scalar (contraction), grade 2
// (commutator of the L_AB) and grade 4 (wedge).
template <class T>
struct LSplit {
  PolyField<T> contraction, commutator, wedge;
  PolyField<T> sum() const { return contraction + commutator + wedge; }
};

template <class T> LSplit<T> L_squared_split(const PolyField<T>& f) {
  auto Lc = angular_components(f);
  LSplit<T> s{PolyField<T>(f.sig(), f.domain()), PolyField<T>(f.sig(), f.domain()), PolyField<T>(f.sig(), f.domain())};
  const size_t n = Lc.size();
  for (size_t j = 0; j < n; ++j) {
    auto LLj = angular_components(Lc[j]);
    for (size_t i = 0; i < n; ++i) {
      Multivector<T> bb = pair_bivector<T>(i) * pair_bivector<T>(j);
      Multivector<T> g0 = grade(bb, 0), g2 = grade(bb, 2), g4 = grade(bb, 4);
      if (!g0.zero()) s.contraction += LLj[i].left(g0);
      if (!g2.zero()) s.commutator += LLj[i].left(g2);
      if (!g4.zero()) s.wedge += LLj[i].left(g4);
    }
  }
  return s;
}

template <class T> PolyField<T> L_squared(const PolyField<T>& f) { return L_total(L_total(f)); }

// -(1/2) L_AB L^AB phi over all ordered A, B.
template <class T> PolyField<T> contraction_by_components(const PolyField<T>& f) {
  PolyField<T> r(f.sig(), f.domain());
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      if (a == b) continue;
      PolyField<T> inner = angular_op(a, b, f).scaled(T(eta_bulk(a) * eta_bulk(b)));
      r -= angular_op(a, b, inner).scaled(T(1) / T(2));
    }
  return r;
}

// Grade-2 part of L(L phi) in closed form: 3 (L phi) E^2 E^1.
template <class T> PolyField<T> commutator_closed_form(const PolyField<T>& f) {
  return L_total(f).right(e21<T>()).scaled(T(3));
}

template <class T> bool tangency_check(const PolyField<T>& f) {
  const uint32_t m4 = f.sig().mask_of(4);
  for (const auto& [m, p] : f.terms())
    if (m & m4) return false;
  return true;
}

// Largest coefficient magnitude of a field.
template <class T> double max_coeff(const PolyField<T>& f) {
  double r = 0;
  for (const auto& [m, p] : f.terms())
    for (const auto& [mono, c] : p.terms()) r = std::max(r, std::fabs(to_double(c)));
  return r;
}
// max|a - b| / max(1, max|a|, max|b|).
template <class T> double field_rel_diff(const PolyField<T>& a, const PolyField<T>& b) {
  double scale = std::max({1.0, max_coeff(a), max_coeff(b)});
  return max_coeff(a - b) / scale;
}

// Float-only: sqrt(3) enters both.
FieldD wedge_constraint_residual(const FieldD& f, const OperatorParams& p);
FieldD fourth_order_residual(const FieldD& f, const OperatorParams& p);

struct Dhess1Result {
  FieldD residual;
  bool tangent;
};
Dhess1Result dhess1_residual(const FieldD& f, const OperatorParams& p);

struct CasimirResult {
  MVQ FF, F_dot_F, F_contract_F, W;
  Q W_dot_W;
  bool scalar_product_is_scalar = false;
  bool three_way = false;
};
// F homogeneous of grade 4 in R41; W = star(F) / (8 ell).
CasimirResult casimir2_identity_check(const MVQ& F, const Q& ell);

// Chart-coordinate operators on fields over chart slots x^0..x^3 with bulk-algebra values.
// L_ab phi = sum_nu c_nu(x) d_nu phi E^2 E^1 with c from the projective expressions.
template <class T> std::array<Polynomial<T>, 4> chart_coefficients(int a, int b, const T& ell) {
  using P = Polynomial<T>;
  std::array<P, 4> c;
  if (a == 4 || b == 4) {
    int alpha = a == 4 ? b : a;
    T sgn_ = a == 4 ? T(-1) : T(1);
    P s2 = P::var(0) * P::var(0) - P::var(1) * P::var(1) - P::var(2) * P::var(2) - P::var(3) * P::var(3);
    T inv4l = T(1) / (T(4) * ell);
    for (int nu = 0; nu < 4; ++nu) {
      P term = P::var(alpha, T(2 * eta_mink(alpha))) * P::var(nu);
      if (nu == alpha) term -= s2;
      P cn = term * (-inv4l);
      if (nu == alpha) cn += P(ell);
      c[nu] = cn * sgn_;
    }
  } else {
    c[b] = P::var(a, T(-eta_mink(a)));
    c[a] = P::var(b, T(eta_mink(b)));
  }
  return c;
}

template <class T> PolyField<T> projective_L(int a, int b, const PolyField<T>& f, const T& ell) {
  require_chart(f);
  auto c = chart_coefficients<T>(a, b, ell);
  PolyField<T> r(f.sig(), f.domain());
  for (int nu = 0; nu < 4; ++nu)
    if (!c[nu].zero()) r += f.derivative(nu).times(c[nu]);
  return r.right(e21<T>());
}

// Pointwise form from first-order jets d_nu phi at x.
template <class T>
Multivector<T> projective_L_at(int a, int b, const std::array<Multivector<T>, 4>& dphi, const std::array<T, 4>& x,
                               const T& ell) {
  auto c = chart_coefficients<T>(a, b, ell);
  std::array<T, kVars> pt{x[0], x[1], x[2], x[3], T(0)};
  Multivector<T> r(bulk());
  for (int nu = 0; nu < 4; ++nu)
    if (!c[nu].zero()) r += dphi[nu] * c[nu].eval(pt);
  return r * e21<T>();
}

// phi = varphi + (1/ell) Omega^2 E_4 E_alpha x^alpha lam with lam rev(lam) = -1/(1 - (X^4)^2/ell^2).
MVD constrained_ansatz_at(const MVD& varphi, const std::array<double, 4>& x, double ell);
// The pointwise lambda factor: sqrt(c) for c > 0, sqrt(|c|) E^0 E^4 for c < 0.
MVD ansatz_lambda_factor(const std::array<double, 4>& x, double ell);

struct LimitRow {
  double ell, lambda, deviation;
};
struct LimitResult {
  std::vector<LimitRow> rows;
  double slope = 0;
  bool decreasing = false;
};
// DHESS residual (1/ell) L varphi - lambda varphi with chart operators versus the
// DHE residual Gamma^alpha d_alpha varphi E^2 E^1 - m varphi at fixed sample points.
LimitResult limit_sweep(const FieldD& varphi, double m, const std::vector<double>& ells,
                        const std::vector<std::array<double, 4>>& points, bool parallel = true);

// Initial phi for sweeps: a chart field valued in the left ideal of (1 + Gamma^0)/2.
FieldD limit_family(uint64_t seed);
std::vector<std::array<double, 4>> limit_points(uint64_t seed, int n);

struct ClassicalState {
  MVQ x, p;
  Q ell;
  // Throws when x.x != ell^2 or x.p != 0.
  ClassicalState(MVQ x_, MVQ p_, Q ell_);
  MVQ l() const { return wedge(x, p); }
};

struct ClassicalReport {
  int failures = 0;
  std::vector<std::string> failed;
};
ClassicalReport classical_identities(const ClassicalState& s);

// Check groups.
std::vector<Check> operator_basic_checks(uint64_t seed, int samples);
std::vector<Check> operator_realization_checks(uint64_t seed, int samples);
std::vector<Check> split_checks(uint64_t seed, int samples);
std::vector<Check> casimir_checks(uint64_t seed, int samples);
std::vector<Check> factorization_checks(uint64_t seed, int samples, const OperatorParams& p, double tol);
std::vector<Check> dhess2_checks(uint64_t seed, int configs, int points, const OperatorParams& p, double inv_tol,
                                 double agree_tol);
std::vector<Check> chart_operator_checks(uint64_t seed, int samples);
std::vector<Check> ansatz_checks();
std::vector<Check> limit_checks(uint64_t seed, double m, double slope_max);
std::vector<Check> dhe_checks(uint64_t seed, int samples);
std::vector<Check> classical_checks(uint64_t seed, int samples);

}  // namespace dsga
