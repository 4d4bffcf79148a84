#pragma once

#include <array>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "dsga/algebras.hpp"
#include "dsga/polynomial.hpp"
#include "dsga/report.hpp"

namespace dsga {

struct AbsoluteHit : std::domain_error {
  using std::domain_error::domain_error;
};
struct NorthPole : std::domain_error {
  using std::domain_error::domain_error;
};

// Bulk coordinates are stored by bulk label index: X[0..3] = X^1..X^4, X[4] = X^0.
template <class T>
struct ChartPoint {
  T ell;
  std::array<T, 4> x;  // x^0..x^3
  T sigma2;
  T omega;
  std::array<T, 5> X;

  T bulk(int label) const { return X[label == 0 ? 4 : label - 1]; }
};

inline int bulk_slot(int label) { return label == 0 ? 4 : label - 1; }

template <class T> bool absolute_hit(const T& sigma2, const T& ell, double tol = 1e-12) {
  T d = sigma2 - T(4) * ell * ell;
  if constexpr (Coeff<T>::exact) {
    (void)tol;
    return sgn(d) == 0;
  } else {
    return std::fabs(d) <= tol * 4 * ell * ell;
  }
}

template <class T> T sigma_squared(const std::array<T, 4>& x) {
  return x[0] * x[0] - x[1] * x[1] - x[2] * x[2] - x[3] * x[3];
}

template <class T> ChartPoint<T> embed(const std::array<T, 4>& x, const T& ell) {
  if (!(ell > T(0))) throw std::invalid_argument("embed: radius must be positive");
  ChartPoint<T> p;
  p.ell = ell;
  p.x = x;
  p.sigma2 = sigma_squared(x);
  if (absolute_hit(p.sigma2, ell)) throw AbsoluteHit("absolute: sigma^2 = 4 ell^2");
  T q = p.sigma2 / (T(4) * ell * ell);
  p.omega = T(1) / (T(1) - q);
  for (int mu = 0; mu < 4; ++mu) p.X[bulk_slot(mu)] = p.omega * x[mu];
  p.X[bulk_slot(4)] = -ell * p.omega * (T(1) + q);
  return p;
}

// Inverse chart: Omega = (1 - X^4/ell)/2, x^mu = X^mu / Omega.
template <class T> std::array<T, 4> unembed(const std::array<T, 5>& X, const T& ell, double tol = 1e-12) {
  const T& X4 = X[bulk_slot(4)];
  T d = X4 - ell;
  bool pole;
  if constexpr (Coeff<T>::exact) {
    (void)tol;
    pole = sgn(d) == 0;
  } else {
    pole = std::fabs(d) <= tol * ell;
  }
  if (pole) throw NorthPole("north pole: X^4 = ell is outside the chart");
  T omega = (T(1) - X4 / ell) / T(2);
  std::array<T, 4> x;
  for (int mu = 0; mu < 4; ++mu) x[mu] = X[bulk_slot(mu)] / omega;
  return x;
}

template <class T> T pseudo_sphere_residual(const std::array<T, 5>& X, const T& ell) {
  T s(0);
  for (int i = 0; i < 5; ++i) s += T(bulk().square_at(i)) * X[i] * X[i];
  return s - ell * ell;
}

// Ratio of chart polynomials.
template <class T>
struct RationalFunction {
  Polynomial<T> num, den;
  RationalFunction derivative(int slot) const {
    return {num.derivative(slot) * den - num * den.derivative(slot), den * den};
  }
  T eval(const std::array<T, kVars>& x) const { return num.eval(x) / den.eval(x); }
};

// Embedding components as rational functions of x (numeric ell), by bulk label index.
template <class T> std::array<RationalFunction<T>, 5> embedding_functions(const T& ell) {
  Polynomial<T> s2 = Polynomial<T>::var(0) * Polynomial<T>::var(0);
  for (int k = 1; k < 4; ++k) s2 -= Polynomial<T>::var(k) * Polynomial<T>::var(k);
  T four_l2 = T(4) * ell * ell;
  Polynomial<T> den = Polynomial<T>(four_l2) - s2;
  std::array<RationalFunction<T>, 5> f;
  for (int mu = 0; mu < 4; ++mu) f[bulk_slot(mu)] = {Polynomial<T>::var(mu, four_l2), den};
  f[bulk_slot(4)] = {(Polynomial<T>(four_l2) + s2) * T(-ell), den};
  return f;
}

// g_{mu nu} = -J^A_mu eta_AB J^B_nu from the exact Jacobian of the chart.
template <class T> std::array<std::array<T, 4>, 4> induced_metric(const std::array<T, 4>& x, const T& ell) {
  if (absolute_hit(sigma_squared(x), ell)) throw AbsoluteHit("absolute: sigma^2 = 4 ell^2");
  auto f = embedding_functions(ell);
  std::array<T, kVars> pt{x[0], x[1], x[2], x[3], T(0)};
  std::array<std::array<T, 4>, 5> J;
  for (int a = 0; a < 5; ++a)
    for (int mu = 0; mu < 4; ++mu) J[a][mu] = f[a].derivative(mu).eval(pt);
  std::array<std::array<T, 4>, 4> g;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      T s(0);
      for (int a = 0; a < 5; ++a) s += T(bulk().square_at(a)) * J[a][mu] * J[a][nu];
      g[mu][nu] = -s;
    }
  return g;
}

// Vector field with polynomial components over bulk slots.
struct PolyVectorField {
  std::array<PolyQ, 5> c;
  PolyQ apply(const PolyQ& f) const;
  friend bool operator==(const PolyVectorField& a, const PolyVectorField& b) { return a.c == b.c; }
};

PolyVectorField bracket(const PolyVectorField& u, const PolyVectorField& v);
// xi_AB = eta_AC X^C d/dX^B - eta_BC X^C d/dX^A.
PolyVectorField killing_field(int a, int b);
StructureTable killing_structure();

std::vector<Check> killing_checks();
std::vector<Check> lie_triple_agreement();
std::vector<Check> chart_checks(uint64_t seed, int points, bool parallel = true);
// Worst per-point residual of the chart suite; used by the serial/parallel comparison.
double chart_sweep(uint64_t seed, int points, bool parallel);
std::vector<Check> chart_examples();

enum class Region { Inside, Absolute, Outside };
const char* region_name(Region r);
Region classify(double t, double x1, double ell, double tol = 1e-12);
// Grid over [-extent, extent]^2 in (t, x^1) with the given resolution per axis.
void emit_chart_grid(std::ostream& os, double ell, double extent, int resolution, bool lightlike);

}  // namespace dsga
