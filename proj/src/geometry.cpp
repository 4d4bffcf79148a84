#include "dsga/geometry.hpp"

#include <cmath>
#include <cstdio>

#include "dsga/random.hpp"

namespace dsga {

PolyQ PolyVectorField::apply(const PolyQ& f) const {
  PolyQ r;
  for (int i = 0; i < 5; ++i)
    if (!c[i].zero()) r += c[i] * f.derivative(i);
  return r;
}

PolyVectorField bracket(const PolyVectorField& u, const PolyVectorField& v) {
  PolyVectorField r;
  for (int i = 0; i < 5; ++i) r.c[i] = u.apply(v.c[i]) - v.apply(u.c[i]);
  return r;
}

PolyVectorField killing_field(int a, int b) {
  if (a == b) throw std::invalid_argument("killing_field: A = B");
  const Signature& s = bulk();
  int ia = s.index_of(a), ib = s.index_of(b);
  PolyVectorField f;
  f.c[ib] += PolyQ::var(ia, Q(s.square_at(ia)));
  f.c[ia] -= PolyQ::var(ib, Q(s.square_at(ib)));
  return f;
}

namespace {

// Linear vector field -> 25 coefficients (component i, variable j).
std::vector<Q> flatten_linear(const PolyVectorField& f) {
  std::vector<Q> v(25, Q(0));
  for (int i = 0; i < 5; ++i)
    for (const auto& [m, c] : f.c[i].terms()) {
      int deg = 0, var = -1;
      for (int j = 0; j < kVars; ++j) {
        deg += m[j];
        if (m[j]) var = j;
      }
      if (deg != 1) throw std::logic_error("vector field is not linear");
      v[5 * i + var] = c;
    }
  return v;
}

}  // namespace

StructureTable killing_structure() {
  std::vector<PolyVectorField> gens;
  std::vector<std::vector<Q>> basis;
  for (auto [a, b] : generator_pairs()) {
    gens.push_back(killing_field(a, b));
    basis.push_back(flatten_linear(gens.back()));
  }
  size_t n = gens.size();
  StructureTable t(n, std::vector<std::vector<Q>>(n));
  for (size_t p = 0; p < n; ++p)
    for (size_t q = 0; q < n; ++q) {
      auto sol = solve_in_span(basis, flatten_linear(bracket(gens[p], gens[q])));
      if (!sol) throw std::runtime_error("bracket leaves the Killing span");
      t[p][q] = *sol;
    }
  return t;
}

std::vector<Check> killing_checks() {
  std::vector<Check> out;
  StructureTable t = killing_structure();
  double d_plus = table_max_diff(t, expected_structure(1)).get_d();
  double d_lit = table_max_diff(t, expected_structure(-1)).get_d();
  out.push_back(make_check("geometry.killing.bracket_table",
                           "[xi_AB, xi_CD] = eta_BC xi_AD + eta_AD xi_BC - eta_AC xi_BD - eta_BD xi_AC", "exact", d_plus,
                           0, "all 100 ordered pairs, exact polynomial brackets"));
  out.push_back(make_discrepancy("geometry.killing.bracket_table_printed_sign",
                                 "[xi_AB, xi_CD] = eta_AC xi_BD + eta_BD xi_AC - eta_BC xi_AD - eta_AD xi_BC", "exact",
                                 d_lit, 0, d_plus == 0.0, "every entry equals minus this form"));

  int ex = 0;
  PolyVectorField x12 = killing_field(1, 2), x23 = killing_field(2, 3), x13 = killing_field(1, 3);
  PolyVectorField zero;
  if (!(bracket(x12, x12) == zero)) ++ex;
  PolyVectorField want;
  for (int i = 0; i < 5; ++i) want.c[i] = x13.c[i] * Q(eta_bulk(2));
  if (!(bracket(x12, x23) == want)) ++ex;
  out.push_back(make_check("geometry.killing.examples", "[xi_12, xi_12] = 0, [xi_12, xi_23] = eta_22 xi_13", "exact", ex, 0));

  const Signature& s = bulk();
  int bad_killing = 0, bad_tangent = 0;
  PolyQ quad;
  for (int i = 0; i < 5; ++i) quad += PolyQ::var(i) * PolyQ::var(i) * Q(s.square_at(i));
  quad -= PolyQ(Q(7, 3) * Q(7, 3));
  for (auto [a, b] : generator_pairs()) {
    PolyVectorField f = killing_field(a, b);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        PolyQ sym = f.c[j].derivative(i) * Q(s.square_at(j)) + f.c[i].derivative(j) * Q(s.square_at(i));
        if (!sym.zero()) ++bad_killing;
      }
    if (!f.apply(quad).zero()) ++bad_tangent;
  }
  out.push_back(make_check("geometry.killing.equation", "d_A xi_B + d_B xi_A = 0 (indices lowered with eta)", "exact",
                           bad_killing, 0, "10 generators"));
  out.push_back(make_check("geometry.killing.tangency", "xi_AB (eta_AB X^A X^B - ell^2) = 0", "exact", bad_tangent, 0));
  return out;
}

std::vector<Check> lie_triple_agreement() {
  StructureTable s = spin_structure(), m = so41_structure(), k = killing_structure();
  double d = std::max({table_max_diff(s, m).get_d(), table_max_diff(m, k).get_d(), table_max_diff(s, k).get_d()});
  return {make_check("algebras.lie.triple_agreement",
                     "structure constants of S_AB, M_AB and xi_AB agree entry for entry", "exact", d, 0,
                     "1000 structure constants per table")};
}

namespace {

struct PointResidual {
  double roundtrip = 0, sphere = 0, metric = 0;
};

PointResidual chart_point(uint64_t seed, size_t k) {
  Rng r(derive_seed(seed, "chart.sweep", k));
  double ell = (k % 2 == 0) ? 1.0 : 10.0;
  std::array<double, 4> x;
  for (double& v : x) v = r.uniform(-0.95 * ell, 0.95 * ell);
  PointResidual pr;
  ChartPoint<double> p = embed(x, ell);
  auto back = unembed(p.X, ell);
  double xn = 0;
  for (int i = 0; i < 4; ++i) xn = std::max(xn, std::fabs(x[i]));
  for (int i = 0; i < 4; ++i) pr.roundtrip = std::max(pr.roundtrip, std::fabs(back[i] - x[i]) / std::max(1.0, xn));
  pr.sphere = std::fabs(pseudo_sphere_residual(p.X, ell)) / (ell * ell);
  auto g = induced_metric(x, ell);
  double o2 = p.omega * p.omega;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      double want = (mu == nu) ? o2 * eta_mink(mu) : 0.0;
      pr.metric = std::max(pr.metric, std::fabs(g[mu][nu] - want) / o2);
    }
  return pr;
}

PointResidual chart_sweep_all(uint64_t seed, int points, bool parallel) {
  std::vector<PointResidual> res(points);
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int k = 0; k < points; ++k) res[k] = chart_point(seed, size_t(k));
  } else {
    for (int k = 0; k < points; ++k) res[k] = chart_point(seed, size_t(k));
  }
  PointResidual m;
  for (const auto& r : res) {
    m.roundtrip = std::max(m.roundtrip, r.roundtrip);
    m.sphere = std::max(m.sphere, r.sphere);
    m.metric = std::max(m.metric, r.metric);
  }
  return m;
}

}  // namespace

double chart_sweep(uint64_t seed, int points, bool parallel) {
  PointResidual m = chart_sweep_all(seed, points, parallel);
  return std::max({m.roundtrip, m.sphere, m.metric});
}

std::vector<Check> chart_checks(uint64_t seed, int points, bool parallel) {
  std::vector<Check> out;
  PointResidual m = chart_sweep_all(seed, points, parallel);
  std::string n = std::to_string(points) + " random points, ell in {1, 10}";
  out.push_back(make_check("geometry.chart.roundtrip", "unembed(embed(x)) = x", "float", m.roundtrip, 1e-12, n));
  out.push_back(make_check("geometry.chart.pseudo_sphere", "X.X = ell^2 on embedded points (relative to ell^2)", "float",
                           m.sphere, 1e-12, n));
  out.push_back(make_check("geometry.chart.conformal_metric", "pullback metric = Omega^2 eta (relative)", "float", m.metric,
                           1e-10, n));

  // Exact rational points: every relation holds with no tolerance.
  int bad = 0;
  for (int k = 0; k < 200; ++k) {
    Rng r(derive_seed(seed, "chart.exact", k));
    Q ell = (k % 2 == 0) ? Q(1) : Q(10);
    std::array<Q, 4> x;
    for (Q& v : x) v = r.rational() * ell / Q(2);
    if (absolute_hit(sigma_squared(x), ell)) continue;
    ChartPoint<Q> p = embed(x, ell);
    if (sgn(pseudo_sphere_residual(p.X, ell)) != 0) ++bad;
    if (unembed(p.X, ell) != x) ++bad;
    auto g = induced_metric(x, ell);
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        if (g[mu][nu] != ((mu == nu) ? Q(p.omega * p.omega * eta_mink(mu)) : Q(0))) ++bad;
  }
  out.push_back(make_check("geometry.chart.exact", "chart relations hold exactly at rational points", "exact", bad, 0,
                           "200 rational points"));

  // Radius scaling: same x, ell -> 2 ell.
  double sc = 0;
  for (int k = 0; k < 20; ++k) {
    Rng r(derive_seed(seed, "chart.scaling", k));
    std::array<double, 4> x;
    for (double& v : x) v = r.uniform(-0.9, 0.9);
    for (double ell : {1.0, 2.0}) {
      auto g = induced_metric(x, ell);
      double om = 1.0 / (1.0 - sigma_squared(x) / (4 * ell * ell));
      for (int mu = 0; mu < 4; ++mu) sc = std::max(sc, std::fabs(g[mu][mu] - om * om * eta_mink(mu)) / (om * om));
    }
  }
  out.push_back(make_check("geometry.chart.radius_scaling", "g recomputed at ell and 2 ell matches Omega(ell)^2 eta",
                           "float", sc, 1e-10));
  return out;
}

std::vector<Check> chart_examples() {
  std::vector<Check> out;
  int bad = 0;
  ChartPoint<Q> o = embed<Q>({Q(0), Q(0), Q(0), Q(0)}, Q(1));
  std::array<Q, 5> want{Q(0), Q(0), Q(0), Q(-1), Q(0)};
  if (o.X != want || o.omega != 1 || sgn(pseudo_sphere_residual(o.X, Q(1))) != 0) ++bad;
  auto g0 = induced_metric<Q>({Q(0), Q(0), Q(0), Q(0)}, Q(1));
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      if (g0[mu][nu] != (mu == nu ? Q(eta_mink(mu)) : Q(0))) ++bad;
  out.push_back(make_check("geometry.chart.origin", "x = 0: Omega = 1, X = (0,0,0,-ell,0), g = eta", "exact", bad, 0));

  int raised = 0;
  try {
    embed<Q>({Q(2), Q(0), Q(0), Q(0)}, Q(1));
  } catch (const AbsoluteHit&) {
    ++raised;
  }
  try {
    embed<double>({5.0, 4.0, 0.0, 0.0}, 1.5);
  } catch (const AbsoluteHit&) {
    ++raised;
  }
  try {
    unembed<Q>({Q(0), Q(0), Q(0), Q(1), Q(0)}, Q(1));
  } catch (const NorthPole&) {
    ++raised;
  }
  out.push_back(make_check("geometry.chart.errors", "absolute points and the north pole are rejected", "exact",
                           double(3 - raised), 0));
  return out;
}

const char* region_name(Region r) {
  switch (r) {
    case Region::Inside: return "inside";
    case Region::Absolute: return "absolute";
    case Region::Outside: return "outside";
  }
  return "outside";
}

Region classify(double t, double x1, double ell, double tol) {
  double d = t * t - x1 * x1 - 4 * ell * ell;
  if (std::fabs(d) <= tol * 4 * ell * ell) return Region::Absolute;
  return d < 0 ? Region::Inside : Region::Outside;
}

void emit_chart_grid(std::ostream& os, double ell, double extent, int resolution, bool lightlike) {
  if (resolution < 2) throw std::invalid_argument("chart grid: resolution must be at least 2");
  if (!(ell > 0)) throw std::invalid_argument("chart grid: ell must be positive");
  auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  auto at = [&](int i) { return -extent + 2 * extent * i / (resolution - 1); };
  os << (lightlike ? "t,x1,region,line\n" : "t,x1,region\n");
  for (int i = 0; i < resolution; ++i)
    for (int j = 0; j < resolution; ++j) {
      double t = at(i), x = at(j);
      os << fmt(t) << "," << fmt(x) << "," << region_name(classify(t, x, ell));
      if (lightlike) os << ",grid";
      os << "\n";
    }
  if (!lightlike) return;
  // Null lines x^0 = +-x^1 + c of the conformally flat metric.
  for (int sgn_ : {1, -1})
    for (int k = 0; k < resolution; ++k) {
      double c = at(k);
      std::string tag = std::string(sgn_ > 0 ? "null+" : "null-") + "@" + fmt(c);
      for (int j = 0; j < resolution; ++j) {
        double x = at(j), t = sgn_ * x + c;
        if (std::fabs(t) > extent) continue;
        os << fmt(t) << "," << fmt(x) << "," << region_name(classify(t, x, ell)) << "," << tag << "\n";
      }
    }
}

}  // namespace dsga
