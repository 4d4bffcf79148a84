#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>

#include "dsga/coeff.hpp"

namespace dsga {

constexpr int kVars = 5;
using Mono = std::array<uint8_t, kVars>;

// Multivariate polynomial in up to five variables (slot order is the caller's).
template <class T>
class Polynomial {
 public:
  using Terms = std::map<Mono, T>;

  Polynomial() = default;
  explicit Polynomial(T c) { add(Mono{}, std::move(c)); }

  static Polynomial var(int slot, T c = T(1)) {
    Mono m{};
    m[slot] = 1;
    Polynomial p;
    p.add(m, std::move(c));
    return p;
  }
  static Polynomial monomial(const Mono& m, T c) {
    Polynomial p;
    p.add(m, std::move(c));
    return p;
  }

  const Terms& terms() const { return t_; }
  bool zero() const { return t_.empty(); }

  void add(const Mono& m, const T& c) {
    if (Coeff<T>::is_zero(c)) return;
    auto [it, fresh] = t_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (Coeff<T>::is_zero(it->second)) t_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& b) {
    for (const auto& [m, c] : b.t_) add(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& b) {
    for (const auto& [m, c] : b.t_) add(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return a * T(-1); }

  friend Polynomial operator*(const Polynomial& a, const T& k) {
    Polynomial r;
    if (Coeff<T>::is_zero(k)) return r;
    for (const auto& [m, c] : a.t_) r.add(m, c * k);
    return r;
  }
  friend Polynomial operator*(const T& k, const Polynomial& a) { return a * k; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) {
        Mono m;
        for (int i = 0; i < kVars; ++i) m[i] = static_cast<uint8_t>(ma[i] + mb[i]);
        r.add(m, ca * cb);
      }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.t_ == b.t_; }

  Polynomial derivative(int slot) const {
    Polynomial r;
    for (const auto& [m, c] : t_) {
      if (m[slot] == 0) continue;
      Mono d = m;
      --d[slot];
      r.add(d, c * T(long(m[slot])));
    }
    return r;
  }

  int degree() const {
    int d = 0;
    for (const auto& [m, c] : t_) {
      int s = 0;
      for (auto e : m) s += e;
      d = std::max(d, s);
    }
    return d;
  }

  // Evaluate with any coefficient type U constructible from T.
  template <class U, class Conv>
  U eval_with(const std::array<U, kVars>& x, Conv conv) const {
    U acc = U(0);
    for (const auto& [m, c] : t_) {
      U term = conv(c);
      for (int i = 0; i < kVars; ++i)
        for (int e = 0; e < m[i]; ++e) term = term * x[i];
      acc = acc + term;
    }
    return acc;
  }
  T eval(const std::array<T, kVars>& x) const {
    return eval_with<T>(x, [](const T& c) { return c; });
  }

  std::string str(const char* var = "x") const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
      if (!first) os << " + ";
      first = false;
      os << Coeff<T>::str(c);
      for (int i = 0; i < kVars; ++i)
        if (m[i]) os << "*" << var << i << (m[i] > 1 ? "^" + std::to_string(m[i]) : "");
    }
    return os.str();
  }

 private:
  Terms t_;
};

using PolyQ = Polynomial<Q>;
using PolyD = Polynomial<double>;

inline PolyD to_float(const PolyQ& p) {
  PolyD r;
  for (const auto& [m, c] : p.terms()) r.add(m, c.get_d());
  return r;
}

}  // namespace dsga
