#pragma once

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dsga/coeff.hpp"
#include "dsga/signature.hpp"

namespace dsga {

struct SignatureMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class T>
class Multivector {
 public:
  using Terms = std::map<uint32_t, T>;

  // Unbound placeholder; must be assigned before use.
  Multivector() : sig_(nullptr) {}
  explicit Multivector(const Signature& s) : sig_(&s) {}
  Multivector(const Signature& s, T scalar) : sig_(&s) { add(0, std::move(scalar)); }

  static Multivector blade(const Signature& s, uint32_t mask, T c) {
    if (!s.valid_mask(mask)) throw std::invalid_argument("blade mask outside signature");
    Multivector r(s);
    r.add(mask, std::move(c));
    return r;
  }
  // Product of basis vectors in the given label order (sign from reordering).
  static Multivector product_of(const Signature& s, std::initializer_list<int> labels, T c = T(1)) {
    Multivector r(s, T(1));
    for (int l : labels) r = r * blade(s, s.mask_of(l), T(1));
    return r * Multivector(s, std::move(c));
  }
  static Multivector vec(const Signature& s, int label, T c = T(1)) { return blade(s, s.mask_of(label), std::move(c)); }

  const Signature& sig() const { return *sig_; }
  const Terms& terms() const { return t_; }
  bool zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }

  T coeff(uint32_t mask) const {
    auto it = t_.find(mask);
    return it == t_.end() ? T(0) : it->second;
  }
  T scalar() const { return coeff(0); }

  void add(uint32_t mask, const T& c) {
    if (Coeff<T>::is_zero(c)) return;
    auto [it, fresh] = t_.try_emplace(mask, c);
    if (!fresh) {
      it->second += c;
      if (Coeff<T>::is_zero(it->second)) t_.erase(it);
    }
  }

  Multivector& operator+=(const Multivector& b) {
    same_sig(b);
    for (const auto& [m, c] : b.t_) add(m, c);
    return *this;
  }
  Multivector& operator-=(const Multivector& b) {
    same_sig(b);
    for (const auto& [m, c] : b.t_) add(m, -c);
    return *this;
  }
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(const Multivector& a) { return a.scaled(T(-1)); }

  Multivector scaled(const T& k) const {
    Multivector r(*sig_);
    if (Coeff<T>::is_zero(k)) return r;
    for (const auto& [m, c] : t_) r.add(m, c * k);
    return r;
  }
  friend Multivector operator*(const Multivector& a, const T& k) { return a.scaled(k); }
  friend Multivector operator*(const T& k, const Multivector& a) { return a.scaled(k); }

  friend Multivector operator*(const Multivector& a, const Multivector& b) { return a.product_filtered(b, 0); }

  // 0: full product, 1: wedge (disjoint blades), 2: left contraction (a inside b).
  Multivector product_filtered(const Multivector& b, int which) const {
    same_sig(b);
    Multivector r(*sig_);
    for (const auto& [ma, ca] : t_) {
      for (const auto& [mb, cb] : b.t_) {
        if (which == 1 && (ma & mb) != 0) continue;
        if (which == 2 && (ma & mb) != ma) continue;
        int s = sig_->blade_sign(ma, mb);
        T c = ca * cb;
        if (s < 0) c = -c;
        r.add(ma ^ mb, c);
      }
    }
    return r;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.sig_ == b.sig_ && a.t_ == b.t_;
  }

  void same_sig(const Multivector& b) const {
    if (sig_ != b.sig_) throw SignatureMismatch("multivector signature mismatch: " + sig_->name() + " vs " + b.sig_->name());
  }

 private:
  const Signature* sig_;
  Terms t_;
};

using MVQ = Multivector<Q>;
using MVD = Multivector<double>;

template <class T> Multivector<T> geometric_product(const Multivector<T>& a, const Multivector<T>& b) { return a * b; }
template <class T> Multivector<T> wedge(const Multivector<T>& a, const Multivector<T>& b) { return a.product_filtered(b, 1); }
template <class T> Multivector<T> left_contraction(const Multivector<T>& a, const Multivector<T>& b) {
  return a.product_filtered(b, 2);
}

template <class T> Multivector<T> grade(const Multivector<T>& a, int k) {
  if (k < 0 || k > a.sig().dim()) throw std::invalid_argument("grade index out of range");
  Multivector<T> r(a.sig());
  for (const auto& [m, c] : a.terms())
    if (grade_of(m) == k) r.add(m, c);
  return r;
}

// Parity projection: 0 even, 1 odd.
template <class T> Multivector<T> parity(const Multivector<T>& a, int p) {
  Multivector<T> r(a.sig());
  for (const auto& [m, c] : a.terms())
    if ((grade_of(m) & 1) == p) r.add(m, c);
  return r;
}

template <class T> bool is_homogeneous(const Multivector<T>& a, int k) {
  for (const auto& [m, c] : a.terms())
    if (grade_of(m) != k) return false;
  return true;
}

template <class T> Multivector<T> reversion(const Multivector<T>& a) {
  Multivector<T> r(a.sig());
  for (const auto& [m, c] : a.terms()) {
    int g = grade_of(m);
    r.add(m, ((g * (g - 1) / 2) & 1) ? T(-c) : c);
  }
  return r;
}

template <class T> T scalar_product(const Multivector<T>& a, const Multivector<T>& b) {
  return (reversion(a) * b).scalar();
}

template <class T> Multivector<T> pseudoscalar(const Signature& s) {
  return Multivector<T>::blade(s, s.full_mask(), T(1));
}

template <class T> Multivector<T> pseudoscalar_inverse(const Signature& s) {
  Multivector<T> tau = pseudoscalar<T>(s);
  T n = (tau * reversion(tau)).scalar();
  return reversion(tau) * T(T(1) / n);
}

template <class T> Multivector<T> hodge_star(const Multivector<T>& a) {
  return left_contraction(a, pseudoscalar<T>(a.sig()));
}

// Two-sided inverse of hodge_star: every blade sits inside tau, so a _| tau = a tau.
template <class T> Multivector<T> hodge_star_inv(const Multivector<T>& b) {
  return b * pseudoscalar_inverse<T>(b.sig());
}

template <class T> double max_abs(const Multivector<T>& a) {
  double m = 0;
  for (const auto& [k, c] : a.terms()) m = std::max(m, std::fabs(to_double(c)));
  return m;
}

template <class T> double norm2(const Multivector<T>& a) {
  double s = 0;
  for (const auto& [k, c] : a.terms()) {
    double v = to_double(c);
    s += v * v;
  }
  return std::sqrt(s);
}

template <class T> double max_abs_diff(const Multivector<T>& a, const Multivector<T>& b) { return max_abs(a - b); }

inline MVD to_float(const MVQ& a) {
  MVD r(a.sig());
  for (const auto& [m, c] : a.terms()) r.add(m, c.get_d());
  return r;
}

// Exponential of a bivector.
template <class T> Multivector<T> exp_bivector(const Multivector<T>& B, int terms = 30) {
  if (!is_homogeneous(B, 2)) throw std::invalid_argument("exp_bivector: input is not a bivector");
  const Signature& s = B.sig();
  Multivector<T> B2 = B * B;
  bool simple = B2.zero() || (B2.size() == 1 && B2.terms().begin()->first == 0);
  if constexpr (Coeff<T>::exact) {
    if (!simple) throw std::invalid_argument("exp_bivector: exact mode needs a bivector with scalar square");
    // Truncated series: sum_k B^k/k!, closed using B^2 = b.
    T b = B2.scalar();
    T even(0), odd(0), term(1);
    for (int k = 0; k < terms; ++k) {
      if (k % 2 == 0) even += term; else odd += term;
      term /= T(k + 1);
      if (k % 2 == 1) term *= b;
    }
    return Multivector<T>(s, even) + B * odd;
  } else {
    if (simple) {
      double b = B2.scalar();
      if (b > 0) {
        double r = std::sqrt(b);
        return Multivector<T>(s, std::cosh(r)) + B * (std::sinh(r) / r);
      }
      if (b < 0) {
        double r = std::sqrt(-b);
        return Multivector<T>(s, std::cos(r)) + B * (std::sin(r) / r);
      }
      return Multivector<T>(s, 1.0) + B;
    }
    double nb = norm2(B);
    int sq = 0;
    while (nb > 0.5) {
      nb /= 2;
      ++sq;
    }
    Multivector<T> X = B * std::ldexp(1.0, -sq);
    Multivector<T> acc(s, 1.0), term(s, 1.0);
    for (int k = 1; k < terms; ++k) {
      term = term * X * (1.0 / k);
      acc += term;
    }
    for (int i = 0; i < sq; ++i) acc = acc * acc;
    return acc;
  }
}

// Text form: terms "coeff*e<labels>" in ascending mask order joined by " + ";
// the scalar term has no blade suffix. Labels follow canonical (index) order.
template <class T> std::string to_text(const Multivector<T>& a) {
  if (a.zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    if (!first) os << " + ";
    first = false;
    os << Coeff<T>::str(c);
    if (m != 0) os << "*e" << a.sig().blade_labels(m);
  }
  return os.str();
}

template <class T> Multivector<T> parse_text(const Signature& s, const std::string& text) {
  Multivector<T> r(s);
  if (text == "0") return r;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find(" + ", pos);
    std::string tok = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    size_t star = tok.find("*e");
    uint32_t mask = 0;
    std::string num = tok;
    if (star != std::string::npos) {
      num = tok.substr(0, star);
      for (char ch : tok.substr(star + 2)) {
        if (ch < '0' || ch > '9') throw std::invalid_argument("parse_text: bad label in '" + tok + "'");
        uint32_t bit = s.mask_of(ch - '0');
        if (bit <= mask) throw std::invalid_argument("parse_text: labels not in canonical order in '" + tok + "'");
        mask |= bit;
      }
    }
    r.add(mask, Coeff<T>::parse(num));
    if (end == std::string::npos) break;
    pos = end + 3;
  }
  return r;
}

}  // namespace dsga
