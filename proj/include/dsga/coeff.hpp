#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <type_traits>

namespace dsga {

using Q = mpq_class;

// Coefficient policy. Exact and float modes are distinct types, so a mixed
// operation does not compile.
template <class T> struct Coeff;

template <> struct Coeff<Q> {
  static constexpr bool exact = true;
  static constexpr const char* mode = "exact";
  static bool is_zero(const Q& q) { return sgn(q) == 0; }
  static double to_double(const Q& q) { return q.get_d(); }
  static Q from_int(long v) { return Q(v); }
  static Q from_ratio(long n, long d) {
    Q q(n, d);
    q.canonicalize();
    return q;
  }
  static std::string str(const Q& q) { return q.get_str(); }
  static Q parse(const std::string& s) {
    Q q(s, 10);
    q.canonicalize();
    return q;
  }
};

template <> struct Coeff<double> {
  static constexpr bool exact = false;
  static constexpr const char* mode = "float";
  static bool is_zero(double v) { return v == 0.0; }
  static double to_double(double v) { return v; }
  static double from_int(long v) { return double(v); }
  static double from_ratio(long n, long d) { return double(n) / double(d); }
  static std::string str(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  }
  static double parse(const std::string& s) { return std::stod(s); }
};

template <class T> inline double to_double(const T& v) { return Coeff<T>::to_double(v); }
template <class T> inline bool is_zero(const T& v) { return Coeff<T>::is_zero(v); }

inline double to_double_q(const Q& q) { return q.get_d(); }

// Gaussian rational a + b i.
struct GaussQ {
  Q re, im;
  GaussQ() = default;
  GaussQ(Q r) : re(std::move(r)) {}
  GaussQ(Q r, Q i) : re(std::move(r)), im(std::move(i)) {}
  GaussQ(long r) : re(r) {}

  friend GaussQ operator+(const GaussQ& a, const GaussQ& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussQ operator-(const GaussQ& a, const GaussQ& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussQ operator-(const GaussQ& a) { return {-a.re, -a.im}; }
  friend GaussQ operator*(const GaussQ& a, const GaussQ& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussQ& operator+=(const GaussQ& b) {
    re += b.re;
    im += b.im;
    return *this;
  }
  friend bool operator==(const GaussQ& a, const GaussQ& b) { return a.re == b.re && a.im == b.im; }
  GaussQ conj() const { return {re, -im}; }
  bool zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

inline GaussQ conj(const GaussQ& z) { return z.conj(); }
inline std::complex<double> conj(const std::complex<double>& z) { return std::conj(z); }

}  // namespace dsga
