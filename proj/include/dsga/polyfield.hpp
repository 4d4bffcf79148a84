#pragma once

#include <map>
#include <stdexcept>

#include "dsga/multivector.hpp"
#include "dsga/polynomial.hpp"

namespace dsga {

// Bulk fields use variable slot = label index of the bulk signature (X^1..X^4, X^0).
// Chart fields use slots 0..3 for x^0..x^3.
enum class Domain { Bulk, Chart };

struct DomainMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class T>
class PolyField {
 public:
  using Terms = std::map<uint32_t, Polynomial<T>>;

  PolyField(const Signature& s, Domain d) : sig_(&s), dom_(d) {}

  static PolyField constant(const Multivector<T>& a, Domain d) {
    PolyField f(a.sig(), d);
    for (const auto& [m, c] : a.terms()) f.add(m, Polynomial<T>(c));
    return f;
  }
  static PolyField from(const Multivector<T>& a, const Polynomial<T>& p, Domain d) {
    return constant(a, d).times(p);
  }

  const Signature& sig() const { return *sig_; }
  Domain domain() const { return dom_; }
  const Terms& terms() const { return t_; }
  bool zero() const { return t_.empty(); }

  void add(uint32_t mask, const Polynomial<T>& p) {
    if (p.zero()) return;
    auto [it, fresh] = t_.try_emplace(mask, p);
    if (!fresh) {
      it->second += p;
      if (it->second.zero()) t_.erase(it);
    }
  }

  PolyField& operator+=(const PolyField& b) {
    check(b);
    for (const auto& [m, p] : b.t_) add(m, p);
    return *this;
  }
  PolyField& operator-=(const PolyField& b) {
    check(b);
    for (const auto& [m, p] : b.t_) add(m, -p);
    return *this;
  }
  friend PolyField operator+(PolyField a, const PolyField& b) { return a += b; }
  friend PolyField operator-(PolyField a, const PolyField& b) { return a -= b; }
  friend bool operator==(const PolyField& a, const PolyField& b) {
    return a.sig_ == b.sig_ && a.dom_ == b.dom_ && a.t_ == b.t_;
  }

  PolyField scaled(const T& k) const {
    PolyField r(*sig_, dom_);
    for (const auto& [m, p] : t_) r.add(m, p * k);
    return r;
  }
  PolyField times(const Polynomial<T>& q) const {
    PolyField r(*sig_, dom_);
    for (const auto& [m, p] : t_) r.add(m, p * q);
    return r;
  }

  // a * field (left Clifford multiplication by a constant multivector).
  PolyField left(const Multivector<T>& a) const { return mul(a, true); }
  // field * a.
  PolyField right(const Multivector<T>& a) const { return mul(a, false); }

  PolyField derivative(int slot) const {
    PolyField r(*sig_, dom_);
    for (const auto& [m, p] : t_) r.add(m, p.derivative(slot));
    return r;
  }

  Multivector<T> eval(const std::array<T, kVars>& x) const {
    Multivector<T> r(*sig_);
    for (const auto& [m, p] : t_) r.add(m, p.eval(x));
    return r;
  }
  template <class U, class Conv>
  Multivector<U> eval_with(const std::array<U, kVars>& x, Conv conv) const {
    Multivector<U> r(*sig_);
    for (const auto& [m, p] : t_) r.add(m, p.template eval_with<U>(x, conv));
    return r;
  }

  void check(const PolyField& b) const {
    if (sig_ != b.sig_) throw SignatureMismatch("field signature mismatch");
    if (dom_ != b.dom_) throw DomainMismatch("field domain mismatch");
  }

 private:
  PolyField mul(const Multivector<T>& a, bool on_left) const {
    if (&a.sig() != sig_) throw SignatureMismatch("field/multivector signature mismatch");
    PolyField r(*sig_, dom_);
    for (const auto& [m, p] : t_)
      for (const auto& [ma, ca] : a.terms()) {
        int s = on_left ? sig_->blade_sign(ma, m) : sig_->blade_sign(m, ma);
        r.add(m ^ ma, p * (s < 0 ? T(-ca) : ca));
      }
    return r;
  }

  const Signature* sig_;
  Domain dom_;
  Terms t_;
};

using FieldQ = PolyField<Q>;
using FieldD = PolyField<double>;

inline FieldD to_float(const FieldQ& f) {
  FieldD r(f.sig(), f.domain());
  for (const auto& [m, p] : f.terms()) r.add(m, to_float(p));
  return r;
}

}  // namespace dsga
