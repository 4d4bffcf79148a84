#pragma once

#include <utility>
#include <vector>

#include "dsga/multivector.hpp"

namespace dsga {

// Reference product of two basis blades: write both as label-index sequences,
// bubble-sort the concatenation counting swaps, then contract equal neighbours
// with the metric square.
inline std::pair<int, uint32_t> oracle_blade_product(const Signature& s, uint32_t a, uint32_t b) {
  std::vector<int> seq;
  for (int i = 0; i < s.dim(); ++i)
    if (a >> i & 1u) seq.push_back(i);
  for (int i = 0; i < s.dim(); ++i)
    if (b >> i & 1u) seq.push_back(i);
  int sign = 1;
  for (size_t pass = 0; pass < seq.size(); ++pass)
    for (size_t j = 0; j + 1 < seq.size(); ++j)
      if (seq[j] > seq[j + 1]) {
        std::swap(seq[j], seq[j + 1]);
        sign = -sign;
      }
  std::vector<int> out;
  for (int idx : seq) {
    if (!out.empty() && out.back() == idx) {
      sign *= s.square_at(idx);
      out.pop_back();
    } else {
      out.push_back(idx);
    }
  }
  uint32_t mask = 0;
  for (int idx : out) mask |= 1u << idx;
  return {sign, mask};
}

template <class T> Multivector<T> oracle_product(const Multivector<T>& a, const Multivector<T>& b) {
  a.same_sig(b);
  Multivector<T> r(a.sig());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      auto [sg, m] = oracle_blade_product(a.sig(), ma, mb);
      r.add(m, sg < 0 ? T(-(ca * cb)) : T(ca * cb));
    }
  return r;
}

}  // namespace dsga
