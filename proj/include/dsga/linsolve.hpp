#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "dsga/coeff.hpp"

namespace dsga {

template <class T> using Matrix = std::vector<std::vector<T>>;

namespace detail {
template <class T> bool negligible(const T& v, double tol) {
  if constexpr (Coeff<T>::exact) {
    (void)tol;
    return Coeff<T>::is_zero(v);
  } else {
    return std::fabs(v) <= tol;
  }
}
}  // namespace detail

// Row-reduce in place; returns pivot columns.
template <class T> std::vector<int> row_reduce(Matrix<T>& a, double tol = 1e-12) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  const int rows = static_cast<int>(a.size()), cols = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int best = -1;
    double bestmag = -1;
    for (int i = r; i < rows; ++i) {
      if (detail::negligible(a[i][c], tol)) continue;
      double mag = std::fabs(Coeff<T>::to_double(a[i][c]));
      if (best < 0 || (!Coeff<T>::exact && mag > bestmag)) {
        best = i;
        bestmag = mag;
        if (Coeff<T>::exact) break;
      }
    }
    if (best < 0) continue;
    std::swap(a[r], a[best]);
    T inv = T(1) / a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || detail::negligible(a[i][c], tol)) continue;
      T f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T> int rank(Matrix<T> a, double tol = 1e-12) { return static_cast<int>(row_reduce(a, tol).size()); }

// Coordinates of `target` in the span of `basis` vectors (each of equal length).
template <class T>
std::optional<std::vector<T>> solve_in_span(const std::vector<std::vector<T>>& basis, const std::vector<T>& target,
                                            double tol = 1e-12) {
  const size_t n = basis.size();
  const size_t len = target.size();
  Matrix<T> aug(len, std::vector<T>(n + 1, T(0)));
  for (size_t i = 0; i < len; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = basis[j][i];
    aug[i][n] = target[i];
  }
  auto piv = row_reduce(aug, tol);
  std::vector<T> x(n, T(0));
  for (size_t k = 0; k < piv.size(); ++k) {
    if (piv[k] == static_cast<int>(n)) return std::nullopt;
    x[piv[k]] = aug[k][n];
  }
  return x;
}

}  // namespace dsga
