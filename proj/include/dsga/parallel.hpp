#pragma once

#include <algorithm>
#include <cstddef>

namespace dsga {

// Sweeps over independent items. Only max and integer-sum reductions are
// offered, so results do not depend on scheduling or thread count.

template <class F> double serial_max(std::size_t n, F&& f) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, static_cast<double>(f(i)));
  return m;
}

template <class F> double parallel_max(std::size_t n, F&& f) {
  double m = 0.0;
  const long long count = static_cast<long long>(n);
#pragma omp parallel for reduction(max : m) schedule(dynamic, 4)
  for (long long i = 0; i < count; ++i) m = std::max(m, static_cast<double>(f(static_cast<std::size_t>(i))));
  return m;
}

template <class F> long serial_count(std::size_t n, F&& f) {
  long c = 0;
  for (std::size_t i = 0; i < n; ++i) c += f(i) ? 1 : 0;
  return c;
}

template <class F> long parallel_count(std::size_t n, F&& f) {
  long c = 0;
  const long long count = static_cast<long long>(n);
#pragma omp parallel for reduction(+ : c) schedule(dynamic, 4)
  for (long long i = 0; i < count; ++i) c += f(static_cast<std::size_t>(i)) ? 1 : 0;
  return c;
}

}  // namespace dsga
