#include "dsga/random.hpp"

namespace dsga {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t derive_seed(uint64_t seed, std::string_view check, uint64_t index) {
  uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : check) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return splitmix64(splitmix64(seed ^ h) + index);
}

uint64_t Rng::below(uint64_t n) {
  if (n == 0) return 0;
  uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t v;
  do v = next();
  while (v >= limit);
  return v % n;
}

Q Rng::rational(long maxabs) {
  long num = range(-maxabs, maxabs);
  long den = range(1, maxabs);
  Q q(num, den);
  q.canonicalize();
  return q;
}

Q Rng::nonzero_rational(long maxabs) {
  Q q;
  do q = rational(maxabs);
  while (sgn(q) == 0);
  return q;
}

}  // namespace dsga
