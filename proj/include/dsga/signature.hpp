#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace dsga {

// Pseudo-Euclidean basis: labels in canonical order plus their metric squares.
// Bit k of a blade mask is the basis vector labels()[k].
class Signature {
 public:
  Signature(std::string name, std::vector<int> labels, std::vector<int> squares);

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(labels_.size()); }
  const std::vector<int>& labels() const { return labels_; }
  int label(int index) const { return labels_[index]; }
  int square_at(int index) const { return squares_[index]; }
  // Metric square of the vector carrying `label`.
  int square(int label) const { return squares_[index_of(label)]; }
  int index_of(int label) const;
  bool has_label(int label) const;

  uint32_t full_mask() const { return (dim() == 32) ? ~0u : ((1u << dim()) - 1u); }
  uint32_t mask_of(int label) const { return 1u << index_of(label); }
  bool valid_mask(uint32_t m) const { return (m & ~full_mask()) == 0; }

  // Sign of e_a e_b relative to the canonical blade e_{a^b}, metric included.
  int blade_sign(uint32_t a, uint32_t b) const;
  // Label string of a blade in canonical order, e.g. "140" in the bulk.
  std::string blade_labels(uint32_t m) const;

 private:
  std::string name_;
  std::vector<int> labels_;
  std::vector<int> squares_;
  int index_of_label_[16];
};

inline int reorder_sign(uint32_t a, uint32_t b) {
  int swaps = 0;
  for (uint32_t t = a >> 1; t != 0; t >>= 1) swaps += __builtin_popcount(t & b);
  return (swaps & 1) ? -1 : 1;
}

inline int grade_of(uint32_t m) { return __builtin_popcount(m); }

// Bulk R_{4,1}: labels (1,2,3,4,0), squares (+,+,+,+,-).
const Signature& bulk();
// Minkowski R_{1,3}: labels (0,1,2,3), squares (+,-,-,-).
const Signature& minkowski();
// Euclidean R_{3,0}: labels (1,2,3).
const Signature& euclid3();

}  // namespace dsga
