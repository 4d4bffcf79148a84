#include "dsga/signature.hpp"

#include <stdexcept>

namespace dsga {

Signature::Signature(std::string name, std::vector<int> labels, std::vector<int> squares)
    : name_(std::move(name)), labels_(std::move(labels)), squares_(std::move(squares)) {
  if (labels_.size() != squares_.size()) throw std::invalid_argument("signature: labels/squares size mismatch");
  if (labels_.size() > 16) throw std::invalid_argument("signature: more than 16 basis vectors");
  for (int& v : index_of_label_) v = -1;
  for (size_t i = 0; i < labels_.size(); ++i) {
    int l = labels_[i];
    if (l < 0 || l >= 16) throw std::invalid_argument("signature: label out of range");
    if (index_of_label_[l] != -1) throw std::invalid_argument("signature: duplicate label");
    if (squares_[i] != 1 && squares_[i] != -1) throw std::invalid_argument("signature: square must be +1 or -1");
    index_of_label_[l] = static_cast<int>(i);
  }
}

int Signature::index_of(int label) const {
  if (!has_label(label)) throw std::invalid_argument("signature " + name_ + ": unknown label " + std::to_string(label));
  return index_of_label_[label];
}

bool Signature::has_label(int label) const {
  return label >= 0 && label < 16 && index_of_label_[label] != -1;
}

int Signature::blade_sign(uint32_t a, uint32_t b) const {
  int s = reorder_sign(a, b);
  for (uint32_t c = a & b; c != 0; c &= c - 1) s *= squares_[__builtin_ctz(c)];
  return s;
}

std::string Signature::blade_labels(uint32_t m) const {
  std::string out;
  for (int i = 0; i < dim(); ++i)
    if (m & (1u << i)) out += std::to_string(labels_[i]);
  return out;
}

const Signature& bulk() {
  static const Signature s("R41", {1, 2, 3, 4, 0}, {1, 1, 1, 1, -1});
  return s;
}

const Signature& minkowski() {
  static const Signature s("R13", {0, 1, 2, 3}, {1, -1, -1, -1});
  return s;
}

const Signature& euclid3() {
  static const Signature s("R30", {1, 2, 3}, {1, 1, 1});
  return s;
}

}  // namespace dsga
