#include "lca/bitvector.hpp"

#include <string>

#include "lca/error.hpp"

namespace lca {

BitVector::BitVector(std::initializer_list<int> bits) : BitVector(bits.size()) {
  std::size_t i = 0;
  for (int b : bits) set(i++, b != 0);
}

std::size_t BitVector::count() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (size_ != other.size_) {
    throw DimensionError("bit vector length mismatch: " + std::to_string(size_) + " vs " +
                         std::to_string(other.size_));
  }
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

}  // namespace lca
