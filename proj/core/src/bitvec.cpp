#include "rscsim/bitvec.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rscsim {

void BitVec::clear() { std::fill(words_.begin(), words_.end(), 0); }

bool BitVec::none() const {
  for (std::uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::size_t BitVec::count() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  if (n_ != other.n_) throw std::invalid_argument("BitVec size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::size_t BitVec::and_count(const BitVec& a, const BitVec& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("BitVec size mismatch");
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
  }
  return total;
}

}  // namespace rscsim
