#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rscsim {

/// Fixed-length bit vector packed into 64-bit words. Supports the
/// word-parallel XOR/AND/popcount operations the Pauli algebra needs.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n_bits) : n_(n_bits), words_((n_bits + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  void clear();
  bool none() const;
  std::size_t count() const;

  BitVec& operator^=(const BitVec& other);

  /// popcount(a & b); both vectors must have equal length.
  static std::size_t and_count(const BitVec& a, const BitVec& b);

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace rscsim
