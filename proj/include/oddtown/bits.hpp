#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace oddtown {

inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

// Fixed-length vector over F_2, 0-based. Bits past size() are always zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) { words_[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(std::uint64_t{1} << (i % kWordBits)); }
  void flip(std::size_t i) { words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits); }
  void assign(std::size_t i, bool value) {
    if (value) {
      set(i);
    } else {
      reset(i);
    }
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool parity() const {
    std::uint64_t acc = 0;
    for (auto w : words_) acc ^= w;
    return std::popcount(acc) & 1;
  }
  bool none() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  bool any() const { return !none(); }

  // Index of the lowest set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);

  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

  bool operator==(const BitVector&) const = default;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  // Copy truncated or zero-extended to `size` bits.
  BitVector resized(std::size_t size) const;

  std::string to_string() const;

 private:
  void check_same_size(const BitVector& other) const;

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// A subset of the ground set [n] = {1, ..., n}; element e is stored at bit e-1.
class SubsetBits {
 public:
  SubsetBits() = default;
  explicit SubsetBits(std::size_t ground_size) : bits_(ground_size) {}
  SubsetBits(std::size_t ground_size, std::initializer_list<std::size_t> elements);
  SubsetBits(std::size_t ground_size, std::span<const std::size_t> elements);

  static SubsetBits full(std::size_t ground_size);
  static SubsetBits from_bits(BitVector bits);

  std::size_t ground_size() const { return bits_.size(); }

  bool contains(std::size_t element) const;
  void insert(std::size_t element);
  void erase(std::size_t element);

  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool parity() const { return bits_.parity(); }

  std::vector<std::size_t> elements() const;

  SubsetBits& operator&=(const SubsetBits& other) {
    bits_ &= other.bits_;
    return *this;
  }
  SubsetBits& operator|=(const SubsetBits& other) {
    bits_ |= other.bits_;
    return *this;
  }
  friend SubsetBits operator&(SubsetBits a, const SubsetBits& b) { return a &= b; }
  friend SubsetBits operator|(SubsetBits a, const SubsetBits& b) { return a |= b; }

  bool operator==(const SubsetBits&) const = default;

  // Complement within [n].
  SubsetBits complement() const;
  // Same elements viewed inside [new_ground]; elements above new_ground are dropped.
  SubsetBits with_ground(std::size_t new_ground) const;

  const BitVector& bits() const { return bits_; }

  std::string to_string() const;

 private:
  void check_element(std::size_t element) const;

  BitVector bits_;
};

}  // namespace oddtown
