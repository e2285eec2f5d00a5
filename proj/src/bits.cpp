#include "oddtown/bits.hpp"

#include <stdexcept>

namespace oddtown {

std::size_t BitVector::find_next(std::size_t from) const {
  if (from >= size_) return size_;
  std::size_t w = from / kWordBits;
  std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from % kWordBits));
  while (true) {
    if (word != 0) {
      std::size_t pos = w * kWordBits + static_cast<std::size_t>(std::countr_zero(word));
      return pos < size_ ? pos : size_;
    }
    if (++w >= words_.size()) return size_;
    word = words_[w];
  }
}

void BitVector::check_same_size(const BitVector& other) const {
  if (size_ != other.size_) {
    throw std::invalid_argument("bit vector length mismatch: " + std::to_string(size_) + " vs " +
                                std::to_string(other.size_));
  }
}

BitVector& BitVector::operator^=(const BitVector& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

BitVector BitVector::resized(std::size_t size) const {
  BitVector out(size);
  std::size_t common = std::min(words_.size(), out.words_.size());
  for (std::size_t i = 0; i < common; ++i) out.words_[i] = words_[i];
  if (size % kWordBits != 0 && !out.words_.empty()) {
    out.words_.back() &= (std::uint64_t{1} << (size % kWordBits)) - 1;
  }
  return out;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

SubsetBits::SubsetBits(std::size_t ground_size, std::initializer_list<std::size_t> elements)
    : SubsetBits(ground_size, std::span<const std::size_t>(elements.begin(), elements.size())) {}

SubsetBits::SubsetBits(std::size_t ground_size, std::span<const std::size_t> elements)
    : bits_(ground_size) {
  for (auto e : elements) insert(e);
}

SubsetBits SubsetBits::full(std::size_t ground_size) {
  SubsetBits s(ground_size);
  for (std::size_t i = 0; i < ground_size; ++i) s.bits_.set(i);
  return s;
}

SubsetBits SubsetBits::from_bits(BitVector bits) {
  SubsetBits s;
  s.bits_ = std::move(bits);
  return s;
}

void SubsetBits::check_element(std::size_t element) const {
  if (element < 1 || element > bits_.size()) {
    throw std::out_of_range("element " + std::to_string(element) + " outside ground set [" +
                            std::to_string(bits_.size()) + "]");
  }
}

bool SubsetBits::contains(std::size_t element) const {
  if (element < 1 || element > bits_.size()) return false;
  return bits_.test(element - 1);
}

void SubsetBits::insert(std::size_t element) {
  check_element(element);
  bits_.set(element - 1);
}

void SubsetBits::erase(std::size_t element) {
  check_element(element);
  bits_.reset(element - 1);
}

std::vector<std::size_t> SubsetBits::elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = bits_.find_next(0); i < bits_.size(); i = bits_.find_next(i + 1))
    out.push_back(i + 1);
  return out;
}

SubsetBits SubsetBits::complement() const {
  SubsetBits out = full(ground_size());
  out.bits_ ^= bits_;
  return out;
}

SubsetBits SubsetBits::with_ground(std::size_t new_ground) const {
  return from_bits(bits_.resized(new_ground));
}

std::string SubsetBits::to_string() const {
  std::string s = "{";
  bool first = true;
  for (auto e : elements()) {
    if (!first) s += ",";
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

}  // namespace oddtown
