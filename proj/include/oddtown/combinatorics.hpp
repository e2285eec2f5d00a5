#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace oddtown {

// Exact C(n, k); 0 for k < 0 or k > n. Throws std::overflow_error past 64 bits.
std::uint64_t binomial(long long n, long long k);

// (n)_r = n (n-1) ... (n-r+1); zero when r > n. Throws std::overflow_error past 64 bits.
std::uint64_t falling_factorial(std::uint64_t n, std::uint64_t r);

std::uint64_t factorial(std::uint64_t n);

// Stirling number of the second kind via S(k,t) = t S(k-1,t) + S(k-1,t-1).
std::uint64_t stirling2(std::uint64_t k, std::uint64_t t);

// All k-subsets of {0..n-1} as bitmasks in colexicographic (= numeric) order; n <= 64.
std::vector<std::uint64_t> colex_subsets(std::size_t n, std::size_t k);

// All ordered k-tuples of distinct values from [n] (1-based), lexicographic order.
std::vector<std::vector<std::size_t>> injective_tuples(std::size_t n, std::size_t k);

// Set partition of coordinates {1..k}. Blocks are sorted by their smallest member.
class PatternPartition {
 public:
  explicit PatternPartition(std::vector<std::vector<std::size_t>> blocks);

  // Coincidence pattern of an index tuple: coordinates with equal entries share a block.
  static PatternPartition of(std::span<const std::size_t> indices);

  // Every partition of [k], enumerated by restricted growth strings.
  static std::vector<PatternPartition> all(std::size_t k);

  std::size_t k() const { return k_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }

  bool has_singleton() const;
  // 0-based position of the first singleton block, or block_count() if none.
  std::size_t first_singleton() const;

  bool operator==(const PatternPartition&) const = default;

 private:
  std::size_t k_ = 0;
  std::vector<std::vector<std::size_t>> blocks_;
};

// Odometer over [n]^k (1-based entries), first coordinate slowest.
class CellIterator {
 public:
  CellIterator(std::size_t n, std::size_t k) : n_(n), cell_(k, 1), done_(n == 0 && k > 0) {}

  bool done() const { return done_; }
  const std::vector<std::size_t>& cell() const { return cell_; }
  void next();

 private:
  std::size_t n_;
  std::vector<std::size_t> cell_;
  bool done_;
};

}  // namespace oddtown
