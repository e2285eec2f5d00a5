#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "oddtown/bits.hpp"

namespace oddtown {

// Dense matrix over F_2, row-major, each row a packed BitVector.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  static Gf2Matrix identity(std::size_t n);
  static Gf2Matrix from_rows(std::span<const BitVector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return data_[r].test(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { data_[r].assign(c, value); }
  void flip(std::size_t r, std::size_t c) { data_[r].flip(c); }

  const BitVector& row(std::size_t r) const { return data_[r]; }
  BitVector& row(std::size_t r) { return data_[r]; }
  BitVector column(std::size_t c) const;

  Gf2Matrix transposed() const;
  // A * x for a column-selection vector x of length cols().
  BitVector multiply(const BitVector& x) const;

  bool operator==(const Gf2Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BitVector> data_;
};

// Deterministic trial-division primality test.
bool is_prime(std::uint64_t value);

inline constexpr unsigned kMaxFieldPrime = 251;

// Dense matrix over F_p for a prime p <= 251; entries stored reduced, one byte each.
class GfpMatrix {
 public:
  GfpMatrix() = default;
  GfpMatrix(std::size_t rows, std::size_t cols, unsigned modulus);

  static GfpMatrix from_gf2(const Gf2Matrix& m, unsigned modulus);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  unsigned modulus() const { return modulus_; }

  unsigned get(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  // Stores value mod p.
  void set(std::size_t r, std::size_t c, long long value);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  unsigned modulus_ = 2;
  std::vector<std::uint8_t> data_;
};

std::size_t rank_gf2(const Gf2Matrix& m);
std::size_t rank_gfp(const GfpMatrix& m);

// Indices of a nonempty subset of `vectors` summing to zero, or nullopt if independent.
std::optional<std::vector<std::size_t>> find_dependency(std::span<const BitVector> vectors);

bool is_linearly_independent(std::span<const SubsetBits> vectors);

enum class SolveStatus {
  found,                   // minimum-weight solution returned
  infeasible,              // b is not in the column space of A
  weight_bound_exhausted,  // every weight <= max_weight refuted
  work_limit_reached,      // some branch at weight lower_bound hit its work cap
};

const char* to_string(SolveStatus status);

struct MinWeightOptions {
  // When set, every returned solution contains one of these columns. Callers supply
  // orbit representatives of a column symmetry that fixes b; see search.cpp.
  std::optional<std::vector<std::size_t>> first_level;
  // Largest lookup table of column subsets kept in memory.
  std::size_t max_table_entries = std::size_t{1} << 24;
  // Cap on enumerated prefixes per first-level branch at a single weight.
  std::uint64_t max_work_per_branch = 400'000'000;
  unsigned threads = 1;
};

struct MinWeightResult {
  SolveStatus status = SolveStatus::infeasible;
  // Sorted column indices of the solution when status == found.
  std::vector<std::size_t> support;
  // No solution of weight < lower_bound exists. Meaningless when infeasible.
  std::size_t lower_bound = 0;

  std::size_t weight() const { return support.size(); }
  bool found() const { return status == SolveStatus::found; }
};

// Minimum-weight x with A x = b over F_2, searching weights 0..max_weight in order.
// Without first_level the returned support is the lexicographically smallest one of
// minimum weight. Throws std::invalid_argument on a dimension mismatch.
MinWeightResult min_weight_solution(const Gf2Matrix& a, const BitVector& b, std::size_t max_weight,
                                    const MinWeightOptions& options = {});

}  // namespace oddtown
