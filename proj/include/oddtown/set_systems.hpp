#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oddtown/bits.hpp"

namespace oddtown {

// Indexed family of subsets of [n]; duplicates are allowed and kept by index.
struct SetFamily {
  std::size_t ground_size = 0;
  std::vector<SubsetBits> sets;

  SetFamily() = default;
  SetFamily(std::size_t n, std::vector<SubsetBits> members);

  std::size_t size() const { return sets.size(); }
  bool operator==(const SetFamily&) const = default;
};

// k ordered families A_1..A_k of m subsets of [n] each.
class TupleSystem {
 public:
  TupleSystem(std::size_t k, std::size_t t, std::size_t ground_size,
              std::vector<std::vector<SubsetBits>> families);

  std::size_t k() const { return k_; }
  std::size_t t() const { return t_; }
  std::size_t m() const { return m_; }
  std::size_t ground_size() const { return n_; }

  // family and index are 1-based, matching A_{j,i}.
  const SubsetBits& set(std::size_t family, std::size_t index) const {
    return families_[family - 1][index - 1];
  }
  const std::vector<std::vector<SubsetBits>>& families() const { return families_; }

  bool operator==(const TupleSystem&) const = default;

 private:
  std::size_t k_;
  std::size_t t_;
  std::size_t m_;
  std::size_t n_;
  std::vector<std::vector<SubsetBits>> families_;
};

struct Violation {
  std::vector<std::size_t> indices;  // 1-based index tuple or index set
  std::size_t observed = 0;          // observed parity or size
  std::string expected;
};

struct VerifyReport {
  static constexpr std::size_t kDefaultCap = 16;

  bool valid = true;
  std::vector<Violation> violations;
  std::size_t cap = kDefaultCap;

  explicit VerifyReport(std::size_t violation_cap = kDefaultCap) : cap(violation_cap) {}

  void add(std::vector<std::size_t> indices, std::size_t observed, std::string expected) {
    valid = false;
    if (violations.size() < cap) violations.push_back({std::move(indices), observed, std::move(expected)});
  }
  bool full() const { return violations.size() >= cap; }
};

// Parity of |S_1 ∩ ... ∩ S_r|. Throws on an empty list or mismatched ground sizes.
bool intersection_parity(std::span<const SubsetBits> sets);

VerifyReport verify_oddtown(const SetFamily& family, std::size_t cap = VerifyReport::kDefaultCap);

enum class SkewCondition {
  upper_triangular,  // |A_i ∩ B_j| even for i < j only
  symmetric,         // even for every i != j
};

// Throws std::invalid_argument when the families differ in length or ground size.
VerifyReport verify_skew_oddtown(const SetFamily& a, const SetFamily& b,
                                 SkewCondition condition = SkewCondition::upper_triangular,
                                 std::size_t cap = VerifyReport::kDefaultCap);

// d-wise intersections of distinct members: odd for d < t, even for t <= d <= k.
VerifyReport verify_kt_oddtown(const SetFamily& family, std::size_t k, std::size_t t,
                               std::size_t cap = VerifyReport::kDefaultCap);

enum class ParityConvention {
  standard,       // intersection even exactly when fewer than t indices are distinct
  complementary,  // intersection odd exactly when fewer than t indices are distinct
};

// Exhaustive over all m^k index tuples.
VerifyReport verify_bollobas_tuple(const TupleSystem& tuple,
                                   ParityConvention convention = ParityConvention::standard,
                                   std::size_t cap = VerifyReport::kDefaultCap);

// Adds element n+1 to every set, flipping the parity of every intersection.
TupleSystem add_auxiliary_element(const TupleSystem& tuple);
// Inverse of add_auxiliary_element: requires element n to lie in every set and drops it.
TupleSystem strip_auxiliary_element(const TupleSystem& tuple);

// The tuple (F, F, ..., F) with k copies of the family.
TupleSystem diagonal_tuple(const SetFamily& family, std::size_t k, std::size_t t);

struct IndependenceCertificate {
  bool independent = true;
  // Indices (1-based) of members summing to zero when not independent.
  std::vector<std::size_t> dependency;
};

// Throws std::invalid_argument unless the family follows oddtown rules.
IndependenceCertificate oddtown_certificate(const SetFamily& family);

// {A_anchor ∩ A_i : i != anchor}; anchor is 1-based. Throws for fewer than two sets.
SetFamily reduce_33_oddtown(const SetFamily& family, std::size_t anchor = 1);

}  // namespace oddtown
