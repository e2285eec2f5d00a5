#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oddtown/covers.hpp"
#include "oddtown/gf2.hpp"

namespace oddtown {

struct SearchOptions {
  // Largest admissible column catalog, (2^n - 1)^k.
  std::size_t cap = 4096;
  bool use_symmetry = true;
  unsigned threads = 1;
  std::size_t max_table_entries = std::size_t{1} << 24;
  std::uint64_t max_work_per_branch = 400'000'000;
};

// The parity system whose minimum-weight solutions are minimum covers of H_{k,t}(n).
// Rows are the cells of [n]^k (first coordinate slowest); columns are all products with
// nonempty parts, coordinate 1 slowest and each part running over bitmasks 1..2^n-1.
class SearchInstance {
 public:
  // Throws std::invalid_argument for bad (k,t,n) or when the catalog exceeds `cap`.
  SearchInstance(std::size_t k, std::size_t t, std::size_t n, std::size_t cap = 4096);

  std::size_t k() const { return k_; }
  std::size_t t() const { return t_; }
  std::size_t n() const { return n_; }
  std::size_t catalog_size() const { return catalog_size_; }

  // Part masks (bit i-1 for element i) of column c.
  std::vector<std::uint32_t> column_parts(std::size_t c) const;
  std::size_t column_index(std::span<const std::uint32_t> parts) const;
  KPartiteProduct product(std::size_t c) const;

  const Gf2Matrix& matrix() const { return matrix_; }
  const BitVector& target() const { return target_; }

  // Columns minimal in their orbit under value permutations of [n] combined with
  // coordinate permutations; both fix the target.
  std::vector<std::size_t> orbit_representatives() const;

 private:
  std::size_t k_;
  std::size_t t_;
  std::size_t n_;
  std::size_t catalog_size_;
  Gf2Matrix matrix_;
  BitVector target_;
};

// Number of columns (2^n - 1)^k, saturating at SIZE_MAX.
std::size_t catalog_size(std::size_t k, std::size_t n);

struct CoverSearchResult {
  SolveStatus status = SolveStatus::infeasible;
  // Minimum cover when status == found; it has passed verify_mod2_cover.
  std::optional<Mod2Cover> cover;
  // No cover with fewer products exists.
  std::size_t lower_bound = 0;
  std::size_t catalog_size = 0;

  bool found() const { return status == SolveStatus::found; }
};

// Searches cover sizes 0..max_weight in increasing order.
CoverSearchResult min_mod2_cover(std::size_t k, std::size_t t, std::size_t n, std::size_t max_weight,
                                 const SearchOptions& options = {});

struct ProbeRecord {
  std::size_t n = 0;
  SolveStatus status = SolveStatus::infeasible;
  std::size_t lower_bound = 0;
  std::optional<std::size_t> size;
};

// Largest n with a cover of H_{k,t}(n) of size <= m, or a bracket when a probe is cut short.
struct BSearchResult {
  std::size_t lower = 0;
  std::optional<std::size_t> upper;
  std::vector<ProbeRecord> probes;
  std::string reason;  // why the bracket is open, if it is

  bool exact() const { return upper && *upper == lower; }
};

// Probes n = 1, 2, ..., max_n in order; relies on covers restricting to smaller n.
BSearchResult exact_b(std::size_t k, std::size_t t, std::size_t m, std::size_t max_n,
                      const SearchOptions& options = {});

// Bounds on the minimum cover size, evaluated exactly. Zero when n < t.
std::uint64_t formula_lower_bound(std::size_t k, std::size_t t, std::size_t n);
std::uint64_t formula_upper_bound(std::size_t k, std::size_t t, std::size_t n);

struct ConstructiveBound {
  std::uint64_t size = 0;
  std::string name;
};

// Smallest verified cover among the explicit constructions that apply to (k,t,n).
ConstructiveBound constructive_upper_bound(std::size_t k, std::size_t t, std::size_t n);

struct BoundsRow {
  std::size_t k = 0;
  std::size_t t = 0;
  std::size_t n = 0;
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  ConstructiveBound constructive;
  std::optional<std::uint64_t> exact;
  // Sizes below this were refuted by search; 0 when no search ran.
  std::uint64_t refuted_below = 0;
  std::string note;
};

struct TableOptions {
  SearchOptions search{4096, true, 1, std::size_t{1} << 24, 20'000'000};
  bool run_search = true;
};

std::vector<BoundsRow> bounds_table(std::size_t k, std::size_t t, std::size_t n_first, std::size_t n_last,
                                    const TableOptions& options = {});

// Human-readable aligned text, one row per line after a header.
std::string format_table(const std::vector<BoundsRow>& rows);
// One record per line: k, t, n, lower, upper, constructive, exact-or-blank (tab separated).
std::string format_table_rows(const std::vector<BoundsRow>& rows);

// Rows whose values are out of order (exact outside [lower, min(upper, constructive)], etc.).
std::vector<std::string> table_violations(const std::vector<BoundsRow>& rows);

}  // namespace oddtown
