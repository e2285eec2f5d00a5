#include "oddtown/gf2.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

namespace oddtown {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(std::span<const BitVector> rows, std::size_t cols) {
  Gf2Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length differs from column count");
    m.data_[r] = rows[r];
  }
  return m;
}

BitVector Gf2Matrix::column(std::size_t c) const {
  BitVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (get(r, c)) out.set(r);
  return out;
}

Gf2Matrix Gf2Matrix::transposed() const {
  Gf2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto& row = data_[r];
    for (std::size_t c = row.find_next(0); c < cols_; c = row.find_next(c + 1)) t.set(c, r);
  }
  return t;
}

BitVector Gf2Matrix::multiply(const BitVector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("vector length differs from column count");
  BitVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.assign(r, (data_[r] & x).parity());
  return out;
}

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  for (std::uint64_t d = 2; d * d <= value; ++d)
    if (value % d == 0) return false;
  return true;
}

GfpMatrix::GfpMatrix(std::size_t rows, std::size_t cols, unsigned modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), data_(rows * cols, 0) {
  if (modulus > kMaxFieldPrime || !is_prime(modulus)) {
    throw std::invalid_argument("modulus " + std::to_string(modulus) +
                                " is not a prime in [2, 251]");
  }
}

GfpMatrix GfpMatrix::from_gf2(const Gf2Matrix& m, unsigned modulus) {
  GfpMatrix out(m.rows(), m.cols(), modulus);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m.get(r, c)) out.data_[r * out.cols_ + c] = 1;
  return out;
}

void GfpMatrix::set(std::size_t r, std::size_t c, long long value) {
  long long p = modulus_;
  long long v = value % p;
  if (v < 0) v += p;
  data_[r * cols_ + c] = static_cast<std::uint8_t>(v);
}

std::size_t rank_gf2(const Gf2Matrix& m) {
  std::vector<BitVector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));

  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].test(c)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r)
      if (rows[r].test(c)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

namespace {

unsigned inverse_mod(unsigned a, unsigned p) {
  // p is prime, so a^(p-2) is the inverse.
  unsigned result = 1;
  unsigned base = a % p;
  unsigned e = p - 2;
  while (e > 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return result;
}

}  // namespace

std::size_t rank_gfp(const GfpMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const unsigned p = m.modulus();
  std::vector<std::vector<std::uint16_t>> a(rows, std::vector<std::uint16_t>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = static_cast<std::uint16_t>(m.get(r, c));

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    const unsigned inv = inverse_mod(a[rank][c], p);
    auto& prow = a[rank];
    for (std::size_t j = c; j < cols; ++j) prow[j] = static_cast<std::uint16_t>(prow[j] * inv % p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const unsigned factor = a[r][c];
      if (factor == 0) continue;
      auto& row = a[r];
      const unsigned neg = p - factor;
      for (std::size_t j = c; j < cols; ++j)
        row[j] = static_cast<std::uint16_t>((row[j] + neg * prow[j]) % p);
    }
    ++rank;
  }
  return rank;
}

std::optional<std::vector<std::size_t>> find_dependency(std::span<const BitVector> vectors) {
  // Row-reduce while tracking which inputs each reduced row combines.
  const std::size_t count = vectors.size();
  std::vector<BitVector> reduced;
  std::vector<BitVector> combos;
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < count; ++i) {
    BitVector v = vectors[i];
    BitVector combo(count);
    combo.set(i);
    for (std::size_t j = 0; j < reduced.size(); ++j) {
      if (v.test(pivots[j])) {
        v ^= reduced[j];
        combo ^= combos[j];
      }
    }
    std::size_t lead = v.find_next(0);
    if (lead == v.size()) {
      std::vector<std::size_t> out;
      for (std::size_t k = combo.find_next(0); k < count; k = combo.find_next(k + 1)) out.push_back(k);
      return out;
    }
    reduced.push_back(std::move(v));
    combos.push_back(std::move(combo));
    pivots.push_back(lead);
  }
  return std::nullopt;
}

bool is_linearly_independent(std::span<const SubsetBits> vectors) {
  if (vectors.empty()) return true;
  const std::size_t n = vectors.front().ground_size();
  std::vector<BitVector> bits;
  bits.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.ground_size() != n) throw std::invalid_argument("vectors have different ground sizes");
    bits.push_back(v.bits());
  }
  return !find_dependency(bits).has_value();
}

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::found:
      return "found";
    case SolveStatus::infeasible:
      return "infeasible";
    case SolveStatus::weight_bound_exhausted:
      return "weight-bound-exhausted";
    case SolveStatus::work_limit_reached:
      return "work-limit-reached";
  }
  return "unknown";
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Bijective mixer applied to syndrome keys before bucketing.
std::uint64_t mix(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  unsigned __int128 c = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    c = c * (n - i) / (i + 1);
    if (c > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(c);
}

// Every h-subset of the columns keyed by the XOR of its column keys, sorted by
// mixed key; equal keys keep lexicographic subset order.
class SubsetTable {
 public:
  SubsetTable(std::span<const std::uint64_t> keys, std::size_t h) : h_(h) {
    const std::size_t n = keys.size();
    struct Entry {
      std::uint64_t mixed;
      std::uint32_t ordinal;
    };
    std::vector<Entry> entries;
    std::vector<std::uint32_t> lex_combos;
    std::vector<std::uint32_t> stack(h);
    std::function<void(std::size_t, std::size_t, std::uint64_t)> rec =
        [&](std::size_t depth, std::size_t start, std::uint64_t key) {
          if (depth == h) {
            entries.push_back({mix(key), static_cast<std::uint32_t>(entries.size())});
            lex_combos.insert(lex_combos.end(), stack.begin(), stack.end());
            return;
          }
          for (std::size_t c = start; c + (h - depth) <= n; ++c) {
            stack[depth] = static_cast<std::uint32_t>(c);
            rec(depth + 1, c + 1, key ^ keys[c]);
          }
        };
    rec(0, 0, 0);
    std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
      return x.mixed != y.mixed ? x.mixed < y.mixed : x.ordinal < y.ordinal;
    });
    mixed_.resize(entries.size());
    combos_.resize(lex_combos.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
      mixed_[i] = entries[i].mixed;
      std::copy_n(lex_combos.begin() + static_cast<std::ptrdiff_t>(entries[i].ordinal * h), h,
                  combos_.begin() + static_cast<std::ptrdiff_t>(i * h));
    }
    unsigned bits = 1;
    while (bits < 24 && (std::size_t{1} << bits) < entries.size()) ++bits;
    shift_ = 64 - bits;
    directory_.assign((std::size_t{1} << bits) + 1, 0);
    std::size_t pos = 0;
    for (std::size_t b = 0; b < (std::size_t{1} << bits); ++b) {
      directory_[b] = static_cast<std::uint32_t>(pos);
      while (pos < mixed_.size() && (mixed_[pos] >> shift_) == b) ++pos;
    }
    directory_.back() = static_cast<std::uint32_t>(mixed_.size());
  }

  std::size_t h() const { return h_; }

  // Calls visit(combo) for entries whose key equals `key`, in lex order, until it returns true.
  template <typename Visit>
  bool scan(std::uint64_t key, Visit&& visit) const {
    const std::uint64_t q = mix(key);
    const std::size_t b = static_cast<std::size_t>(q >> shift_);
    for (std::size_t i = directory_[b], end = directory_[b + 1]; i < end; ++i) {
      if (mixed_[i] < q) continue;
      if (mixed_[i] > q) break;
      if (visit(std::span<const std::uint32_t>(combos_.data() + i * h_, h_))) return true;
    }
    return false;
  }

 private:
  std::size_t h_;
  unsigned shift_ = 63;
  std::vector<std::uint64_t> mixed_;
  std::vector<std::uint32_t> combos_;
  std::vector<std::uint32_t> directory_;
};

enum class BranchOutcome { exhausted, hit, aborted };

struct BranchResult {
  BranchOutcome outcome = BranchOutcome::exhausted;
  std::vector<std::size_t> support;
};

class Solver {
 public:
  Solver(const Gf2Matrix& a, const BitVector& b, const MinWeightOptions& options)
      : a_(a), b_(b), options_(options), columns_(a.transposed()) {
    const std::size_t rows = a.rows();
    exact_keys_ = rows <= 64;
    std::vector<std::uint64_t> row_keys(rows);
    for (std::size_t r = 0; r < rows; ++r)
      row_keys[r] = exact_keys_ ? (std::uint64_t{1} << r) : splitmix64(r);
    auto fingerprint = [&](const BitVector& v) {
      std::uint64_t key = 0;
      for (std::size_t r = v.find_next(0); r < v.size(); r = v.find_next(r + 1)) key ^= row_keys[r];
      return key;
    };
    keys_.resize(a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c) keys_[c] = fingerprint(columns_.row(c));
    target_key_ = fingerprint(b);

    if (options.first_level) {
      units_ = *options.first_level;
      std::sort(units_.begin(), units_.end());
      units_.erase(std::unique(units_.begin(), units_.end()), units_.end());
      for (auto u : units_)
        if (u >= a.cols()) throw std::invalid_argument("first-level column index out of range");
      symmetric_ = true;
    } else {
      units_.resize(a.cols());
      for (std::size_t c = 0; c < a.cols(); ++c) units_[c] = c;
    }

    const std::uint64_t cap = options.max_table_entries;
    while (binomial_capped(a.cols(), h_max_ + 1, cap) <= cap && h_max_ + 1 <= a.cols()) ++h_max_;
  }

  MinWeightResult run(std::size_t max_weight) {
    MinWeightResult result;
    if (b_.none()) {
      result.status = SolveStatus::found;
      return result;
    }
    for (std::size_t w = 1; w <= max_weight; ++w) {
      const std::size_t rest = w - 1;
      const std::size_t h = std::min(h_max_, rest);
      if (h > 0 && (!table_ || table_->h() != h)) {
        table_.reset();
        table_.emplace(keys_, h);
      }
      auto level = run_level(rest - h, h);
      if (level.outcome == BranchOutcome::hit) {
        result.status = SolveStatus::found;
        result.support = std::move(level.support);
        result.lower_bound = w;
        return result;
      }
      if (level.outcome == BranchOutcome::aborted) {
        result.status = SolveStatus::work_limit_reached;
        result.lower_bound = w;
        return result;
      }
    }
    result.status = SolveStatus::weight_bound_exhausted;
    result.lower_bound = max_weight + 1;
    return result;
  }

 private:
  bool matches(const std::vector<std::size_t>& support) const {
    if (exact_keys_) return true;
    BitVector acc(a_.rows());
    for (auto c : support) acc ^= columns_.row(c);
    return acc == b_;
  }

  BranchResult run_level(std::size_t prefix_len, std::size_t h) {
    const std::size_t count = units_.size();
    std::vector<BranchResult> results(count);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};

    auto worker = [&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count || i > best.load()) return;
        results[i] = run_branch(units_[i], prefix_len, h, i, best);
        if (results[i].outcome == BranchOutcome::hit) {
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
        }
      }
    };
    const unsigned threads = std::max(1U, options_.threads);
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }

    bool aborted = false;
    for (std::size_t i = 0; i < count; ++i) {
      if (results[i].outcome == BranchOutcome::hit) return std::move(results[i]);
      if (results[i].outcome == BranchOutcome::aborted) aborted = true;
    }
    return {aborted ? BranchOutcome::aborted : BranchOutcome::exhausted, {}};
  }

  // Fix column `unit`, enumerate the remaining columns as a sorted prefix of length
  // prefix_len followed by an h-subset looked up in the table.
  BranchResult run_branch(std::size_t unit, std::size_t prefix_len, std::size_t h, std::size_t index,
                          const std::atomic<std::size_t>& best) const {
    BranchResult out;
    const std::size_t n = a_.cols();
    const std::uint64_t residual = target_key_ ^ keys_[unit];
    const std::size_t first = symmetric_ ? 0 : unit + 1;
    std::vector<std::size_t> prefix(prefix_len);
    std::uint64_t work = 0;
    bool stop = false;

    auto try_suffix = [&](std::uint64_t key, std::size_t lower) -> bool {
      if (h == 0) {
        if (key != 0) return false;
        std::vector<std::size_t> support(prefix.begin(), prefix.end());
        support.push_back(unit);
        if (!matches(support)) return false;
        out.support = std::move(support);
        return true;
      }
      return table_->scan(key, [&](std::span<const std::uint32_t> combo) {
        if (combo[0] < lower) return false;
        if (symmetric_ && std::find(combo.begin(), combo.end(), unit) != combo.end()) return false;
        std::vector<std::size_t> support(prefix.begin(), prefix.end());
        support.insert(support.end(), combo.begin(), combo.end());
        support.push_back(unit);
        if (!matches(support)) return false;
        out.support = std::move(support);
        return true;
      });
    };

    std::function<bool(std::size_t, std::size_t, std::uint64_t)> rec =
        [&](std::size_t depth, std::size_t start, std::uint64_t key) -> bool {
      if (depth == prefix_len) {
        if ((++work & 0xFFFF) == 0 && index > best.load()) {
          stop = true;
          return true;
        }
        if (work > options_.max_work_per_branch) {
          out.outcome = BranchOutcome::aborted;
          stop = true;
          return true;
        }
        const std::size_t lower = depth == 0 ? first : prefix[depth - 1] + 1;
        return try_suffix(key, lower);
      }
      for (std::size_t c = start; c + (prefix_len - depth) + h <= n; ++c) {
        if (symmetric_ && c == unit) continue;
        prefix[depth] = c;
        if (rec(depth + 1, c + 1, key ^ keys_[c])) return true;
      }
      return false;
    };

    const bool done = rec(0, first, residual);
    if (done && !stop) {
      out.outcome = BranchOutcome::hit;
      std::sort(out.support.begin(), out.support.end());
    } else if (out.outcome != BranchOutcome::aborted) {
      out.outcome = BranchOutcome::exhausted;
      out.support.clear();
    }
    return out;
  }

  const Gf2Matrix& a_;
  const BitVector& b_;
  const MinWeightOptions& options_;
  Gf2Matrix columns_;
  bool exact_keys_ = true;
  bool symmetric_ = false;
  std::vector<std::uint64_t> keys_;
  std::uint64_t target_key_ = 0;
  std::vector<std::size_t> units_;
  std::size_t h_max_ = 0;
  std::optional<SubsetTable> table_;
};

bool in_column_space(const Gf2Matrix& a, const BitVector& b) {
  Gf2Matrix augmented(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    BitVector row = a.row(r).resized(a.cols() + 1);
    row.assign(a.cols(), b.test(r));
    augmented.row(r) = std::move(row);
  }
  return rank_gf2(augmented) == rank_gf2(a);
}

}  // namespace

MinWeightResult min_weight_solution(const Gf2Matrix& a, const BitVector& b, std::size_t max_weight,
                                    const MinWeightOptions& options) {
  if (b.size() != a.rows()) {
    throw std::invalid_argument("parity vector has length " + std::to_string(b.size()) +
                                " but the matrix has " + std::to_string(a.rows()) + " rows");
  }
  if (!in_column_space(a, b)) {
    MinWeightResult result;
    result.status = SolveStatus::infeasible;
    result.lower_bound = std::numeric_limits<std::size_t>::max();
    return result;
  }
  Solver solver(a, b, options);
  MinWeightResult result = solver.run(max_weight);
  if (result.found()) {
    BitVector x(a.cols());
    for (auto c : result.support) x.set(c);
    if (x.count() != result.support.size() || a.multiply(x) != b) {
      throw std::logic_error("min_weight_solution produced a support that fails A x = b");
    }
  }
  return result;
}

}  // namespace oddtown
