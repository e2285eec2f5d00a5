#include "oddtown/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace oddtown {

namespace {

std::uint64_t checked(unsigned __int128 value, const char* what) {
  if (value > UINT64_MAX) throw std::overflow_error(std::string(what) + " exceeds 64 bits");
  return static_cast<std::uint64_t>(value);
}

}  // namespace

std::uint64_t binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (long long i = 0; i < k; ++i) {
    // c * (n - i) is divisible by (i + 1) since c = C(n, i).
    c = c * static_cast<unsigned __int128>(n - i);
    c /= static_cast<unsigned __int128>(i + 1);
    checked(c, "binomial coefficient");
  }
  return static_cast<std::uint64_t>(c);
}

std::uint64_t falling_factorial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 0; i < r; ++i) acc = checked(acc * (n - i), "falling factorial");
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t factorial(std::uint64_t n) { return falling_factorial(n, n); }

std::uint64_t stirling2(std::uint64_t k, std::uint64_t t) {
  if (t > k) return 0;
  std::vector<unsigned __int128> row(t + 1, 0);
  row[0] = 1;  // S(0,0)
  for (std::uint64_t i = 1; i <= k; ++i) {
    for (std::uint64_t j = std::min(i, t); j >= 1; --j) {
      row[j] = checked(j * row[j] + row[j - 1], "Stirling number");
    }
    row[0] = 0;
  }
  return static_cast<std::uint64_t>(row[t]);
}

std::vector<std::uint64_t> colex_subsets(std::size_t n, std::size_t k) {
  if (n > 64) throw std::invalid_argument("colex_subsets supports at most 64 elements");
  std::vector<std::uint64_t> out;
  if (k > n) return out;
  if (k == 0) return {0};
  std::uint64_t s = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = n == 64 ? 0 : (std::uint64_t{1} << n);
  while (true) {
    out.push_back(s);
    // Gosper's hack: next integer with the same popcount.
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    if (r == 0) break;
    s = (((r ^ s) >> 2) / c) | r;
    if (limit != 0 && s >= limit) break;
  }
  return out;
}

std::vector<std::vector<std::size_t>> injective_tuples(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::vector<bool> used(n + 1, false);
  std::function<void()> rec = [&] {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t v = 1; v <= n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      cur.push_back(v);
      rec();
      cur.pop_back();
      used[v] = false;
    }
  };
  if (k <= n) rec();
  return out;
}

PatternPartition::PatternPartition(std::vector<std::vector<std::size_t>> blocks) : blocks_(std::move(blocks)) {
  std::vector<std::size_t> seen;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("partition block is empty");
    std::sort(b.begin(), b.end());
    seen.insert(seen.end(), b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end());
  std::sort(seen.begin(), seen.end());
  k_ = seen.size();
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i] != i + 1) throw std::invalid_argument("blocks do not partition {1..k}");
  }
}

PatternPartition PatternPartition::of(std::span<const std::size_t> indices) {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> values;
  for (std::size_t j = 0; j < indices.size(); ++j) {
    auto it = std::find(values.begin(), values.end(), indices[j]);
    if (it == values.end()) {
      values.push_back(indices[j]);
      blocks.push_back({j + 1});
    } else {
      blocks[static_cast<std::size_t>(it - values.begin())].push_back(j + 1);
    }
  }
  return PatternPartition(std::move(blocks));
}

std::vector<PatternPartition> PatternPartition::all(std::size_t k) {
  std::vector<PatternPartition> out;
  std::vector<std::size_t> growth(k, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t used) {
    if (pos == k) {
      std::vector<std::vector<std::size_t>> blocks(used);
      for (std::size_t j = 0; j < k; ++j) blocks[growth[j]].push_back(j + 1);
      out.emplace_back(std::move(blocks));
      return;
    }
    for (std::size_t b = 0; b <= used; ++b) {
      growth[pos] = b;
      rec(pos + 1, std::max(used, b + 1));
    }
  };
  if (k == 0) return out;
  rec(0, 0);
  return out;
}

bool PatternPartition::has_singleton() const { return first_singleton() < blocks_.size(); }

std::size_t PatternPartition::first_singleton() const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i].size() == 1) return i;
  return blocks_.size();
}

void CellIterator::next() {
  for (std::size_t j = cell_.size(); j-- > 0;) {
    if (cell_[j] < n_) {
      ++cell_[j];
      return;
    }
    cell_[j] = 1;
  }
  done_ = true;
}

}  // namespace oddtown
