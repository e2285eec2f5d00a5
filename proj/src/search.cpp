#include "oddtown/search.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "oddtown/combinatorics.hpp"
#include "oddtown/constructions.hpp"
#include "oddtown/ranks.hpp"

namespace oddtown {

namespace {

constexpr std::size_t kMaxSearchGround = 16;

std::size_t power_saturating(std::size_t base, std::size_t exp) {
  std::size_t acc = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && acc > std::numeric_limits<std::size_t>::max() / base) return std::numeric_limits<std::size_t>::max();
    acc *= base;
  }
  return acc;
}

std::vector<std::size_t> decode_cell(std::size_t index, std::size_t n, std::size_t k) {
  std::vector<std::size_t> cell(k);
  for (std::size_t j = k; j-- > 0;) {
    cell[j] = index % n + 1;
    index /= n;
  }
  return cell;
}

SubsetBits mask_to_subset(std::uint32_t mask, std::size_t n) {
  SubsetBits s(n);
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1U) s.insert(i + 1);
  return s;
}

}  // namespace

std::size_t catalog_size(std::size_t k, std::size_t n) {
  if (n >= 63) return std::numeric_limits<std::size_t>::max();
  return power_saturating((std::size_t{1} << n) - 1, k);
}

SearchInstance::SearchInstance(std::size_t k, std::size_t t, std::size_t n, std::size_t cap)
    : k_(k), t_(t), n_(n), catalog_size_(oddtown::catalog_size(k, n)) {
  if (k < 2 || t < 2 || t > k) throw std::invalid_argument("search needs 2 <= t <= k");
  if (n < 1 || n > kMaxSearchGround) throw std::invalid_argument("search needs 1 <= n <= 16");
  if (catalog_size_ > cap) {
    throw std::invalid_argument("catalog of " + std::to_string(catalog_size_) + " products for (k,t,n)=(" +
                                std::to_string(k) + "," + std::to_string(t) + "," + std::to_string(n) +
                                ") exceeds the cap of " + std::to_string(cap));
  }
  const std::size_t cells = power_saturating(n, k);
  matrix_ = Gf2Matrix(cells, catalog_size_);
  target_ = BitVector(cells);
  std::vector<std::vector<std::size_t>> cell_values(cells);
  for (std::size_t r = 0; r < cells; ++r) {
    cell_values[r] = decode_cell(r, n, k);
    target_.assign(r, is_target_edge(cell_values[r], t));
  }
  for (std::size_t c = 0; c < catalog_size_; ++c) {
    const auto parts = column_parts(c);
    for (std::size_t r = 0; r < cells; ++r) {
      bool inside = true;
      for (std::size_t j = 0; j < k && inside; ++j) inside = (parts[j] >> (cell_values[r][j] - 1) & 1U) != 0;
      if (inside) matrix_.set(r, c);
    }
  }
}

std::vector<std::uint32_t> SearchInstance::column_parts(std::size_t c) const {
  const std::size_t base = (std::size_t{1} << n_) - 1;
  std::vector<std::uint32_t> parts(k_);
  for (std::size_t j = k_; j-- > 0;) {
    parts[j] = static_cast<std::uint32_t>(c % base + 1);
    c /= base;
  }
  return parts;
}

std::size_t SearchInstance::column_index(std::span<const std::uint32_t> parts) const {
  const std::size_t base = (std::size_t{1} << n_) - 1;
  std::size_t c = 0;
  for (auto mask : parts) c = c * base + (mask - 1);
  return c;
}

KPartiteProduct SearchInstance::product(std::size_t c) const {
  std::vector<SubsetBits> parts;
  for (auto mask : column_parts(c)) parts.push_back(mask_to_subset(mask, n_));
  return KPartiteProduct(std::move(parts));
}

std::vector<std::size_t> SearchInstance::orbit_representatives() const {
  const std::size_t masks = std::size_t{1} << n_;
  std::vector<std::vector<std::uint32_t>> value_maps;
  std::vector<std::size_t> sigma(n_);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    std::vector<std::uint32_t> map(masks, 0);
    for (std::size_t m = 1; m < masks; ++m) {
      std::uint32_t image = 0;
      for (std::size_t i = 0; i < n_; ++i)
        if (m >> i & 1U) image |= std::uint32_t{1} << sigma[i];
      map[m] = image;
    }
    value_maps.push_back(std::move(map));
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  std::vector<std::vector<std::size_t>> coordinate_perms;
  std::vector<std::size_t> tau(k_);
  std::iota(tau.begin(), tau.end(), 0);
  do {
    coordinate_perms.push_back(tau);
  } while (std::next_permutation(tau.begin(), tau.end()));

  std::vector<std::size_t> reps;
  std::vector<std::uint32_t> image(k_);
  for (std::size_t c = 0; c < catalog_size_; ++c) {
    const auto parts = column_parts(c);
    bool minimal = true;
    for (const auto& map : value_maps) {
      for (const auto& perm : coordinate_perms) {
        for (std::size_t j = 0; j < k_; ++j) image[j] = map[parts[perm[j]]];
        if (column_index(image) < c) {
          minimal = false;
          break;
        }
      }
      if (!minimal) break;
    }
    if (minimal) reps.push_back(c);
  }
  return reps;
}

CoverSearchResult min_mod2_cover(std::size_t k, std::size_t t, std::size_t n, std::size_t max_weight,
                                 const SearchOptions& options) {
  SearchInstance instance(k, t, n, options.cap);
  CoverSearchResult out;
  out.catalog_size = instance.catalog_size();

  MinWeightOptions solver_options;
  if (options.use_symmetry) solver_options.first_level = instance.orbit_representatives();
  solver_options.max_table_entries = options.max_table_entries;
  solver_options.max_work_per_branch = options.max_work_per_branch;
  solver_options.threads = options.threads;

  const auto result = min_weight_solution(instance.matrix(), instance.target(), max_weight, solver_options);
  if (result.status == SolveStatus::infeasible) {
    throw std::logic_error("the target parity vector lies outside the span of the product catalog");
  }
  out.status = result.status;
  out.lower_bound = result.lower_bound;
  if (result.found()) {
    std::vector<KPartiteProduct> products;
    for (auto c : result.support) products.push_back(instance.product(c));
    Mod2Cover cover(k, t, n, std::move(products));
    if (!verify_mod2_cover(cover, 1).valid) throw std::logic_error("search returned a cover that fails verification");
    out.cover = std::move(cover);
  }
  return out;
}

BSearchResult exact_b(std::size_t k, std::size_t t, std::size_t m, std::size_t max_n, const SearchOptions& options) {
  BSearchResult out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    if (catalog_size(k, n) > options.cap) {
      out.reason = "catalog cap " + std::to_string(options.cap) + " reached at n=" + std::to_string(n);
      return out;
    }
    const auto r = min_mod2_cover(k, t, n, m, options);
    ProbeRecord probe{n, r.status, r.lower_bound, std::nullopt};
    if (r.cover) probe.size = r.cover->size();
    out.probes.push_back(probe);
    if (r.found()) {
      out.lower = n;
      continue;
    }
    if (r.status == SolveStatus::weight_bound_exhausted) {
      out.upper = n - 1;
      return out;
    }
    out.reason = "work limit reached at n=" + std::to_string(n) + ", weight " + std::to_string(r.lower_bound);
    return out;
  }
  out.reason = "probe limit n=" + std::to_string(max_n) + " reached";
  return out;
}

std::uint64_t formula_lower_bound(std::size_t k, std::size_t t, std::size_t n) {
  if (k < 2 || t < 2 || t > k) throw std::invalid_argument("bounds need 2 <= t <= k");
  if (n < t) return 0;
  if (k == 2) return n % 2 == 0 ? n : n - 1;
  const auto nn = static_cast<long long>(n);
  std::uint64_t best = 0;
  // Pair reduction: a cover of size s gives a set pair system with C(.,.) members on s + 1 points.
  if (2 * t - 2 <= k) {
    best = binomial(nn, static_cast<long long>(t) - 1) - 1;
  } else {
    const std::size_t pinned = 2 * t - k - 2;
    if (n > pinned) {
      const auto pairs = binomial(nn - static_cast<long long>(pinned), static_cast<long long>(k - t + 1));
      if (pairs > 0) best = pairs - 1;
    }
  }
  if (k == 3 && t == 3) best = std::max<std::uint64_t>(best, n - 2);
  if (t == k && n <= 24) {
    if (k % 2 == 0) {
      if (n >= k) best = std::max<std::uint64_t>(best, cover_size_lower_bound(n, k / 2));
    } else {
      const std::size_t half = (k - 1) / 2;
      if (n - 1 >= 2 * half) best = std::max<std::uint64_t>(best, cover_size_lower_bound(n - 1, half));
    }
  }
  return best;
}

std::uint64_t formula_upper_bound(std::size_t k, std::size_t t, std::size_t n) {
  if (k < 2 || t < 2 || t > k) throw std::invalid_argument("bounds need 2 <= t <= k");
  if (n < t) return 0;
  const auto nn = static_cast<long long>(n);
  std::uint64_t best = partition_cover_size(k, t, n);
  if (k == 2) best = std::min<std::uint64_t>(best, n % 2 == 0 ? n : n - 1);
  if (t == 2) best = std::min<std::uint64_t>(best, n + 1);
  if (k == 3 && t == 3) best = std::min<std::uint64_t>(best, 3 * n + 1);
  if (k == 4 && t == 3) best = std::min<std::uint64_t>(best, 3 * n * n + 4 * n + 1);
  if (t == k) {
    const std::size_t half = (k + 1) / 2;
    const std::size_t choose = k % 2 == 0 ? half : half - 1;
    best = std::min<std::uint64_t>(best, factorial(k) * binomial(nn, static_cast<long long>(choose)));
  }
  return best;
}

ConstructiveBound constructive_upper_bound(std::size_t k, std::size_t t, std::size_t n) {
  if (k < 2 || t < 2 || t > k) throw std::invalid_argument("bounds need 2 <= t <= k");
  if (n < t) return {0, "empty"};
  ConstructiveBound best{partition_cover_size(k, t, n), "partition"};
  const std::size_t cells = power_saturating(n, k);
  auto consider = [&](std::uint64_t size, const char* name, auto&& build) {
    if (size >= best.size) return;
    if (cells <= (std::size_t{1} << 20) && size <= 1'000'000) {
      const Mod2Cover cover = build();
      if (cover.size() != size || !verify_mod2_cover(cover, 1).valid) {
        throw std::logic_error(std::string("construction ") + name + " failed verification");
      }
    }
    best = {size, name};
  };
  if (cells <= (std::size_t{1} << 20) && best.size <= 1'000'000) {
    const auto cover = build_partition_cover(k, t, n);
    if (cover.size() != best.size || !verify_mod2_cover(cover, 1).valid)
      throw std::logic_error("construction partition failed verification");
  }
  if (k == 2) consider(n % 2 == 0 ? n : n - 1, "b22-pair", [&] { return build_cover_22(n); });
  if (t == 2) consider(n + 1, "t2", [&] { return build_cover_t2(k, n); });
  if (k == 3 && t == 3) consider(3 * n + 1, "cover33", [&] { return build_cover_33(n); });
  if (k == 4 && t == 3) consider(3 * n * n + 2 * n + 1, "cover43", [&] { return build_cover_43(n); });
  if (t == k && n >= k) {
    const auto nn = static_cast<long long>(n);
    consider(factorial(k) * binomial(nn, static_cast<long long>(k)), "permuted-gp",
             [&] { return permute_gp_cover(trivial_gp_cover(n, k)); });
  }
  return best;
}

std::vector<BoundsRow> bounds_table(std::size_t k, std::size_t t, std::size_t n_first, std::size_t n_last,
                                    const TableOptions& options) {
  std::vector<BoundsRow> rows;
  for (std::size_t n = n_first; n <= n_last; ++n) {
    BoundsRow row;
    row.k = k;
    row.t = t;
    row.n = n;
    row.lower = formula_lower_bound(k, t, n);
    row.upper = formula_upper_bound(k, t, n);
    row.constructive = constructive_upper_bound(k, t, n);
    if (row.constructive.size == 0) {
      row.exact = 0;
    } else if (options.run_search && n >= 1 && catalog_size(k, n) <= options.search.cap) {
      const auto r = min_mod2_cover(k, t, n, row.constructive.size - 1, options.search);
      row.refuted_below = r.lower_bound;
      if (r.found()) {
        row.exact = r.cover->size();
      } else if (r.lower_bound >= row.constructive.size) {
        row.exact = row.constructive.size;
      } else {
        row.note = "search refutes sizes below " + std::to_string(r.lower_bound);
      }
    }
    if (k == 2 && t == 2 && n >= 2) {
      const std::size_t printed = n % 2 == 1 ? n : n - 1;
      const std::size_t corrected = n % 2 == 0 ? n : n - 1;
      if (!row.note.empty()) row.note += "; ";
      row.note += "erratum: printed case split gives " + std::to_string(printed) + ", corrected value " +
                  std::to_string(corrected);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_table(const std::vector<BoundsRow>& rows) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%3s %3s %4s %12s %12s %12s %-12s %8s  %s\n", "k", "t", "n", "lower", "upper",
                "constructive", "via", "exact", "note");
  out += line;
  for (const auto& r : rows) {
    const std::string exact = r.exact ? std::to_string(*r.exact) : "-";
    std::snprintf(line, sizeof line, "%3zu %3zu %4zu %12llu %12llu %12llu %-12s %8s  ", r.k, r.t, r.n,
                  static_cast<unsigned long long>(r.lower), static_cast<unsigned long long>(r.upper),
                  static_cast<unsigned long long>(r.constructive.size), r.constructive.name.c_str(), exact.c_str());
    out += line;
    out += r.note;
    out += '\n';
  }
  return out;
}

std::string format_table_rows(const std::vector<BoundsRow>& rows) {
  std::string out;
  for (const auto& r : rows) {
    out += std::to_string(r.k) + '\t' + std::to_string(r.t) + '\t' + std::to_string(r.n) + '\t' +
           std::to_string(r.lower) + '\t' + std::to_string(r.upper) + '\t' + std::to_string(r.constructive.size) +
           '\t' + (r.exact ? std::to_string(*r.exact) : std::string()) + '\n';
  }
  return out;
}

std::vector<std::string> table_violations(const std::vector<BoundsRow>& rows) {
  std::vector<std::string> out;
  for (const auto& r : rows) {
    const std::string where =
        "(k,t,n)=(" + std::to_string(r.k) + "," + std::to_string(r.t) + "," + std::to_string(r.n) + "): ";
    if (r.lower > r.upper) out.push_back(where + "lower bound exceeds upper bound");
    if (r.lower > r.constructive.size) out.push_back(where + "lower bound exceeds constructive size");
    if (r.exact) {
      if (*r.exact < r.lower) out.push_back(where + "exact value below lower bound");
      if (*r.exact > r.upper) out.push_back(where + "exact value above upper bound");
      if (*r.exact > r.constructive.size) out.push_back(where + "exact value above constructive size");
      if (*r.exact < r.refuted_below) out.push_back(where + "exact value below refuted sizes");
    }
  }
  return out;
}

}  // namespace oddtown
