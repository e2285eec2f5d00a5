#include "oddtown/constructions.hpp"

#include <stdexcept>
#include <string>

#include "oddtown/ranks.hpp"

namespace oddtown {

namespace {

SubsetBits singleton(std::size_t n, std::size_t v) { return SubsetBits(n, {v}); }

KPartiteProduct diagonal_product(std::size_t k, std::size_t n, std::size_t v) {
  return KPartiteProduct(std::vector<SubsetBits>(k, singleton(n, v)));
}

KPartiteProduct full_product(std::size_t k, std::size_t n) {
  return KPartiteProduct(std::vector<SubsetBits>(k, SubsetBits::full(n)));
}

// Exact-once products for the tuples whose coincidence pattern is exactly `pattern`.
// A singleton block, when present, takes every value not used by the pinned blocks;
// otherwise all blocks are pinned. Products with an empty free part are skipped.
void append_pattern_products(const PatternPartition& pattern, std::size_t n,
                             std::vector<KPartiteProduct>& out) {
  const std::size_t r = pattern.block_count();
  const std::size_t free_block = pattern.first_singleton();
  const bool has_free = free_block < r;
  const std::size_t pinned = has_free ? r - 1 : r;
  for (const auto& values : injective_tuples(n, pinned)) {
    std::vector<SubsetBits> parts(pattern.k(), SubsetBits(n));
    SubsetBits rest = SubsetBits::full(n);
    std::size_t next = 0;
    for (std::size_t b = 0; b < r; ++b) {
      if (has_free && b == free_block) continue;
      const std::size_t v = values[next++];
      rest.erase(v);
      for (auto coord : pattern.blocks()[b]) parts[coord - 1] = singleton(n, v);
    }
    if (has_free) {
      if (rest.empty()) continue;
      parts[pattern.blocks()[free_block].front() - 1] = rest;
    }
    out.emplace_back(std::move(parts));
  }
}

SubsetBits intersect_all(std::size_t n, const std::vector<const SubsetBits*>& sets) {
  SubsetBits acc = SubsetBits::full(n);
  for (const auto* s : sets) acc &= *s;
  return acc;
}

// Sorted (index_count)-subsets of {first..last} in lex order.
std::vector<std::vector<std::size_t>> index_sets(std::size_t first, std::size_t last, std::size_t count) {
  std::vector<std::vector<std::size_t>> out;
  if (first > last + 1) return out;
  const std::size_t span = last + 1 - first;
  if (count > span) return out;
  std::vector<std::size_t> cur(count);
  for (std::size_t i = 0; i < count; ++i) cur[i] = first + i;
  while (true) {
    out.push_back(cur);
    std::size_t i = count;
    while (i > 0 && cur[i - 1] == last - (count - i)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < count; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace

TupleSystem build_b22_pair(std::size_t n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("build_b22_pair needs an even n >= 2, got " + std::to_string(n));
  std::vector<SubsetBits> a;
  std::vector<SubsetBits> b;
  for (std::size_t i = 1; i <= n; ++i) {
    a.push_back(singleton(n, i));
    b.push_back(singleton(n, i).complement());
  }
  a.push_back(SubsetBits::full(n));
  b.push_back(SubsetBits::full(n));
  return TupleSystem(2, 2, n, {std::move(a), std::move(b)});
}

Admissibility admissible_n(std::size_t t, std::size_t n) {
  if (t < 2) throw std::invalid_argument("admissible_n needs t >= 2");
  Admissibility out;
  for (std::size_t d = 1; d + 1 <= t; ++d) {
    const std::size_t lower = t - 1 - d;
    const bool odd = n >= d && binomial_mod_p(n - d, lower, 2) == 1;
    if (!odd) {
      out.admissible = false;
      out.failing_d = d;
      out.reason = "C(" + std::to_string(static_cast<long long>(n) - static_cast<long long>(d)) + "," +
                   std::to_string(lower) + ") is even (d=" + std::to_string(d) + ")";
      return out;
    }
  }
  return out;
}

SetFamily build_kt_oddtown_family(std::size_t t, std::size_t n) {
  const auto check = admissible_n(t, n);
  if (!check.admissible) {
    throw std::invalid_argument("n=" + std::to_string(n) + " is not admissible for t=" + std::to_string(t) + ": " +
                                check.reason);
  }
  const auto ground = colex_subsets(n, t - 1);
  SetFamily family;
  family.ground_size = ground.size();
  for (std::size_t i = 0; i < n; ++i) {
    SubsetBits s(ground.size());
    for (std::size_t g = 0; g < ground.size(); ++g)
      if (ground[g] >> i & 1U) s.insert(g + 1);
    family.sets.push_back(std::move(s));
  }
  return family;
}

Mod2Cover build_partition_cover(std::size_t k, std::size_t t, std::size_t n) {
  if (t < 2 || t > k) throw std::invalid_argument("partition cover needs 2 <= t <= k");
  if (n < t) throw std::invalid_argument("partition cover needs n >= t");
  std::vector<KPartiteProduct> products;
  for (const auto& pattern : PatternPartition::all(k)) {
    if (pattern.block_count() <= t - 1) append_pattern_products(pattern, n, products);
  }
  products.push_back(full_product(k, n));
  return Mod2Cover(k, t, n, std::move(products));
}

std::uint64_t partition_cover_size(std::size_t k, std::size_t t, std::size_t n) {
  std::uint64_t total = 1;
  for (const auto& pattern : PatternPartition::all(k)) {
    const std::size_t r = pattern.block_count();
    if (r > t - 1) continue;
    total += pattern.has_singleton() ? falling_factorial(n, r - 1) : falling_factorial(n, r);
  }
  return total;
}

Mod2Cover build_cover_t2(std::size_t k, std::size_t n) {
  if (k < 2) throw std::invalid_argument("build_cover_t2 needs k >= 2");
  if (n < 1) throw std::invalid_argument("build_cover_t2 needs n >= 1");
  std::vector<KPartiteProduct> products;
  for (std::size_t i = 1; i <= n; ++i) products.push_back(diagonal_product(k, n, i));
  products.push_back(full_product(k, n));
  return Mod2Cover(k, 2, n, std::move(products));
}

Mod2Cover build_cover_33(std::size_t n) {
  if (n < 1) throw std::invalid_argument("build_cover_33 needs n >= 1");
  std::vector<KPartiteProduct> products;
  const auto all = SubsetBits::full(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const auto s = singleton(n, i);
    products.emplace_back(std::vector<SubsetBits>{s, s, all});
    products.emplace_back(std::vector<SubsetBits>{s, all, s});
    products.emplace_back(std::vector<SubsetBits>{all, s, s});
  }
  products.push_back(full_product(3, n));
  return Mod2Cover(3, 3, n, std::move(products));
}

Mod2Cover build_cover_43(std::size_t n) {
  auto base = build_cover_t2(4, n);
  std::vector<KPartiteProduct> products = std::move(base.products);
  for (const auto& pattern : PatternPartition::all(4)) {
    if (pattern.block_count() == 2) append_pattern_products(pattern, n, products);
  }
  return Mod2Cover(4, 3, n, std::move(products));
}

Mod2Cover build_cover_22(std::size_t n) {
  if (n < 1) throw std::invalid_argument("build_cover_22 needs n >= 1");
  if (n == 1) return Mod2Cover(2, 2, 1, {});
  const std::size_t ground = n % 2 == 0 ? n : n - 1;
  auto converted = tuple_to_cover(build_b22_pair(ground));
  return restrict_cover(converted.cover, n);
}

// Branch 2t-2 <= k: for I = {i_1 < ... < i_{t-1}},
//   A_I = A_{1,i_1} ∩ ... ∩ A_{t-1,i_{t-1}} ∩ A_{2t-1,i_1} ∩ ... ∩ A_{k,i_1},
//   B_I = A_{t,i_1} ∩ ... ∩ A_{2t-2,i_{t-1}}.
// Branch 2t-2 > k: with a = 2t-k-2 pinned families and q = k-t+1, for I ⊆ [a+1, m], |I| = q,
//   A_I = A_{1,1} ∩ ... ∩ A_{a,a} ∩ A_{a+1,i_1} ∩ ... ∩ A_{t-1,i_q},
//   B_I = A_{t,i_1} ∩ ... ∩ A_{k,i_q}.
// Either way the index tuple behind A_I ∩ B_J has fewer than t distinct entries iff I = J.
TupleSystem reduce_tuple_to_pair(const TupleSystem& tuple) {
  if (!verify_bollobas_tuple(tuple, ParityConvention::standard, 1).valid) {
    throw std::invalid_argument("reduce_tuple_to_pair needs a valid Bollobas tuple");
  }
  const std::size_t k = tuple.k();
  const std::size_t t = tuple.t();
  const std::size_t m = tuple.m();
  const std::size_t n = tuple.ground_size();
  std::vector<SubsetBits> a_sets;
  std::vector<SubsetBits> b_sets;

  if (2 * t - 2 <= k) {
    for (const auto& index : index_sets(1, m, t - 1)) {
      std::vector<const SubsetBits*> a_parts;
      std::vector<const SubsetBits*> b_parts;
      for (std::size_t s = 0; s + 1 < t; ++s) {
        a_parts.push_back(&tuple.set(s + 1, index[s]));
        b_parts.push_back(&tuple.set(t + s, index[s]));
      }
      for (std::size_t j = 2 * t - 1; j <= k; ++j) a_parts.push_back(&tuple.set(j, index[0]));
      a_sets.push_back(intersect_all(n, a_parts));
      b_sets.push_back(intersect_all(n, b_parts));
    }
  } else {
    const std::size_t pinned = 2 * t - k - 2;
    const std::size_t q = k - t + 1;
    if (m <= pinned) {
      throw std::invalid_argument("reduce_tuple_to_pair needs m > " + std::to_string(pinned) + " for (k,t)=(" +
                                  std::to_string(k) + "," + std::to_string(t) + ")");
    }
    for (const auto& index : index_sets(pinned + 1, m, q)) {
      std::vector<const SubsetBits*> a_parts;
      std::vector<const SubsetBits*> b_parts;
      for (std::size_t j = 1; j <= pinned; ++j) a_parts.push_back(&tuple.set(j, j));
      for (std::size_t s = 0; s < q; ++s) {
        a_parts.push_back(&tuple.set(pinned + 1 + s, index[s]));
        b_parts.push_back(&tuple.set(t + s, index[s]));
      }
      a_sets.push_back(intersect_all(n, a_parts));
      b_sets.push_back(intersect_all(n, b_parts));
    }
  }
  return TupleSystem(2, 2, n, {std::move(a_sets), std::move(b_sets)});
}

TupleSystem reduce_triple_b33(const TupleSystem& tuple, std::size_t anchor) {
  if (tuple.k() != 3 || tuple.t() != 3) throw std::invalid_argument("reduce_triple_b33 needs a (3,3)-tuple");
  if (tuple.m() < 2) throw std::invalid_argument("reduce_triple_b33 needs m >= 2");
  if (anchor < 1 || anchor > tuple.m()) throw std::invalid_argument("anchor index out of range");
  if (!verify_bollobas_tuple(tuple, ParityConvention::standard, 1).valid) {
    throw std::invalid_argument("reduce_triple_b33 needs a valid Bollobas triple");
  }
  const auto& base = tuple.set(1, anchor);
  std::vector<SubsetBits> f1;
  std::vector<SubsetBits> f2;
  for (std::size_t i = 1; i <= tuple.m(); ++i) {
    if (i == anchor) continue;
    f1.push_back(base & tuple.set(2, i));
    f2.push_back(base & tuple.set(3, i));
  }
  return TupleSystem(2, 2, tuple.ground_size(), {std::move(f1), std::move(f2)});
}

GpCover trivial_gp_cover(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw std::invalid_argument("trivial_gp_cover needs 1 <= k <= n");
  std::vector<KPartiteProduct> products;
  for (const auto& index : index_sets(1, n, k)) {
    std::vector<SubsetBits> parts;
    for (auto v : index) parts.push_back(singleton(n, v));
    products.emplace_back(std::move(parts));
  }
  return GpCover(n, k, std::move(products));
}

}  // namespace oddtown
