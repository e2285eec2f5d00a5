#include "oddtown/covers.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "oddtown/combinatorics.hpp"

namespace oddtown {

namespace {

const char* parity_name(bool odd) { return odd ? "odd" : "even"; }

std::size_t coverage_count(const Mod2Cover& cover, std::span<const std::size_t> cell) {
  std::size_t count = 0;
  for (const auto& p : cover.products)
    if (p.covers(cell)) ++count;
  return count;
}

// Removes v from s and shifts larger elements down by one.
SubsetBits drop_element(const SubsetBits& s, std::size_t v) {
  SubsetBits out(s.ground_size() - 1);
  for (auto e : s.elements()) {
    if (e < v) out.insert(e);
    if (e > v) out.insert(e - 1);
  }
  return out;
}

}  // namespace

KPartiteProduct::KPartiteProduct(std::vector<SubsetBits> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("product needs at least one part");
  const std::size_t n = parts_.front().ground_size();
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (parts_[j].ground_size() != n) throw std::invalid_argument("product parts have different ground sizes");
    if (parts_[j].empty()) throw std::invalid_argument("product part " + std::to_string(j + 1) + " is empty");
  }
}

bool KPartiteProduct::covers(std::span<const std::size_t> cell) const {
  for (std::size_t j = 0; j < parts_.size(); ++j)
    if (!parts_[j].contains(cell[j])) return false;
  return true;
}

Mod2Cover::Mod2Cover(std::size_t k_, std::size_t t_, std::size_t n_, std::vector<KPartiteProduct> products_)
    : k(k_), t(t_), n(n_), products(std::move(products_)) {
  if (k < 2 || t < 2 || t > k) throw std::invalid_argument("cover needs 2 <= t <= k");
  for (const auto& p : products) {
    if (p.k() != k) throw std::invalid_argument("product has " + std::to_string(p.k()) + " parts, cover has k=" + std::to_string(k));
    if (p.ground_size() != n) throw std::invalid_argument("product ground size differs from cover n");
  }
}

GpCover::GpCover(std::size_t n, std::size_t k, std::vector<KPartiteProduct> products)
    : n_(n), k_(k), products_(std::move(products)) {
  if (k < 1) throw std::invalid_argument("GP cover needs k >= 1");
  for (std::size_t s = 0; s < products_.size(); ++s) {
    const auto& p = products_[s];
    if (p.k() != k || p.ground_size() != n) throw std::invalid_argument("GP product has the wrong shape");
    SubsetBits seen(n);
    for (const auto& part : p.parts()) {
      if (!(seen & part).empty()) {
        throw std::invalid_argument("GP product " + std::to_string(s + 1) + " has overlapping parts");
      }
      seen |= part;
    }
  }
}

std::size_t distinct_index_count(std::span<const std::size_t> indices, std::size_t n) {
  std::vector<std::size_t> sorted(indices.begin(), indices.end());
  for (auto i : sorted) {
    if (i < 1 || i > n) throw std::out_of_range("index " + std::to_string(i) + " outside [" + std::to_string(n) + "]");
  }
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

bool is_target_edge(std::span<const std::size_t> indices, std::size_t t) {
  const std::size_t n = indices.empty() ? 0 : *std::max_element(indices.begin(), indices.end());
  return distinct_index_count(indices, n) >= t;
}

bool coverage_parity(const Mod2Cover& cover, std::span<const std::size_t> cell) {
  return coverage_count(cover, cell) & 1U;
}

VerifyReport verify_mod2_cover(const Mod2Cover& cover, std::size_t cap) {
  VerifyReport report(cap);
  for (CellIterator it(cover.n, cover.k); !it.done() && !report.full(); it.next()) {
    const auto& cell = it.cell();
    const std::size_t count = coverage_count(cover, cell);
    const bool want_odd = distinct_index_count(cell, cover.n) >= cover.t;
    if ((count & 1U) != static_cast<std::size_t>(want_odd)) report.add(cell, count, parity_name(want_odd));
  }
  return report;
}

VerifyReport verify_exact_gp_cover(const GpCover& cover, std::size_t cap) {
  VerifyReport report(cap);
  if (cover.k() > 64 || cover.n() > 64) throw std::invalid_argument("GP verification supports n <= 64");
  for (auto mask : colex_subsets(cover.n(), cover.k())) {
    std::size_t count = 0;
    for (const auto& p : cover.products()) {
      bool hit = true;
      for (const auto& part : p.parts()) {
        std::size_t inside = 0;
        for (auto e : part.elements())
          if (mask >> (e - 1) & 1U) ++inside;
        if (inside != 1) {
          hit = false;
          break;
        }
      }
      if (hit) ++count;
    }
    if (count != 1) {
      std::vector<std::size_t> edge;
      for (std::size_t e = 0; e < cover.n(); ++e)
        if (mask >> e & 1U) edge.push_back(e + 1);
      report.add(std::move(edge), count, "covered exactly once");
      if (report.full()) break;
    }
  }
  return report;
}

VerifyReport parity_difference(const Mod2Cover& a, const Mod2Cover& b, std::size_t cap) {
  if (a.k != b.k || a.n != b.n) throw std::invalid_argument("parity comparison needs covers with equal k and n");
  VerifyReport report(cap);
  for (CellIterator it(a.n, a.k); !it.done() && !report.full(); it.next()) {
    const bool pa = coverage_parity(a, it.cell());
    const bool pb = coverage_parity(b, it.cell());
    if (pa != pb) report.add(it.cell(), pa, parity_name(pb));
  }
  return report;
}

TupleSystem cover_to_tuple(const Mod2Cover& cover) {
  const std::size_t ground = cover.size();
  std::vector<std::vector<SubsetBits>> families(cover.k, std::vector<SubsetBits>(cover.n, SubsetBits(ground)));
  for (std::size_t s = 0; s < ground; ++s) {
    const auto& p = cover.products[s];
    for (std::size_t j = 0; j < cover.k; ++j)
      for (auto i : p.parts()[j].elements()) families[j][i - 1].insert(s + 1);
  }
  return TupleSystem(cover.k, cover.t, ground, std::move(families));
}

TupleCoverConversion tuple_to_cover(const TupleSystem& tuple) {
  TupleCoverConversion out;
  std::vector<KPartiteProduct> products;
  for (std::size_t g = 1; g <= tuple.ground_size(); ++g) {
    std::vector<SubsetBits> parts(tuple.k(), SubsetBits(tuple.m()));
    bool empty_part = false;
    for (std::size_t j = 1; j <= tuple.k(); ++j) {
      for (std::size_t i = 1; i <= tuple.m(); ++i)
        if (tuple.set(j, i).contains(g)) parts[j - 1].insert(i);
      if (parts[j - 1].empty()) empty_part = true;
    }
    if (empty_part) {
      out.dropped_elements.push_back(g);
      continue;
    }
    products.emplace_back(std::move(parts));
  }
  out.cover = Mod2Cover(tuple.k(), tuple.t(), tuple.m(), std::move(products));
  return out;
}

OkBicliqueCover cover_to_ok_biclique_cover(const Mod2Cover& cover) {
  if (cover.k % 2 != 0) throw std::invalid_argument("ordered Kneser reduction needs even k");
  if (cover.t != cover.k) throw std::invalid_argument("ordered Kneser reduction needs t == k");
  const std::size_t half = cover.k / 2;
  OkBicliqueCover out;
  out.n = cover.n;
  out.k = half;
  const auto vertices = injective_tuples(cover.n, half);
  for (const auto& p : cover.products) {
    Biclique b;
    for (const auto& x : vertices) {
      bool in_left = true;
      bool in_right = true;
      for (std::size_t j = 0; j < half; ++j) {
        in_left = in_left && p.parts()[j].contains(x[j]);
        in_right = in_right && p.parts()[half + j].contains(x[j]);
      }
      if (in_left) b.left.push_back(x);
      if (in_right) b.right.push_back(x);
    }
    if (!b.left.empty() && !b.right.empty()) out.bicliques.push_back(std::move(b));
  }
  return out;
}

VerifyReport verify_ok_biclique_cover(const OkBicliqueCover& cover, std::size_t cap) {
  const auto vertices = injective_tuples(cover.n, cover.k);
  const std::size_t count = vertices.size();
  std::map<OrderedTuple, std::size_t> index;
  for (std::size_t i = 0; i < count; ++i) index.emplace(vertices[i], i);
  auto lookup = [&](const OrderedTuple& x) {
    auto it = index.find(x);
    if (it == index.end()) throw std::invalid_argument("biclique vertex is not a vertex of the ordered Kneser graph");
    return it->second;
  };

  std::vector<BitVector> parity(count, BitVector(count));
  for (const auto& b : cover.bicliques) {
    BitVector right(count);
    for (const auto& y : b.right) right.set(lookup(y));
    for (const auto& x : b.left) parity[lookup(x)] ^= right;
  }

  VerifyReport report(cap);
  for (std::size_t i = 0; i < count && !report.full(); ++i) {
    for (std::size_t j = 0; j < count && !report.full(); ++j) {
      const auto& x = vertices[i];
      const auto& y = vertices[j];
      bool disjoint = true;
      for (auto a : x)
        if (std::find(y.begin(), y.end(), a) != y.end()) disjoint = false;
      if (parity[i].test(j) != disjoint) {
        std::vector<std::size_t> pair(x);
        pair.insert(pair.end(), y.begin(), y.end());
        report.add(std::move(pair), parity[i].test(j), parity_name(disjoint));
      }
    }
  }
  return report;
}

Mod2Cover permute_gp_cover(const GpCover& cover) {
  if (!verify_exact_gp_cover(cover, 1).valid) throw std::invalid_argument("input is not an exact GP cover");
  const std::size_t k = cover.k();
  if (k < 2) throw std::invalid_argument("permuted cover needs k >= 2");
  std::vector<KPartiteProduct> products;
  for (const auto& p : cover.products()) {
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<SubsetBits> parts;
      parts.reserve(k);
      for (std::size_t i = 0; i < k; ++i) parts.push_back(p.parts()[perm[i]]);
      products.emplace_back(std::move(parts));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return Mod2Cover(k, k, cover.n(), std::move(products));
}

Mod2Cover link_cover(const Mod2Cover& cover, std::size_t v, std::size_t coordinate) {
  if (cover.t != cover.k) throw std::invalid_argument("link needs a cover of H_{k,k}(n)");
  if (cover.k < 3) throw std::invalid_argument("link needs k >= 3");
  if (v < 1 || v > cover.n) throw std::invalid_argument("link vertex outside [n]");
  if (coordinate < 1 || coordinate > cover.k) throw std::invalid_argument("link coordinate outside [k]");
  if (!verify_mod2_cover(cover, 1).valid) throw std::invalid_argument("link input is not a valid cover");

  std::vector<KPartiteProduct> products;
  for (const auto& p : cover.products) {
    if (!p.part(coordinate).contains(v)) continue;
    std::vector<SubsetBits> parts;
    bool emptied = false;
    for (std::size_t j = 1; j <= cover.k; ++j) {
      if (j == coordinate) continue;
      parts.push_back(drop_element(p.part(j), v));
      if (parts.back().empty()) emptied = true;
    }
    if (!emptied) products.emplace_back(std::move(parts));
  }
  return Mod2Cover(cover.k - 1, cover.k - 1, cover.n - 1, std::move(products));
}

Mod2Cover restrict_cover(const Mod2Cover& cover, std::size_t new_n) {
  if (new_n > cover.n) throw std::invalid_argument("restriction must shrink the ground set");
  std::vector<KPartiteProduct> products;
  for (const auto& p : cover.products) {
    std::vector<SubsetBits> parts;
    bool emptied = false;
    for (const auto& part : p.parts()) {
      parts.push_back(part.with_ground(new_n));
      if (parts.back().empty()) emptied = true;
    }
    if (!emptied) products.emplace_back(std::move(parts));
  }
  return Mod2Cover(cover.k, cover.t, new_n, std::move(products));
}

}  // namespace oddtown
