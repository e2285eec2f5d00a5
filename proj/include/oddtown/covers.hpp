#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "oddtown/bits.hpp"
#include "oddtown/set_systems.hpp"

namespace oddtown {

// Complete k-partite k-graph X_1 x ... x X_k; part j lives in its own copy of [n].
class KPartiteProduct {
 public:
  // Throws std::invalid_argument on an empty part or mismatched ground sizes.
  explicit KPartiteProduct(std::vector<SubsetBits> parts);

  std::size_t k() const { return parts_.size(); }
  std::size_t ground_size() const { return parts_.front().ground_size(); }
  const std::vector<SubsetBits>& parts() const { return parts_; }
  const SubsetBits& part(std::size_t coordinate) const { return parts_[coordinate - 1]; }

  // True iff cell[j] ∈ X_{j+1} for every coordinate.
  bool covers(std::span<const std::size_t> cell) const;

  bool operator==(const KPartiteProduct&) const = default;

 private:
  std::vector<SubsetBits> parts_;
};

// Ordered multiset of products targeting H_{k,t}(n).
struct Mod2Cover {
  std::size_t k = 2;
  std::size_t t = 2;
  std::size_t n = 0;
  std::vector<KPartiteProduct> products;

  Mod2Cover() = default;
  // Throws std::invalid_argument on bad (k,t) or a product of another shape.
  Mod2Cover(std::size_t k, std::size_t t, std::size_t n, std::vector<KPartiteProduct> products);

  std::size_t size() const { return products.size(); }
};

// Products with pairwise disjoint parts inside one [n], targeting C([n], k) exactly once.
class GpCover {
 public:
  GpCover(std::size_t n, std::size_t k, std::vector<KPartiteProduct> products);

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t size() const { return products_.size(); }
  const std::vector<KPartiteProduct>& products() const { return products_; }

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<KPartiteProduct> products_;
};

using OrderedTuple = std::vector<std::size_t>;

struct Biclique {
  std::vector<OrderedTuple> left;
  std::vector<OrderedTuple> right;
};

// Biclique system on the ordered Kneser graph OK_{n:k}. A biclique (L, R) covers the
// ordered vertex pair (x, y) when x ∈ L and y ∈ R.
struct OkBicliqueCover {
  std::size_t n = 0;
  std::size_t k = 1;
  std::vector<Biclique> bicliques;
};

// |{i_1, ..., i_k}|; throws std::out_of_range for entries outside [n].
std::size_t distinct_index_count(std::span<const std::size_t> indices, std::size_t n);
bool is_target_edge(std::span<const std::size_t> indices, std::size_t t);

bool coverage_parity(const Mod2Cover& cover, std::span<const std::size_t> cell);

// Exhaustive over the n^k cells.
VerifyReport verify_mod2_cover(const Mod2Cover& cover, std::size_t cap = VerifyReport::kDefaultCap);

VerifyReport verify_exact_gp_cover(const GpCover& cover, std::size_t cap = VerifyReport::kDefaultCap);

// Cells where the two covers' parity functions differ. Both must share (k, n).
VerifyReport parity_difference(const Mod2Cover& a, const Mod2Cover& b,
                               std::size_t cap = VerifyReport::kDefaultCap);

// Ground elements are the products; A_{j,i} = {s : i ∈ part j of product s}.
TupleSystem cover_to_tuple(const Mod2Cover& cover);

struct TupleCoverConversion {
  Mod2Cover cover;
  // Ground elements whose product would have an empty part; each was skipped.
  std::vector<std::size_t> dropped_elements;
};

// One product per ground element g with part j = {i : g ∈ A_{j,i}}.
TupleCoverConversion tuple_to_cover(const TupleSystem& tuple);

// Requires even k and t == k. Bicliques with an empty side are dropped.
OkBicliqueCover cover_to_ok_biclique_cover(const Mod2Cover& cover);

// Odd coverage exactly on ordered pairs of disjoint vertices.
VerifyReport verify_ok_biclique_cover(const OkBicliqueCover& cover,
                                      std::size_t cap = VerifyReport::kDefaultCap);

// Every coordinate permutation of every product. Throws unless the input is exact.
Mod2Cover permute_gp_cover(const GpCover& cover);

// Link of vertex v in coordinate `coordinate`: keep products whose part there contains v,
// drop that coordinate and remove v from the remaining parts (relabelling [n] \ {v} as [n-1]).
// Throws unless the input is a valid cover of H_{k,k}(n) with k >= 3.
Mod2Cover link_cover(const Mod2Cover& cover, std::size_t v, std::size_t coordinate);
inline Mod2Cover link_cover(const Mod2Cover& cover) { return link_cover(cover, cover.n, cover.k); }

// Intersect every part with [n'] and drop emptied products.
Mod2Cover restrict_cover(const Mod2Cover& cover, std::size_t new_n);

}  // namespace oddtown
