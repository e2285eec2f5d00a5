#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "oddtown/gf2.hpp"

namespace oddtown {

// C(n, k) mod p by Lucas' theorem. Throws std::invalid_argument unless p is a prime below 2^31.
unsigned binomial_mod_p(std::uint64_t n, std::uint64_t k, unsigned p);

// Rows: k-subsets of [n]; columns: l-subsets; entry 1 iff row ⊆ column. Both in colex order.
struct InclusionMatrix {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t l = 0;
  Gf2Matrix matrix;
};

// Requires k, l <= n <= 64.
InclusionMatrix build_inclusion_matrix(std::size_t n, std::size_t k, std::size_t l);

// Adjacency of K_{n:k} on the colex-ordered k-subsets: 1 iff disjoint.
Gf2Matrix kneser_adjacency(std::size_t n, std::size_t k);

// Vertices of OK_{n:k}: ordered k-tuples of distinct elements of [n], lexicographic.
std::vector<std::vector<std::size_t>> ordered_kneser_vertices(std::size_t n, std::size_t k);
bool ordered_kneser_adjacent(const std::vector<std::size_t>& x, const std::vector<std::size_t>& y);
Gf2Matrix ordered_kneser_adjacency(std::size_t n, std::size_t k);

// Sum over i in [0, k] with p not dividing C(l-i, k-i) of C(n,i) - C(n,i-1).
// Requires k <= min(l, n-l) and p prime.
std::uint64_t wilson_rank(std::size_t n, std::size_t k, std::size_t l, unsigned p);

// Rank of build_inclusion_matrix(n,k,l) over F_p by elimination.
std::size_t inclusion_rank_direct(std::size_t n, std::size_t k, std::size_t l, unsigned p);

// Rank over F_p after replacing every nonzero entry of the inclusion matrix by a uniform
// nonzero residue drawn from a generator seeded with `seed`. Experimental; no bound claimed.
std::size_t sampled_weighted_rank(std::size_t n, std::size_t k, std::size_t l, unsigned p, std::uint64_t seed);

// C(n,k) - C(n,k-4) for n - 2k ≡ 24 (mod 36), k >= 1, after checking the parities it rests on.
std::uint64_t kneser_rank_lower_bound(std::size_t n, std::size_t k);

// ceil(rank_2(A(K_{n:k})) / 2); requires 1 <= k and 2k <= n.
std::size_t cover_size_lower_bound(std::size_t n, std::size_t k);

}  // namespace oddtown
