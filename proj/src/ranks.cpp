#include "oddtown/ranks.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "oddtown/combinatorics.hpp"

namespace oddtown {

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) acc = acc * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return acc;
}

// C(a, b) mod p for digits a, b < p.
std::uint64_t small_binomial_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (b > a) return 0;
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  for (std::uint64_t i = 0; i < b; ++i) {
    num = num * ((a - i) % p) % p;
    den = den * ((i + 1) % p) % p;
  }
  return num * pow_mod(den, p - 2, p) % p;
}

void require_prime(unsigned p) {
  if (p >= (1U << 31) || !is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not a supported prime");
}

void require_ground(std::size_t n, std::size_t k, std::size_t l) {
  if (n > 64) throw std::invalid_argument("inclusion matrices support n <= 64");
  if (k > n || l > n) throw std::invalid_argument("subset sizes must not exceed n");
}

}  // namespace

unsigned binomial_mod_p(std::uint64_t n, std::uint64_t k, unsigned p) {
  require_prime(p);
  std::uint64_t acc = 1;
  while (k > 0 || n > 0) {
    const std::uint64_t a = n % p;
    const std::uint64_t b = k % p;
    if (b > a) return 0;
    acc = acc * small_binomial_mod(a, b, p) % p;
    n /= p;
    k /= p;
  }
  return static_cast<unsigned>(acc);
}

InclusionMatrix build_inclusion_matrix(std::size_t n, std::size_t k, std::size_t l) {
  require_ground(n, k, l);
  const auto rows = colex_subsets(n, k);
  const auto cols = colex_subsets(n, l);
  InclusionMatrix out{n, k, l, Gf2Matrix(rows.size(), cols.size())};
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      if ((rows[r] & ~cols[c]) == 0) out.matrix.set(r, c);
  return out;
}

Gf2Matrix kneser_adjacency(std::size_t n, std::size_t k) {
  require_ground(n, k, k);
  const auto verts = colex_subsets(n, k);
  Gf2Matrix adj(verts.size(), verts.size());
  for (std::size_t r = 0; r < verts.size(); ++r)
    for (std::size_t c = 0; c < verts.size(); ++c)
      if ((verts[r] & verts[c]) == 0) adj.set(r, c);
  return adj;
}

std::vector<std::vector<std::size_t>> ordered_kneser_vertices(std::size_t n, std::size_t k) {
  return injective_tuples(n, k);
}

bool ordered_kneser_adjacent(const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
  for (auto a : x)
    for (auto b : y)
      if (a == b) return false;
  return true;
}

Gf2Matrix ordered_kneser_adjacency(std::size_t n, std::size_t k) {
  const auto verts = ordered_kneser_vertices(n, k);
  Gf2Matrix adj(verts.size(), verts.size());
  for (std::size_t r = 0; r < verts.size(); ++r)
    for (std::size_t c = 0; c < verts.size(); ++c)
      if (ordered_kneser_adjacent(verts[r], verts[c])) adj.set(r, c);
  return adj;
}

std::uint64_t wilson_rank(std::size_t n, std::size_t k, std::size_t l, unsigned p) {
  require_prime(p);
  if (l > n || k > l || k > n - l) {
    throw std::invalid_argument("wilson_rank needs k <= min(l, n-l); got n=" + std::to_string(n) +
                                " k=" + std::to_string(k) + " l=" + std::to_string(l));
  }
  std::uint64_t total = 0;
  for (std::size_t i = 0; i <= k; ++i) {
    if (binomial_mod_p(l - i, k - i, p) == 0) continue;
    const auto ll_i = static_cast<long long>(i);
    total += binomial(static_cast<long long>(n), ll_i) - binomial(static_cast<long long>(n), ll_i - 1);
  }
  return total;
}

std::size_t inclusion_rank_direct(std::size_t n, std::size_t k, std::size_t l, unsigned p) {
  require_prime(p);
  const auto m = build_inclusion_matrix(n, k, l);
  if (p == 2) return rank_gf2(m.matrix);
  return rank_gfp(GfpMatrix::from_gf2(m.matrix, p));
}

std::size_t sampled_weighted_rank(std::size_t n, std::size_t k, std::size_t l, unsigned p, std::uint64_t seed) {
  require_prime(p);
  const auto m = build_inclusion_matrix(n, k, l);
  GfpMatrix weighted(m.matrix.rows(), m.matrix.cols(), p);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> residue(1, p - 1);
  for (std::size_t r = 0; r < m.matrix.rows(); ++r)
    for (std::size_t c = 0; c < m.matrix.cols(); ++c)
      if (m.matrix.get(r, c)) weighted.set(r, c, residue(rng));
  return rank_gfp(weighted);
}

std::uint64_t kneser_rank_lower_bound(std::size_t n, std::size_t k) {
  if (k < 1 || n < 2 * k || (n - 2 * k) % 36 != 24) {
    throw std::invalid_argument("kneser_rank_lower_bound needs k >= 1 and n - 2k ≡ 24 (mod 36)");
  }
  const std::size_t from = k >= 3 ? k - 3 : 0;
  for (std::size_t i = from; i <= k; ++i) {
    if (binomial_mod_p(n - k - i, k - i, 2) != 1) {
      throw std::logic_error("C(" + std::to_string(n - k - i) + "," + std::to_string(k - i) + ") is even");
    }
  }
  const auto nn = static_cast<long long>(n);
  const auto kk = static_cast<long long>(k);
  const std::uint64_t bound = binomial(nn, kk) - binomial(nn, kk - 4);
  if (wilson_rank(n, k, n - k, 2) < bound) throw std::logic_error("Wilson rank falls below the parity bound");
  return bound;
}

std::size_t cover_size_lower_bound(std::size_t n, std::size_t k) {
  if (k < 1 || 2 * k > n) throw std::invalid_argument("cover_size_lower_bound needs 1 <= k and 2k <= n");
  return (rank_gf2(kneser_adjacency(n, k)) + 1) / 2;
}

}  // namespace oddtown
