#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "oddtown/combinatorics.hpp"
#include "oddtown/covers.hpp"
#include "oddtown/set_systems.hpp"

namespace oddtown {

// Set pair of size n+1 on [n]: A_i = {i}, B_i = [n] \ {i}, plus A = B = [n]. n even, n >= 2.
TupleSystem build_b22_pair(std::size_t n);

struct Admissibility {
  bool admissible = true;
  // First d in [1, t-1] with C(n-d, t-1-d) even, when not admissible.
  std::optional<std::size_t> failing_d;
  std::string reason;
};

// C(n-d, t-1-d) odd for every 1 <= d <= t-1 (Lucas parity).
Admissibility admissible_n(std::size_t t, std::size_t n);

// Ground set: the (t-1)-subsets of [n] in colex order. Set i holds those containing i.
SetFamily build_kt_oddtown_family(std::size_t t, std::size_t n);

// [n]^k plus exact-once covers of every coincidence class with at most t-1 blocks.
Mod2Cover build_partition_cover(std::size_t k, std::size_t t, std::size_t n);
// Number of products build_partition_cover emits.
std::uint64_t partition_cover_size(std::size_t k, std::size_t t, std::size_t n);

// Diagonal singletons {i}^k plus [n]^k; size n+1.
Mod2Cover build_cover_t2(std::size_t k, std::size_t n);

// {i}x{i}x[n], {i}x[n]x{i}, [n]x{i}x{i} for each i, plus [n]^3; size 3n+1.
Mod2Cover build_cover_33(std::size_t n);

// build_cover_t2(4, n) plus exact covers of the seven two-block patterns of [4].
Mod2Cover build_cover_43(std::size_t n);

// Cover of H_{2,2}(n) read off build_b22_pair on an even ground set, restricted to [n];
// size n for even n, n-1 for odd n, 0 for n = 1.
Mod2Cover build_cover_22(std::size_t n);

// Pair system from a valid (k,t)-tuple; see constructions.cpp for the index scheme.
TupleSystem reduce_tuple_to_pair(const TupleSystem& tuple);

// F_1 = {A_{1,a} ∩ A_{2,i}}, F_2 = {A_{1,a} ∩ A_{3,i}} over i != a, for a valid (3,3)-tuple.
TupleSystem reduce_triple_b33(const TupleSystem& tuple, std::size_t anchor = 1);

// All C(n,k) products of k increasing singletons.
GpCover trivial_gp_cover(std::size_t n, std::size_t k);

}  // namespace oddtown
