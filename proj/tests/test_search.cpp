#include <doctest.h>

#include <stdexcept>

#include <bit>
#include <set>
#include <tuple>

#include "oddtown/constructions.hpp"
#include "oddtown/search.hpp"
#include "oracles.hpp"

using namespace oddtown;

namespace {

// rank over F_2 of the all-ones matrix minus the identity, via span enumeration.
std::size_t j_minus_i_rank(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (r != c) m.set(r, c);
  return oracle::span_rank(m);
}

}  // namespace

TEST_CASE("catalog layout") {
  const SearchInstance inst(2, 2, 3);
  CHECK(inst.catalog_size() == 49);
  CHECK(inst.matrix().rows() == 9);
  CHECK(inst.column_parts(0) == std::vector<std::uint32_t>{1, 1});
  CHECK(inst.column_parts(1) == std::vector<std::uint32_t>{1, 2});
  CHECK(inst.column_parts(7) == std::vector<std::uint32_t>{2, 1});
  for (std::size_t c = 0; c < inst.catalog_size(); ++c) CHECK(inst.column_index(inst.column_parts(c)) == c);
  CHECK(inst.target().count() == 6);
  CHECK_THROWS_AS(SearchInstance(2, 2, 7), std::invalid_argument);
  CHECK_THROWS_AS(SearchInstance(2, 3, 3), std::invalid_argument);
  CHECK(catalog_size(3, 4) == 3375);
}

TEST_CASE("orbit representatives cover every orbit") {
  const SearchInstance inst(2, 2, 3);
  const auto reps = inst.orbit_representatives();
  CHECK(reps.front() == 0);
  CHECK(reps.size() < inst.catalog_size());
  // Orbits of pairs of nonempty subsets of [3] under S_3 and swapping coordinates,
  // counted by the sizes (|A ∩ B|, |A \ B|, |B \ A|) up to swapping the last two.
  std::set<std::vector<std::size_t>> types;
  for (std::size_t c = 0; c < inst.catalog_size(); ++c) {
    const auto parts = inst.column_parts(c);
    const std::size_t both = std::popcount(parts[0] & parts[1]);
    std::size_t a = std::popcount(parts[0] & ~parts[1]);
    std::size_t b = std::popcount(parts[1] & ~parts[0]);
    if (a > b) std::swap(a, b);
    types.insert({both, a, b});
  }
  CHECK(reps.size() == types.size());
}

TEST_CASE("minimum covers for two coordinates") {
  SearchOptions plain;
  plain.use_symmetry = false;
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto r = min_mod2_cover(2, 2, n, 6);
    REQUIRE(r.found());
    CHECK(r.cover->size() == j_minus_i_rank(n));
    CHECK(oracle::cover_is_valid(*r.cover));
    if (n <= 4) {
      const auto unreduced = min_mod2_cover(2, 2, n, 6, plain);
      REQUIRE(unreduced.found());
      CHECK(unreduced.cover->size() == r.cover->size());
    }
  }
  const auto three = min_mod2_cover(2, 2, 3, 6, plain);
  CHECK(three.cover->size() == 2);
  const auto below = min_mod2_cover(2, 2, 4, 3);
  CHECK(below.status == SolveStatus::weight_bound_exhausted);
  CHECK(below.lower_bound == 4);
  CHECK(min_mod2_cover(2, 2, 1, 3).cover->size() == 0);
}

TEST_CASE("search agrees with brute force on tiny catalogs") {
  for (auto [k, t, n] : {std::tuple<std::size_t, std::size_t, std::size_t>{2, 2, 2},
                         {3, 2, 2},
                         {3, 3, 2},
                         {2, 2, 3}}) {
    const SearchInstance inst(k, t, n);
    const auto brute = oracle::brute_min_weight(inst.matrix(), inst.target(), 3);
    const auto r = min_mod2_cover(k, t, n, 3);
    REQUIRE(brute.first);
    REQUIRE(r.found());
    CHECK(r.cover->size() == brute.second.size());
  }
}

TEST_CASE("symmetry reduction leaves optimal values unchanged") {
  SearchOptions plain;
  plain.use_symmetry = false;
  for (auto [k, t, n] : {std::tuple<std::size_t, std::size_t, std::size_t>{3, 2, 2},
                         {3, 2, 3},
                         {3, 3, 3},
                         {4, 2, 2},
                         {4, 3, 2},
                         {4, 4, 2}}) {
    const auto a = min_mod2_cover(k, t, n, 10);
    const auto b = min_mod2_cover(k, t, n, 10, plain);
    REQUIRE(a.found());
    REQUIRE(b.found());
    CHECK(a.cover->size() == b.cover->size());
  }
}

TEST_CASE("b values and the Galois connection") {
  CHECK(exact_b(2, 2, 2, 10).lower == 3);
  const auto b3 = exact_b(2, 2, 3, 10);
  CHECK(b3.exact());
  CHECK(b3.lower == 3);
  // f on n = 1..6 from search, b on m = 1..4.
  std::vector<std::size_t> f{0};
  for (std::size_t n = 1; n <= 5; ++n) f.push_back(min_mod2_cover(2, 2, n, 6).cover->size());
  for (std::size_t m = 1; m <= 3; ++m) {
    const auto b = exact_b(2, 2, m, 10);
    REQUIRE(b.exact());
    for (std::size_t n = 1; n <= 5; ++n) CHECK((f[n] <= m) == (b.lower >= n));
  }
  SearchOptions small_cap;
  small_cap.cap = 300;
  const auto capped = exact_b(2, 2, 9, 10, small_cap);
  CHECK_FALSE(capped.exact());
  CHECK_FALSE(capped.reason.empty());
}

TEST_CASE("bounds table rows are consistent") {
  const auto rows = bounds_table(2, 2, 1, 5);
  CHECK(table_violations(rows).empty());
  const std::vector<std::uint64_t> expected{0, 2, 2, 4, 4};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    REQUIRE(rows[i].exact.has_value());
    CHECK(*rows[i].exact == expected[i]);
  }
  CHECK(rows[1].note.find("erratum") != std::string::npos);
  const auto text = format_table(rows);
  CHECK(text.find("constructive") != std::string::npos);
  const auto machine = format_table_rows(rows);
  CHECK(machine.find("2\t2\t3\t2\t2\t2\t2\n") != std::string::npos);

  TableOptions quick;
  quick.run_search = false;
  const auto big = bounds_table(4, 3, 2, 4, quick);
  CHECK(table_violations(big).empty());
  CHECK(big[1].constructive.size == 34);
  CHECK(big[1].upper == 34);
  CHECK(formula_upper_bound(4, 3, 3) == 34);
  CHECK(formula_lower_bound(4, 3, 3) == 2);
  CHECK(formula_lower_bound(3, 3, 5) == 3);
  CHECK(formula_lower_bound(5, 4, 5) == 5);
  CHECK(formula_lower_bound(4, 4, 5) == 3);
}
