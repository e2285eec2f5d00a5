// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oddtown/combinatorics.hpp"
#include "oddtown/constructions.hpp"
#include "oddtown/covers.hpp"
#include "oddtown/gf2.hpp"
#include "oddtown/ranks.hpp"
#include "oddtown/search.hpp"
#include "oddtown/set_systems.hpp"
#include "oracles.hpp"

using namespace oddtown;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Mod2Cover> fixture_covers() {
  std::vector<Mod2Cover> out;
  for (std::size_t k = 2; k <= 4; ++k)
    for (std::size_t t = 2; t <= k; ++t)
      for (std::size_t n = 2; n <= 4; ++n) {
        if (n >= t) out.push_back(build_partition_cover(k, t, n));
        if (t == 2) out.push_back(build_cover_t2(k, n));
      }
  for (std::size_t n = 2; n <= 4; ++n) {
    out.push_back(build_cover_22(n));
    out.push_back(build_cover_33(n));
    out.push_back(build_cover_43(n));
  }
  out.push_back(permute_gp_cover(trivial_gp_cover(4, 4)));
  out.push_back(permute_gp_cover(trivial_gp_cover(4, 3)));
  out.push_back(*min_mod2_cover(3, 3, 3, 6).cover);
  out.push_back(*min_mod2_cover(2, 2, 4, 4).cover);
  return out;
}

std::vector<TupleSystem> fixture_tuples() {
  std::vector<TupleSystem> out;
  for (const auto& c : fixture_covers()) out.push_back(cover_to_tuple(c));
  for (std::size_t n = 2; n <= 12; n += 2) out.push_back(build_b22_pair(n));
  for (std::size_t t = 2; t <= 4; ++t)
    for (std::size_t n = t; n <= 7; ++n)
      if (admissible_n(t, n).admissible)
        for (std::size_t k = t; k <= 4; ++k)
          out.push_back(add_auxiliary_element(diagonal_tuple(build_kt_oddtown_family(t, n), k, t)));
  return out;
}

Outcome criterion_oddtown() {
  Outcome o;
  const auto start = Clock::now();
  std::mt19937_64 rng(20240101);
  std::size_t largest = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial) % 16;
    SetFamily f(n, {});
    for (int attempt = 0; attempt < 600; ++attempt) {
      auto s = oracle::random_subset(n, rng);
      if (!s.parity()) continue;
      bool ok = true;
      for (const auto& other : f.sets) ok = ok && !(s & other).parity();
      if (ok) f.sets.push_back(s);
    }
    o.require(verify_oddtown(f).valid, "generated family fails the oddtown rules");
    o.require(f.size() <= n, "family larger than n");
    Gf2Matrix m(f.size(), n);
    for (std::size_t i = 0; i < f.size(); ++i)
      for (auto e : f.sets[i].elements()) m.set(i, e - 1);
    o.require(rank_gf2(m) == f.size(), "characteristic vectors are dependent");
    o.require(oddtown_certificate(f).independent, "certificate reports a dependency");
    largest = std::max(largest, f.size());
  }
  const double secs = seconds_since(start);
  o.require(secs < 5.0, "runtime above 5 s");
  if (o.pass) o.detail = "200 families, largest " + std::to_string(largest) + ", " + std::to_string(secs) + " s";
  return o;
}

Outcome criterion_skew() {
  Outcome o;
  std::size_t instances = 0, mutations = 0;
  auto check_mutations = [&](const SetFamily& a, const SetFamily& b, SkewCondition cond) {
    // Flip one element of A_i lying in B_j: exactly the parity of |A_i ∩ B_j| changes among pairs (i, j).
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (cond == SkewCondition::upper_triangular && i > j) continue;
        for (auto e : b.sets[j].elements()) {
          auto mutated = a;
          if (mutated.sets[i].contains(e)) {
            mutated.sets[i].erase(e);
          } else {
            mutated.sets[i].insert(e);
          }
          ++mutations;
          o.require(!verify_skew_oddtown(mutated, b, cond).valid, "a single parity mutation went undetected");
        }
      }
  };
  for (std::size_t n = 1; n <= 12; ++n) {
    SetFamily a(n, {}), b(n, {});
    for (std::size_t i = 1; i <= n; ++i) {
      a.sets.push_back(SubsetBits(n, {i}));
      b.sets.push_back(SubsetBits(n, {i}));
    }
    o.require(verify_skew_oddtown(a, b).valid, "diagonal singletons rejected");
    o.require(verify_skew_oddtown(a, b, SkewCondition::symmetric).valid, "diagonal singletons rejected (symmetric)");
    check_mutations(a, b, SkewCondition::upper_triangular);
    ++instances;
  }
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial) % 10;
    const auto cond = trial % 2 == 0 ? SkewCondition::upper_triangular : SkewCondition::symmetric;
    SetFamily a(n, {}), b(n, {});
    for (int attempt = 0; attempt < 400; ++attempt) {
      const auto x = oracle::random_subset(n, rng), y = oracle::random_subset(n, rng);
      if (!(x & y).parity()) continue;
      bool ok = true;
      for (std::size_t i = 0; i < a.size(); ++i) {
        ok = ok && !(a.sets[i] & y).parity();
        if (cond == SkewCondition::symmetric) ok = ok && !(x & b.sets[i]).parity();
      }
      if (ok) {
        a.sets.push_back(x);
        b.sets.push_back(y);
      }
    }
    o.require(verify_skew_oddtown(a, b, cond).valid, "generated instance fails verification");
    o.require(a.size() <= n, "valid skew instance with m > n");
    check_mutations(a, b, cond);
    ++instances;
  }
  if (o.pass) {
    o.detail = std::to_string(instances) + " instances, " + std::to_string(mutations) + " mutations detected";
  }
  return o;
}

Outcome criterion_b22() {
  Outcome o;
  for (std::size_t n = 2; n <= 12; n += 2) {
    const auto pair = build_b22_pair(n);
    o.require(verify_bollobas_tuple(pair).valid && pair.m() == n + 1, "even pair construction fails");
  }
  std::size_t pairs = 0;
  std::vector<TupleSystem> twos;
  for (const auto& t : fixture_tuples())
    if (t.k() == 2) twos.push_back(t);
  for (const auto& t : fixture_tuples()) {
    const std::size_t k = t.k(), tt = t.t(), m = t.m();
    if (2 * tt - 2 <= k || m > 2 * tt - k - 2) twos.push_back(reduce_tuple_to_pair(t));
  }
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20000; ++trial) {
    const std::size_t n = 1 + rng() % 4, m = 1 + rng() % 6;
    std::vector<std::vector<SubsetBits>> fams(2);
    for (auto& fam : fams)
      for (std::size_t i = 0; i < m; ++i) fam.push_back(oracle::random_subset(n, rng));
    TupleSystem t(2, 2, n, fams);
    if (verify_bollobas_tuple(t, ParityConvention::standard, 1).valid) twos.push_back(t);
  }
  for (const auto& t : twos) {
    if (!verify_bollobas_tuple(t, ParityConvention::standard, 1).valid) continue;
    ++pairs;
    o.require(t.m() <= t.ground_size() + 1, "valid (2,2)-tuple with m > n + 1");
  }
  auto timed_b = [&](std::size_t m, std::size_t expected) {
    const auto start = Clock::now();
    const auto b = exact_b(2, 2, m, 10);
    const double secs = seconds_since(start);
    o.require(b.exact() && b.lower == expected, "b(" + std::to_string(m) + ") differs from " + std::to_string(expected));
    o.require(secs < 60.0, "b(" + std::to_string(m) + ") took over 60 s");
    return secs;
  };
  const double s3 = timed_b(3, 3);
  const double s4 = timed_b(4, 5);
  if (o.pass) {
    o.detail = std::to_string(pairs) + " valid pairs within m <= n+1; b(3)=3 in " + std::to_string(s3) +
               " s, b(4)=5 in " + std::to_string(s4) + " s";
  }
  return o;
}

std::vector<BoundsRow> table_22;

Outcome criterion_f22() {
  Outcome o;
  const auto start = Clock::now();
  const std::vector<std::size_t> expected{0, 0, 2, 2, 4};
  std::vector<std::size_t> f(7, 0);
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto r = min_mod2_cover(2, 2, n, 8);
    o.require(r.found() && r.cover->size() == expected[n], "f(" + std::to_string(n) + ") wrong");
    if (!r.found()) continue;
    f[n] = r.cover->size();
    const auto refute = min_mod2_cover(2, 2, n, f[n] - 1);
    o.require(refute.status == SolveStatus::weight_bound_exhausted && refute.lower_bound == f[n],
              "smaller weights not refuted for n=" + std::to_string(n));
  }
  const auto r5 = min_mod2_cover(2, 2, 5, 8);
  o.require(r5.found() && r5.cover->size() == 4, "f(5) != 4");
  f[5] = r5.found() ? r5.cover->size() : 0;
  f[1] = min_mod2_cover(2, 2, 1, 1).cover->size();

  table_22 = bounds_table(2, 2, 1, 6);
  const std::vector<std::uint64_t> corrected{0, 2, 2, 4, 4, 6};
  for (std::size_t i = 0; i < table_22.size(); ++i) {
    const auto& row = table_22[i];
    o.require(row.exact && *row.exact == corrected[i], "table row n=" + std::to_string(row.n) + " not exact");
    if (row.n >= 2) o.require(row.note.find("erratum") != std::string::npos, "missing erratum note");
  }
  if (table_22.size() == 6 && table_22[5].exact) f[6] = *table_22[5].exact;

  std::size_t checked = 0;
  for (std::size_t m = 1; m <= 4; ++m) {
    const auto b = exact_b(2, 2, m, 10);
    o.require(b.exact(), "b(" + std::to_string(m) + ") not exact");
    for (std::size_t n = 1; n <= 6; ++n) {
      o.require((f[n] <= m) == (b.lower >= n), "Galois connection fails at n=" + std::to_string(n) +
                                                   ", m=" + std::to_string(m));
      ++checked;
    }
  }
  const double secs = seconds_since(start);
  o.require(secs < 300.0, "runtime above 5 min");
  if (o.pass) {
    o.detail = "f(1..6) = 0,2,2,4,4,6; " + std::to_string(checked) + " Galois pairs; " + std::to_string(secs) + " s";
  }
  return o;
}

Outcome criterion_correspondence() {
  Outcome o;
  const auto covers = fixture_covers();
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> shapes;
  for (const auto& c : covers) {
    if (c.k > 4 || c.n < 2 || c.n > 4) continue;
    o.require(verify_mod2_cover(c).valid, "fixture cover invalid");
    const auto tuple = cover_to_tuple(c);
    o.require(verify_bollobas_tuple(tuple).valid, "cover_to_tuple output invalid");
    const auto back = tuple_to_cover(tuple);
    o.require(parity_difference(back.cover, c).valid, "round trip changes the parity function");
    shapes.insert({c.k, c.t, c.n});
  }
  o.require(covers.size() >= 10, "fewer than 10 fixture covers");
  if (o.pass) {
    o.detail = std::to_string(covers.size()) + " covers over " + std::to_string(shapes.size()) + " (k,t,n) shapes";
  }
  return o;
}

Outcome criterion_constructions() {
  Outcome o;
  double worst = 0;
  auto timed = [&](const std::string& name, const std::function<bool()>& check) {
    const auto start = Clock::now();
    o.require(check(), name + " failed");
    const double secs = seconds_since(start);
    worst = std::max(worst, secs);
    o.require(secs < 30.0, name + " took over 30 s");
  };
  for (std::size_t n = 1; n <= 5; ++n) {
    timed("cover33 n=" + std::to_string(n), [&] {
      const auto c = build_cover_33(n);
      return c.size() == 3 * n + 1 && verify_mod2_cover(c).valid;
    });
  }
  for (std::size_t k = 2; k <= 5; ++k)
    for (std::size_t n = 1; n <= 5; ++n)
      timed("t2 k=" + std::to_string(k) + " n=" + std::to_string(n), [&] {
        const auto c = build_cover_t2(k, n);
        return c.size() == n + 1 && verify_mod2_cover(c).valid;
      });
  for (std::size_t n = 2; n <= 4; ++n)
    timed("cover43 n=" + std::to_string(n), [&] {
      const auto c = build_cover_43(n);
      return c.size() == 3 * n * n + 2 * n + 1 && c.size() <= 3 * n * n + 4 * n + 1 && verify_mod2_cover(c).valid;
    });
  timed("cover43 n=1", [&] { return verify_mod2_cover(build_cover_43(1)).valid; });
  std::size_t partition_checks = 0;
  for (std::size_t k = 2; k <= 5; ++k)
    for (std::size_t t = 2; t <= k; ++t)
      for (std::size_t n = t; n <= 4; ++n) {
        ++partition_checks;
        timed("partition (" + std::to_string(k) + "," + std::to_string(t) + "," + std::to_string(n) + ")", [&] {
          const auto c = build_partition_cover(k, t, n);
          return c.size() == partition_cover_size(k, t, n) && verify_mod2_cover(c).valid;
        });
      }
  if (o.pass) {
    o.detail = std::to_string(partition_checks) + " partition covers plus 3n+1, n+1, 3n^2+2n+1 families; slowest " +
               std::to_string(worst) + " s";
  }
  return o;
}

Outcome criterion_gp_pipeline() {
  Outcome o;
  const auto start = Clock::now();
  const auto cover = permute_gp_cover(trivial_gp_cover(5, 4));
  o.require(cover.size() == 120, "permuted cover size is not 120");
  // Exactly once on edges, never elsewhere.
  for (CellIterator it(5, 4); !it.done(); it.next()) {
    std::size_t count = 0;
    for (const auto& p : cover.products) count += p.covers(it.cell()) ? 1 : 0;
    const bool edge = distinct_index_count(it.cell(), 5) == 4;
    o.require(count == (edge ? 1U : 0U), "coverage is not exact-once");
  }
  const auto ok = cover_to_ok_biclique_cover(cover);
  o.require(verify_ok_biclique_cover(ok).valid, "biclique image is not a mod-2 cover of OK_{5:2}");
  const auto bound = cover_size_lower_bound(5, 2);
  o.require(bound == 3, "rank bound for (5,2) is not 3");
  o.require(ok.bicliques.size() >= bound && cover.size() >= bound, "size below the rank bound");
  const auto c33 = build_cover_33(3);
  o.require(verify_mod2_cover(c33).valid, "H_{3,3}(3) cover invalid");
  const auto linked = link_cover(c33);
  o.require(linked.k == 2 && linked.t == 2 && linked.n == 2 && verify_mod2_cover(linked).valid,
            "link is not a valid H_{2,2}(2) cover");
  const double secs = seconds_since(start);
  o.require(secs < 60.0, "runtime above 60 s");
  if (o.pass) {
    o.detail = "120 products exact-once; " + std::to_string(ok.bicliques.size()) + " bicliques >= 3; link valid; " +
               std::to_string(secs) + " s";
  }
  return o;
}

Outcome criterion_wilson() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t cases = 0;
  for (std::size_t n = 0; n <= 12; ++n)
    for (std::size_t l = 0; l <= n; ++l)
      for (std::size_t k = 0; k <= std::min(l, n - l); ++k)
        for (unsigned p : {2U, 3U, 5U}) {
          ++cases;
          const auto formula = wilson_rank(n, k, l, p);
          const auto direct = inclusion_rank_direct(n, k, l, p);
          o.require(formula == direct, "mismatch at (n,k,l,p)=(" + std::to_string(n) + "," + std::to_string(k) + "," +
                                           std::to_string(l) + "," + std::to_string(p) + ")");
        }
  o.require(rank_gf2(build_inclusion_matrix(3, 1, 2).matrix) == 2, "rank of M_{3,1,2} is not 2");
  o.require(rank_gf2(build_inclusion_matrix(5, 2, 3).matrix) == 6, "rank of M_{5,2,3} is not 6");
  const auto k28 = rank_gf2(kneser_adjacency(28, 2));
  o.require(k28 == 378, "rank of A(K_{28:2}) is not 378");
  o.require(kneser_rank_lower_bound(28, 2) == 378, "parity bound at n=28 is not 378");
  const double secs = seconds_since(start);
  o.require(secs < 600.0, "runtime above 10 min");
  if (o.pass) o.detail = std::to_string(cases) + " cases agree; A(K_{28:2}) rank 378; " + std::to_string(secs) + " s";
  return o;
}

Outcome criterion_reductions() {
  Outcome o;
  const auto family = build_kt_oddtown_family(3, 4);
  o.require(verify_kt_oddtown(family, 4, 3).valid, "t=3, n=4 family invalid");
  o.require(verify_oddtown(reduce_33_oddtown(family)).valid, "reduced family fails oddtown rules");
  std::size_t reduced = 0;
  for (const auto& tuple : fixture_tuples()) {
    if (!verify_bollobas_tuple(tuple, ParityConvention::standard, 1).valid) {
      o.require(false, "fixture tuple invalid");
      continue;
    }
    const std::size_t k = tuple.k(), t = tuple.t(), m = tuple.m();
    if (k == 3 && t == 3 && m >= 2) {
      const auto pair = reduce_triple_b33(tuple);
      o.require(verify_bollobas_tuple(pair).valid, "triple reduction output invalid");
      o.require(pair.m() == m - 1 && pair.m() <= tuple.ground_size() + 1, "triple reduction breaks m-1 <= n+1");
      ++reduced;
    }
    if (2 * t - 2 > k && m <= 2 * t - k - 2) continue;
    const auto pair = reduce_tuple_to_pair(tuple);
    o.require(verify_bollobas_tuple(pair).valid, "pair reduction output invalid");
    const std::uint64_t size = 2 * t - 2 <= k ? binomial(static_cast<long long>(m), static_cast<long long>(t) - 1)
                                              : binomial(static_cast<long long>(m - (2 * t - k - 2)),
                                                         static_cast<long long>(k - t + 1));
    o.require(pair.m() == size, "pair reduction has the wrong number of sets");
    o.require(size <= tuple.ground_size() + 1, "C(m,t-1) exceeds n+1");
    ++reduced;
  }
  if (o.pass) o.detail = std::to_string(reduced) + " reductions verified";
  return o;
}

Outcome criterion_bounds_grid() {
  Outcome o;
  TableOptions opts;
  opts.search.max_work_per_branch = 2'000'000;
  std::vector<BoundsRow> grid = table_22;
  auto add = [&](std::size_t k, std::size_t t, std::size_t last) {
    const auto rows = bounds_table(k, t, 1, last, opts);
    grid.insert(grid.end(), rows.begin(), rows.end());
  };
  add(3, 2, 5);
  add(3, 3, 4);
  add(4, 2, 4);
  add(4, 3, 4);
  add(4, 4, 6);
  add(5, 2, 4);
  add(5, 3, 5);
  add(5, 4, 5);
  add(5, 5, 6);
  const auto problems = table_violations(grid);
  if (!problems.empty()) o.require(false, problems.front());
  // Constructive sizes beyond the table against the lower-bound formulas.
  std::size_t extra = 0;
  for (std::size_t n = 1; n <= 12; ++n) {
    o.require(build_cover_33(n).size() >= formula_lower_bound(3, 3, n), "cover33 below the lower bound");
    o.require(3 * n * n + 2 * n + 1 >= formula_lower_bound(4, 3, n), "cover43 below the lower bound");
    for (std::size_t k = 2; k <= 6; ++k) o.require(n + 1 >= formula_lower_bound(k, 2, n), "t2 below the lower bound");
    extra += 7;
  }
  std::size_t exact = 0;
  for (const auto& r : grid) exact += r.exact ? 1 : 0;
  if (o.pass) {
    o.detail = std::to_string(grid.size()) + " rows (" + std::to_string(exact) + " exact) and " +
               std::to_string(extra) + " extra sizes, 0 violations";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"oddtown bound", criterion_oddtown},
      {"skew oddtown", criterion_skew},
      {"set pair values", criterion_b22},
      {"exact two-coordinate covers", criterion_f22},
      {"cover/tuple correspondence", criterion_correspondence},
      {"construction validity", criterion_constructions},
      {"permuted GP, biclique and link pipeline", criterion_gp_pipeline},
      {"Wilson rank oracle", criterion_wilson},
      {"reductions", criterion_reductions},
      {"bounds grid", criterion_bounds_grid},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %zu (%s): %s - %s\n", i + 1, criteria[i].first, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
