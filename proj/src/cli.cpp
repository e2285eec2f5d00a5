#include "oddtown/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "oddtown/constructions.hpp"
#include "oddtown/io.hpp"
#include "oddtown/ranks.hpp"
#include "oddtown/search.hpp"

namespace oddtown {

namespace {

// Failure of an object the artifact itself produced.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Params {
  std::string kind;
  std::string file;
  std::string file2;
  std::string rule = "oddtown";
  std::string condition = "upper";
  std::string convention = "standard";
  std::string parity_diff;
  std::string report;
  std::string name;
  std::string direction;
  std::string in;
  std::string out;
  std::string mode = "inclusion";
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t t = 0;
  std::size_t l = 0;
  std::size_t m = 0;
  std::size_t n_from = 1;
  std::size_t n_to = 0;
  std::size_t v = 0;
  std::size_t coordinate = 0;
  std::size_t new_n = 0;
  std::size_t anchor = 1;
  std::size_t budget = 0;
  std::size_t cap = 4096;
  std::size_t violation_cap = VerifyReport::kDefaultCap;
  std::uint64_t work_limit = 0;
  unsigned p = 2;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  bool sample = false;
  bool no_symmetry = false;
  bool rows = false;
};

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

void print_violations(const VerifyReport& report, std::ostream& out) {
  for (const auto& v : report.violations) {
    out << "violation " << join(v.indices) << " observed=" << v.observed << " expected=" << v.expected << '\n';
  }
}

int report_verdict(const VerifyReport& report, const std::string& valid_line, const Params& p, std::ostream& out) {
  print_violations(report, out);
  if (!p.report.empty()) write_text_file(p.report, write_report(report));
  if (report.valid) {
    out << "valid " << valid_line << '\n';
    return kExitOk;
  }
  out << "invalid violations=" << report.violations.size() << (report.full() ? "+" : "") << '\n';
  return kExitInvalid;
}

std::size_t require(std::size_t value, const char* flag) {
  if (value == 0) throw CLI::ValidationError(std::string("--") + flag + " is required and must be positive");
  return value;
}

int cmd_verify(const Params& p, std::ostream& out) {
  const std::string text = read_text_file(p.file);
  if (p.kind == "family") {
    const auto family = parse_family(text);
    const std::string tail = "m=" + std::to_string(family.size()) + " n=" + std::to_string(family.ground_size);
    if (p.rule == "oddtown") return report_verdict(verify_oddtown(family, p.violation_cap), tail, p, out);
    if (p.rule == "kt") {
      return report_verdict(verify_kt_oddtown(family, require(p.k, "k"), require(p.t, "t"), p.violation_cap), tail,
                            p, out);
    }
    const auto other = parse_family(read_text_file(p.file2));
    const auto cond = p.condition == "symmetric" ? SkewCondition::symmetric : SkewCondition::upper_triangular;
    return report_verdict(verify_skew_oddtown(family, other, cond, p.violation_cap), tail, p, out);
  }
  if (p.kind == "tuple") {
    const auto tuple = parse_tuple(text);
    const auto conv = p.convention == "complementary" ? ParityConvention::complementary : ParityConvention::standard;
    return report_verdict(verify_bollobas_tuple(tuple, conv, p.violation_cap),
                          "m=" + std::to_string(tuple.m()) + " n=" + std::to_string(tuple.ground_size()), p, out);
  }
  if (p.kind == "cover") {
    const auto cover = parse_cover(text);
    if (!p.parity_diff.empty()) {
      const auto other = parse_cover(read_text_file(p.parity_diff));
      if (other.k != cover.k || other.n != cover.n) throw CLI::ValidationError("covers differ in k or n");
      const auto diff = parity_difference(cover, other, p.violation_cap);
      print_violations(diff, out);
      if (diff.valid) {
        out << "identical-parity k=" << cover.k << " n=" << cover.n << '\n';
        return kExitOk;
      }
      out << "parity-differs cells=" << diff.violations.size() << (diff.full() ? "+" : "") << '\n';
      return kExitInvalid;
    }
    return report_verdict(verify_mod2_cover(cover, p.violation_cap),
                          "size=" + std::to_string(cover.size()) + " k=" + std::to_string(cover.k) +
                              " t=" + std::to_string(cover.t) + " n=" + std::to_string(cover.n),
                          p, out);
  }
  if (p.kind == "gp-cover") {
    const auto cover = parse_gp_cover(text);
    return report_verdict(verify_exact_gp_cover(cover, p.violation_cap),
                          "size=" + std::to_string(cover.size()) + " k=" + std::to_string(cover.k()) +
                              " n=" + std::to_string(cover.n()),
                          p, out);
  }
  const auto cover = parse_ok_biclique_cover(text);
  return report_verdict(verify_ok_biclique_cover(cover, p.violation_cap),
                        "size=" + std::to_string(cover.bicliques.size()) + " k=" + std::to_string(cover.k) +
                            " n=" + std::to_string(cover.n),
                        p, out);
}

void check_own_output(const VerifyReport& report, const std::string& what) {
  if (!report.valid) throw InternalError(what + " failed its verifier");
}

void emit(const Params& p, const std::string& text, std::ostream& out) {
  if (p.out.empty()) {
    out << text;
  } else {
    write_text_file(p.out, text);
  }
}

int cmd_construct(const Params& p, std::ostream& out) {
  const std::string& name = p.name;
  std::string text;
  std::string summary;
  auto cover_result = [&](const Mod2Cover& cover) {
    check_own_output(verify_mod2_cover(cover, 1), name);
    text = write_cover(cover);
    summary = "size=" + std::to_string(cover.size()) + " k=" + std::to_string(cover.k) +
              " t=" + std::to_string(cover.t) + " n=" + std::to_string(cover.n);
  };
  if (name == "b22") {
    const auto tuple = build_b22_pair(require(p.n, "n"));
    check_own_output(verify_bollobas_tuple(tuple, ParityConvention::standard, 1), name);
    text = write_tuple(tuple);
    summary = "m=" + std::to_string(tuple.m()) + " n=" + std::to_string(tuple.ground_size());
  } else if (name == "kt-oddtown") {
    const std::size_t t = require(p.t, "t");
    const auto family = build_kt_oddtown_family(t, require(p.n, "n"));
    const std::size_t k = p.k == 0 ? std::max<std::size_t>(t, family.size()) : p.k;
    check_own_output(verify_kt_oddtown(family, k, t, 1), name);
    text = write_family(family);
    summary = "m=" + std::to_string(family.size()) + " n=" + std::to_string(family.ground_size);
  } else if (name == "partition") {
    cover_result(build_partition_cover(require(p.k, "k"), require(p.t, "t"), require(p.n, "n")));
  } else if (name == "t2") {
    cover_result(build_cover_t2(require(p.k, "k"), require(p.n, "n")));
  } else if (name == "cover22") {
    cover_result(build_cover_22(require(p.n, "n")));
  } else if (name == "cover33") {
    cover_result(build_cover_33(require(p.n, "n")));
  } else if (name == "cover43") {
    cover_result(build_cover_43(require(p.n, "n")));
  } else if (name == "trivial-gp") {
    const auto gp = trivial_gp_cover(require(p.n, "n"), require(p.k, "k"));
    check_own_output(verify_exact_gp_cover(gp, 1), name);
    text = write_gp_cover(gp);
    summary = "size=" + std::to_string(gp.size()) + " k=" + std::to_string(gp.k()) + " n=" + std::to_string(gp.n());
  } else if (name == "permuted-gp") {
    cover_result(permute_gp_cover(trivial_gp_cover(require(p.n, "n"), require(p.k, "k"))));
  } else {
    throw CLI::ValidationError("unknown construction " + name);
  }
  emit(p, text, out);
  out << "constructed name=" << name << ' ' << summary << '\n';
  return kExitOk;
}

int cmd_convert(const Params& p, std::ostream& out) {
  const std::string text = read_text_file(p.in);
  const std::string& dir = p.direction;
  std::string result;
  std::string summary;
  if (dir == "cover-to-tuple") {
    const auto cover = parse_cover(text);
    const auto tuple = cover_to_tuple(cover);
    if (verify_mod2_cover(cover, 1).valid) check_own_output(verify_bollobas_tuple(tuple, ParityConvention::standard, 1), dir);
    result = write_tuple(tuple);
    summary = "m=" + std::to_string(tuple.m()) + " n=" + std::to_string(tuple.ground_size());
  } else if (dir == "tuple-to-cover") {
    const auto tuple = parse_tuple(text);
    const auto conv = tuple_to_cover(tuple);
    if (verify_bollobas_tuple(tuple, ParityConvention::standard, 1).valid) check_own_output(verify_mod2_cover(conv.cover, 1), dir);
    result = write_cover(conv.cover);
    summary = "size=" + std::to_string(conv.cover.size()) + " dropped=" + std::to_string(conv.dropped_elements.size());
  } else if (dir == "cover-to-ok") {
    const auto cover = parse_cover(text);
    const auto ok = cover_to_ok_biclique_cover(cover);
    if (verify_mod2_cover(cover, 1).valid) check_own_output(verify_ok_biclique_cover(ok, 1), dir);
    result = write_ok_biclique_cover(ok);
    summary = "size=" + std::to_string(ok.bicliques.size());
  } else if (dir == "link") {
    const auto cover = parse_cover(text);
    const auto linked = link_cover(cover, p.v == 0 ? cover.n : p.v, p.coordinate == 0 ? cover.k : p.coordinate);
    check_own_output(verify_mod2_cover(linked, 1), dir);
    result = write_cover(linked);
    summary = "size=" + std::to_string(linked.size()) + " k=" + std::to_string(linked.k) + " n=" + std::to_string(linked.n);
  } else if (dir == "restrict") {
    const auto cover = parse_cover(text);
    const auto restricted = restrict_cover(cover, p.new_n);
    if (verify_mod2_cover(cover, 1).valid) check_own_output(verify_mod2_cover(restricted, 1), dir);
    result = write_cover(restricted);
    summary = "size=" + std::to_string(restricted.size()) + " n=" + std::to_string(restricted.n);
  } else if (dir == "reduce-pair" || dir == "reduce-b33") {
    const auto tuple = parse_tuple(text);
    const auto pair = dir == "reduce-pair" ? reduce_tuple_to_pair(tuple) : reduce_triple_b33(tuple, p.anchor);
    check_own_output(verify_bollobas_tuple(pair, ParityConvention::standard, 1), dir);
    result = write_tuple(pair);
    summary = "m=" + std::to_string(pair.m()) + " n=" + std::to_string(pair.ground_size());
  } else if (dir == "reduce-oddtown33") {
    const auto family = parse_family(text);
    const auto reduced = reduce_33_oddtown(family, p.anchor);
    if (verify_kt_oddtown(family, 3, 3, 1).valid) check_own_output(verify_oddtown(reduced, 1), dir);
    result = write_family(reduced);
    summary = "m=" + std::to_string(reduced.size()) + " n=" + std::to_string(reduced.ground_size);
  } else if (dir == "gp-permute") {
    const auto gp = parse_gp_cover(text);
    const auto cover = permute_gp_cover(gp);
    check_own_output(verify_mod2_cover(cover, 1), dir);
    result = write_cover(cover);
    summary = "size=" + std::to_string(cover.size());
  } else if (dir == "add-aux" || dir == "strip-aux") {
    const auto tuple = parse_tuple(text);
    const auto changed = dir == "add-aux" ? add_auxiliary_element(tuple) : strip_auxiliary_element(tuple);
    result = write_tuple(changed);
    summary = "m=" + std::to_string(changed.m()) + " n=" + std::to_string(changed.ground_size());
  } else {
    throw CLI::ValidationError("unknown direction " + dir);
  }
  emit(p, result, out);
  out << "converted direction=" << dir << ' ' << summary << '\n';
  return kExitOk;
}

int cmd_rank(const Params& p, std::ostream& out) {
  if (p.mode == "kneser-bound") {
    const auto bound = kneser_rank_lower_bound(p.n, p.k);
    const auto wilson = wilson_rank(p.n, p.k, p.n - p.k, 2);
    out << "n=" << p.n << " k=" << p.k << '\n';
    out << "bound=" << bound << " wilson=" << wilson << '\n';
    return kExitOk;
  }
  if (p.mode == "cover-bound") {
    out << "cover-lower-bound=" << cover_size_lower_bound(p.n, p.k) << " n=" << p.n << " k=" << p.k << '\n';
    return kExitOk;
  }
  out << "n=" << p.n << " k=" << p.k << " l=" << p.l << " p=" << p.p << '\n';
  if (p.k > p.n || p.l > p.n) throw CLI::ValidationError("k and l must not exceed n");
  if (p.sample) {
    out << "sampled-weighted-rank=" << sampled_weighted_rank(p.n, p.k, p.l, p.p, p.seed) << " seed=" << p.seed
        << " (experimental, no bound asserted)\n";
  }
  std::string formula = "n/a";
  std::uint64_t formula_value = 0;
  const bool in_domain = p.k <= p.l && p.k <= p.n - p.l;
  if (in_domain) {
    formula_value = wilson_rank(p.n, p.k, p.l, p.p);
    formula = std::to_string(formula_value);
  } else if (!is_prime(p.p)) {
    throw CLI::ValidationError(std::to_string(p.p) + " is not prime");
  }
  const auto entries = static_cast<double>(binomial(static_cast<long long>(p.n), static_cast<long long>(p.k))) *
                       static_cast<double>(binomial(static_cast<long long>(p.n), static_cast<long long>(p.l)));
  std::string direct = "skipped";
  std::string agree = "unknown";
  if (entries <= 1e6) {
    const auto d = inclusion_rank_direct(p.n, p.k, p.l, p.p);
    direct = std::to_string(d);
    if (in_domain) agree = d == formula_value ? "yes" : "no";
  }
  out << "formula=" << formula << " direct=" << direct << " agree=" << agree << '\n';
  return agree == "no" ? kExitInternal : kExitOk;
}

SearchOptions search_options(const Params& p) {
  SearchOptions opts;
  opts.cap = p.cap;
  opts.use_symmetry = !p.no_symmetry;
  opts.threads = p.threads;
  if (p.work_limit != 0) opts.max_work_per_branch = p.work_limit;
  return opts;
}

int cmd_search(const Params& p, std::ostream& out) {
  const auto opts = search_options(p);
  const std::size_t k = require(p.k, "k");
  const std::size_t t = require(p.t, "t");
  if (p.m != 0) {
    const auto b = exact_b(k, t, p.m, p.budget == 0 ? 12 : p.budget, opts);
    for (const auto& probe : b.probes) {
      out << "probe n=" << probe.n << " status=" << to_string(probe.status);
      if (probe.size) out << " size=" << *probe.size;
      out << " lower_bound=" << probe.lower_bound << '\n';
    }
    if (b.exact()) {
      out << "b=" << b.lower << " k=" << k << " t=" << t << " m=" << p.m << '\n';
    } else {
      out << "bracket lower=" << b.lower << " upper=" << (b.upper ? std::to_string(*b.upper) : "unknown")
          << " reason=\"" << b.reason << "\"\n";
    }
    return kExitOk;
  }
  const std::size_t n = require(p.n, "n");
  const auto r = min_mod2_cover(k, t, n, p.budget == 0 ? 8 : p.budget, opts);
  out << "catalog=" << r.catalog_size << '\n';
  if (r.found()) {
    if (!p.out.empty()) write_text_file(p.out, write_cover(*r.cover));
    out << "found size=" << r.cover->size() << " k=" << k << " t=" << t << " n=" << n << '\n';
  } else {
    out << to_string(r.status) << " lower_bound=" << r.lower_bound << " k=" << k << " t=" << t << " n=" << n << '\n';
  }
  return kExitOk;
}

int cmd_table(const Params& p, std::ostream& out) {
  TableOptions opts;
  opts.search = search_options(p);
  if (p.work_limit == 0) opts.search.max_work_per_branch = TableOptions{}.search.max_work_per_branch;
  opts.run_search = p.budget != 1;
  const std::size_t k = require(p.k, "k");
  const std::size_t t = require(p.t, "t");
  const std::size_t last = p.n_to == 0 ? p.n_from : p.n_to;
  const auto rows = bounds_table(k, t, p.n_from, last, opts);
  const auto text = format_table(rows);
  const auto machine = format_table_rows(rows);
  if (!p.out.empty()) {
    write_text_file(p.out + ".txt", text);
    write_text_file(p.out + ".rows", machine);
  } else {
    out << (p.rows ? machine : text);
  }
  const auto problems = table_violations(rows);
  for (const auto& v : problems) out << "violation " << v << '\n';
  out << "table rows=" << rows.size() << " violations=" << problems.size() << '\n';
  return problems.empty() ? kExitOk : kExitInternal;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Params p;
  CLI::App app{"Workbench for modulo-2 oddtown problems, covers, ranks and exact search", "oddtown"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "check a family, tuple or cover file");
  verify->add_option("--kind", p.kind)->required()->check(CLI::IsMember({"family", "tuple", "cover", "gp-cover", "ok-cover"}));
  verify->add_option("--file", p.file)->required();
  verify->add_option("--rule", p.rule)->check(CLI::IsMember({"oddtown", "kt", "skew"}));
  verify->add_option("--file2", p.file2, "second family for --rule skew");
  verify->add_option("--condition", p.condition)->check(CLI::IsMember({"upper", "symmetric"}));
  verify->add_option("--convention", p.convention)->check(CLI::IsMember({"standard", "complementary"}));
  verify->add_option("--parity-diff", p.parity_diff, "compare coverage parity with another cover");
  verify->add_option("--report", p.report, "write the JSON report here");
  verify->add_option("--k", p.k);
  verify->add_option("--t", p.t);
  verify->add_option("--max-violations", p.violation_cap);

  auto* construct = app.add_subcommand("construct", "build an explicit construction");
  construct->add_option("--name", p.name)
      ->required()
      ->check(CLI::IsMember({"b22", "kt-oddtown", "partition", "t2", "cover22", "cover33", "cover43", "trivial-gp",
                             "permuted-gp"}));
  construct->add_option("--n", p.n);
  construct->add_option("--k", p.k);
  construct->add_option("--t", p.t);
  construct->add_option("--out", p.out);

  auto* convert = app.add_subcommand("convert", "translate between covers and set tuples");
  convert->add_option("--direction", p.direction)
      ->required()
      ->check(CLI::IsMember({"cover-to-tuple", "tuple-to-cover", "cover-to-ok", "link", "restrict", "reduce-pair",
                             "reduce-b33", "reduce-oddtown33", "gp-permute", "add-aux", "strip-aux"}));
  convert->add_option("--in", p.in)->required();
  convert->add_option("--out", p.out);
  convert->add_option("--v", p.v, "linked vertex (default n)");
  convert->add_option("--coordinate", p.coordinate, "linked coordinate (default k)");
  convert->add_option("--new-n", p.new_n, "ground size after restriction");
  convert->add_option("--anchor", p.anchor);

  auto* rank = app.add_subcommand("rank", "inclusion-matrix ranks and Kneser bounds");
  rank->add_option("--mode", p.mode)->check(CLI::IsMember({"inclusion", "kneser-bound", "cover-bound"}));
  rank->add_option("--n", p.n)->required();
  rank->add_option("--k", p.k)->required();
  rank->add_option("--l", p.l);
  rank->add_option("--p", p.p);
  rank->add_flag("--sample-weights", p.sample, "random nonzero weights (experimental)");
  rank->add_option("--seed", p.seed);

  auto* search = app.add_subcommand("search", "exact minimum cover or b value");
  search->add_option("--k", p.k)->required();
  search->add_option("--t", p.t)->required();
  auto* n_opt = search->add_option("--n", p.n);
  auto* m_opt = search->add_option("--m", p.m);
  n_opt->excludes(m_opt);
  search->add_option("--budget", p.budget, "largest weight searched (with --n) or largest n probed (with --m)");
  search->add_option("--cap", p.cap);
  search->add_option("--work-limit", p.work_limit);
  search->add_flag("--no-symmetry", p.no_symmetry);
  search->add_option("--threads", p.threads);
  search->add_option("--out", p.out);

  auto* table = app.add_subcommand("table", "bounds table with exact values where search succeeds");
  table->add_option("--k", p.k)->required();
  table->add_option("--t", p.t)->required();
  table->add_option("--n-from", p.n_from);
  table->add_option("--n-to", p.n_to);
  table->add_option("--cap", p.cap);
  table->add_option("--work-limit", p.work_limit);
  table->add_option("--budget", p.budget, "1 disables search");
  table->add_option("--threads", p.threads);
  table->add_flag("--rows", p.rows, "print the tab-separated rows instead of aligned text");
  table->add_option("--out", p.out, "write <out>.txt and <out>.rows");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help() << "ok help\n";
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help() << "ok help\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    out << "usage-error\n";
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(p, out);
    if (construct->parsed()) return cmd_construct(p, out);
    if (convert->parsed()) return cmd_convert(p, out);
    if (rank->parsed()) return cmd_rank(p, out);
    if (search->parsed()) return cmd_search(p, out);
    return cmd_table(p, out);
  } catch (const FormatError& e) {
    err << "malformed input: " << e.what() << '\n';
    out << "malformed-input\n";
    return kExitUsage;
  } catch (const InternalError& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    out << "internal-error\n";
    return kExitInternal;
  } catch (const CLI::ValidationError& e) {
    err << e.what() << '\n';
    out << "usage-error\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    out << "usage-error\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    out << "internal-error\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    out << "usage-error\n";
    return kExitUsage;
  }
}

}  // namespace oddtown
