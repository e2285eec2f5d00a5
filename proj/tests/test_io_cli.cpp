#include <doctest.h>

#include <filesystem>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "oddtown/cli.hpp"
#include "oddtown/constructions.hpp"
#include "oddtown/io.hpp"

using namespace oddtown;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;

  std::string verdict() const {
    auto end = out.find_last_not_of('\n');
    auto start = out.find_last_of('\n', end);
    return out.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
  }
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "oddtown_cli_tests";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const FormatError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("canonical serialization round-trips byte for byte") {
  const auto family = build_kt_oddtown_family(3, 4);
  const auto text = write_family(family);
  CHECK(text.back() == '\n');
  CHECK(parse_family(text) == family);
  CHECK(write_family(parse_family(text)) == text);

  const auto pair = build_b22_pair(4);
  CHECK(write_tuple(parse_tuple(write_tuple(pair))) == write_tuple(pair));

  const auto cover = build_cover_43(2);
  const auto ctext = write_cover(cover);
  const auto reparsed = parse_cover(ctext);
  CHECK(reparsed.products == cover.products);
  CHECK(write_cover(reparsed) == ctext);

  const auto gp = trivial_gp_cover(4, 2);
  CHECK(write_gp_cover(parse_gp_cover(write_gp_cover(gp))) == write_gp_cover(gp));

  const auto ok = cover_to_ok_biclique_cover(permute_gp_cover(trivial_gp_cover(4, 4)));
  const auto otext = write_ok_biclique_cover(ok);
  CHECK(write_ok_biclique_cover(parse_ok_biclique_cover(otext)) == otext);
}

TEST_CASE("canonical layout") {
  SetFamily f(3, {SubsetBits(3, {3, 1}), SubsetBits(3)});
  CHECK(write_family(f) == "{\n  \"n\": 3,\n  \"sets\": [[1,3],[]]\n}\n");
  VerifyReport r;
  r.add({1, 2}, 1, "even");
  CHECK(write_report(r) ==
        "{\n  \"valid\": false,\n  \"violations\": [{\"indices\":[1,2],\"observed\":1,\"expected\":\"even\"}]\n}\n");
}

TEST_CASE("malformed input is reported with its location") {
  CHECK(message_of([] { parse_family("{\"n\": 3, \"sets\": [[1,2], [4]]}"); }).find("/sets/1/0") == 0);
  CHECK(message_of([] { parse_family("{\"n\": 3, \"sets\": [[2,1]]}"); }).find("/sets/0/1") == 0);
  CHECK(message_of([] { parse_family("{\"n\": 3}"); }).find("missing field \"sets\"") != std::string::npos);
  CHECK(message_of([] { parse_family("{\"n\": 3, \"sets\": [[1]"); }).find("line 1") != std::string::npos);
  CHECK(message_of([] { parse_cover("{\"n\":2,\"k\":2,\"t\":2,\"products\":[[[1],[]]]}"); }).find("/products/0/1") ==
        0);
  CHECK(message_of([] { parse_gp_cover("{\"n\":3,\"k\":2,\"products\":[[[1],[1,2]]]}"); }).find("/products/0") == 0);
  CHECK(message_of([] { parse_tuple("{\"n\":2,\"k\":2,\"t\":2,\"m\":2,\"families\":[[[1],[2]],[[1]]]}"); })
            .find("/families/1") == 0);
}

TEST_CASE("cli: construct then verify") {
  const auto pair = temp_path("pair.json");
  auto r = cli({"construct", "--name", "b22", "--n", "4", "--out", pair});
  CHECK(r.code == kExitOk);
  r = cli({"verify", "--kind", "tuple", "--file", pair});
  CHECK(r.code == kExitOk);
  CHECK(r.verdict() == "valid m=5 n=4");

  const auto c = temp_path("c33.json");
  CHECK(cli({"construct", "--name", "cover33", "--n", "2", "--out", c}).code == kExitOk);
  r = cli({"verify", "--kind", "cover", "--file", c});
  CHECK(r.code == kExitOk);
  CHECK(r.verdict() == "valid size=7 k=3 t=3 n=2");

  const auto loaded = read_text_file(c);
  CHECK(write_cover(parse_cover(loaded)) == loaded);
}

TEST_CASE("cli: invalid objects exit 1 and malformed files exit 2") {
  const auto bad = temp_path("bad_family.json");
  write_text_file(bad, "{\n  \"n\": 3,\n  \"sets\": [[1,2]]\n}\n");
  auto r = cli({"verify", "--kind", "family", "--file", bad});
  CHECK(r.code == kExitInvalid);
  CHECK(r.verdict().rfind("invalid", 0) == 0);

  const auto broken = temp_path("broken.json");
  write_text_file(broken, "{\"n\": 3, \"sets\": [[1,9]]}");
  r = cli({"verify", "--kind", "family", "--file", broken});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("/sets/0/1") != std::string::npos);
  CHECK(r.verdict() == "malformed-input");

  CHECK(cli({"verify", "--kind", "nothing", "--file", bad}).code == kExitUsage);
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"construct", "--name", "b22", "--n", "3"}).code == kExitUsage);
  CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("cli: conversion round trip keeps coverage parity") {
  const auto c = temp_path("c43.json");
  const auto t = temp_path("t43.json");
  const auto back = temp_path("c43_back.json");
  CHECK(cli({"construct", "--name", "cover43", "--n", "2", "--out", c}).code == kExitOk);
  CHECK(cli({"convert", "--direction", "cover-to-tuple", "--in", c, "--out", t}).code == kExitOk);
  CHECK(cli({"verify", "--kind", "tuple", "--file", t}).code == kExitOk);
  CHECK(cli({"convert", "--direction", "tuple-to-cover", "--in", t, "--out", back}).code == kExitOk);
  auto r = cli({"verify", "--kind", "cover", "--file", c, "--parity-diff", back});
  CHECK(r.code == kExitOk);
  CHECK(r.verdict().rfind("identical-parity", 0) == 0);

  const auto t2 = temp_path("t2.json");
  CHECK(cli({"construct", "--name", "t2", "--k", "2", "--n", "2", "--out", t2}).code == kExitOk);
  const auto other = temp_path("c22.json");
  CHECK(cli({"construct", "--name", "cover22", "--n", "2", "--out", other}).code == kExitOk);
  CHECK(cli({"verify", "--kind", "cover", "--file", t2, "--parity-diff", other}).code == kExitOk);
  const auto c33 = temp_path("c33_3.json");
  CHECK(cli({"construct", "--name", "cover33", "--n", "3", "--out", c33}).code == kExitOk);
  const auto linked = temp_path("linked.json");
  r = cli({"convert", "--direction", "link", "--in", c33, "--out", linked});
  CHECK(r.code == kExitOk);
  CHECK(cli({"verify", "--kind", "cover", "--file", linked}).verdict().rfind("valid", 0) == 0);
}

TEST_CASE("cli: rank, search and table verdicts") {
  auto r = cli({"rank", "--n", "5", "--k", "2", "--l", "3", "--p", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.verdict() == "formula=6 direct=6 agree=yes");
  r = cli({"rank", "--n", "6", "--k", "1", "--l", "2", "--p", "4"});
  CHECK(r.code == kExitUsage);
  r = cli({"rank", "--mode", "kneser-bound", "--n", "28", "--k", "2"});
  CHECK(r.verdict() == "bound=378 wilson=378");
  r = cli({"search", "--k", "2", "--t", "2", "--n", "4"});
  CHECK(r.code == kExitOk);
  CHECK(r.verdict() == "found size=4 k=2 t=2 n=4");
  r = cli({"search", "--k", "2", "--t", "2", "--m", "3"});
  CHECK(r.verdict() == "b=3 k=2 t=2 m=3");
  r = cli({"search", "--k", "2", "--t", "2", "--n", "7"});
  CHECK(r.code == kExitUsage);
  r = cli({"table", "--k", "2", "--t", "2", "--n-from", "2", "--n-to", "4", "--rows"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("2\t2\t4\t4\t4\t4\t4\n") != std::string::npos);
  CHECK(r.verdict() == "table rows=3 violations=0");
}
