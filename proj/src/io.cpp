#include "oddtown/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace oddtown {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("syntax error at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw FormatError((where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& field(const Json& obj, const char* name, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) fail(where, std::string("missing field \"") + name + "\"");
  return *it;
}

std::size_t count_field(const Json& obj, const char* name, const std::string& where) {
  const Json& v = field(obj, name, where);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    fail(where + "/" + name, "expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

const Json& array_at(const Json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array");
  return v;
}

SubsetBits read_set(const Json& v, std::size_t n, const std::string& where) {
  array_at(v, where);
  SubsetBits s(n);
  std::size_t previous = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string at = where + "/" + std::to_string(i);
    if (!v[i].is_number_integer()) fail(at, "expected an integer element");
    const long long e = v[i].get<long long>();
    if (e < 1 || static_cast<std::size_t>(e) > n) fail(at, "element " + std::to_string(e) + " outside [1," + std::to_string(n) + "]");
    if (static_cast<std::size_t>(e) <= previous) fail(at, "elements must be strictly increasing");
    previous = static_cast<std::size_t>(e);
    s.insert(previous);
  }
  return s;
}

std::vector<KPartiteProduct> read_products(const Json& doc, std::size_t n, std::size_t k) {
  const Json& list = array_at(field(doc, "products", ""), "/products");
  std::vector<KPartiteProduct> products;
  for (std::size_t p = 0; p < list.size(); ++p) {
    const std::string at = "/products/" + std::to_string(p);
    array_at(list[p], at);
    if (list[p].size() != k) fail(at, "expected " + std::to_string(k) + " parts");
    std::vector<SubsetBits> parts;
    for (std::size_t j = 0; j < k; ++j) {
      parts.push_back(read_set(list[p][j], n, at + "/" + std::to_string(j)));
      if (parts.back().empty()) fail(at + "/" + std::to_string(j), "empty part");
    }
    products.emplace_back(std::move(parts));
  }
  return products;
}

Json set_json(const SubsetBits& s) { return Json(s.elements()); }

Json product_json(const KPartiteProduct& p) {
  Json out = Json::array();
  for (const auto& part : p.parts()) out.push_back(set_json(part));
  return out;
}

Json tuples_json(const std::vector<OrderedTuple>& tuples) {
  Json out = Json::array();
  for (const auto& t : tuples) out.push_back(Json(t));
  return out;
}

// One field per line, values compact.
std::string layout(const Json& obj) {
  std::string out = "{\n";
  std::size_t i = 0;
  for (auto it = obj.begin(); it != obj.end(); ++it, ++i) {
    out += "  " + Json(it.key()).dump() + ": " + it.value().dump();
    out += i + 1 < obj.size() ? ",\n" : "\n";
  }
  out += "}\n";
  return out;
}

}  // namespace

SetFamily parse_family(std::string_view text) {
  const Json doc = parse_json(text);
  const std::size_t n = count_field(doc, "n", "");
  const Json& sets = array_at(field(doc, "sets", ""), "/sets");
  std::vector<SubsetBits> members;
  for (std::size_t i = 0; i < sets.size(); ++i) members.push_back(read_set(sets[i], n, "/sets/" + std::to_string(i)));
  return SetFamily(n, std::move(members));
}

TupleSystem parse_tuple(std::string_view text) {
  const Json doc = parse_json(text);
  const std::size_t n = count_field(doc, "n", "");
  const std::size_t k = count_field(doc, "k", "");
  const std::size_t t = count_field(doc, "t", "");
  const std::size_t m = count_field(doc, "m", "");
  if (k < 2) fail("/k", "k must be at least 2");
  if (t < 2 || t > k) fail("/t", "t must lie in [2, k]");
  const Json& fams = array_at(field(doc, "families", ""), "/families");
  if (fams.size() != k) fail("/families", "expected " + std::to_string(k) + " families");
  std::vector<std::vector<SubsetBits>> families(k);
  for (std::size_t j = 0; j < k; ++j) {
    const std::string at = "/families/" + std::to_string(j);
    array_at(fams[j], at);
    if (fams[j].size() != m) fail(at, "expected " + std::to_string(m) + " sets");
    for (std::size_t i = 0; i < m; ++i) families[j].push_back(read_set(fams[j][i], n, at + "/" + std::to_string(i)));
  }
  return TupleSystem(k, t, n, std::move(families));
}

Mod2Cover parse_cover(std::string_view text) {
  const Json doc = parse_json(text);
  const std::size_t n = count_field(doc, "n", "");
  const std::size_t k = count_field(doc, "k", "");
  const std::size_t t = count_field(doc, "t", "");
  if (k < 2) fail("/k", "k must be at least 2");
  if (t < 2 || t > k) fail("/t", "t must lie in [2, k]");
  return Mod2Cover(k, t, n, read_products(doc, n, k));
}

GpCover parse_gp_cover(std::string_view text) {
  const Json doc = parse_json(text);
  const std::size_t n = count_field(doc, "n", "");
  const std::size_t k = count_field(doc, "k", "");
  if (k < 1) fail("/k", "k must be at least 1");
  if (doc.contains("t")) fail("/t", "GP covers carry no t field");
  auto products = read_products(doc, n, k);
  for (std::size_t p = 0; p < products.size(); ++p) {
    const auto& parts = products[p].parts();
    for (std::size_t a = 0; a < parts.size(); ++a)
      for (std::size_t b = a + 1; b < parts.size(); ++b)
        if (!(parts[a] & parts[b]).empty()) {
          fail("/products/" + std::to_string(p), "parts " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                                                     " intersect");
        }
  }
  return GpCover(n, k, std::move(products));
}

OkBicliqueCover parse_ok_biclique_cover(std::string_view text) {
  const Json doc = parse_json(text);
  OkBicliqueCover out;
  out.n = count_field(doc, "n", "");
  out.k = count_field(doc, "k", "");
  const Json& list = array_at(field(doc, "bicliques", ""), "/bicliques");
  auto read_side = [&](const Json& side, const std::string& at) {
    std::vector<OrderedTuple> tuples;
    array_at(side, at);
    for (std::size_t i = 0; i < side.size(); ++i) {
      const std::string here = at + "/" + std::to_string(i);
      array_at(side[i], here);
      if (side[i].size() != out.k) fail(here, "expected " + std::to_string(out.k) + " entries");
      OrderedTuple tuple;
      for (const auto& e : side[i]) {
        if (!e.is_number_integer() || e.get<long long>() < 1 || e.get<std::size_t>() > out.n)
          fail(here, "entries must lie in [1," + std::to_string(out.n) + "]");
        tuple.push_back(e.get<std::size_t>());
      }
      tuples.push_back(std::move(tuple));
    }
    return tuples;
  };
  for (std::size_t b = 0; b < list.size(); ++b) {
    const std::string at = "/bicliques/" + std::to_string(b);
    out.bicliques.push_back({read_side(field(list[b], "left", at), at + "/left"),
                             read_side(field(list[b], "right", at), at + "/right")});
  }
  return out;
}

std::string write_family(const SetFamily& family) {
  Json sets = Json::array();
  for (const auto& s : family.sets) sets.push_back(set_json(s));
  Json doc;
  doc["n"] = family.ground_size;
  doc["sets"] = std::move(sets);
  return layout(doc);
}

std::string write_tuple(const TupleSystem& tuple) {
  Json families = Json::array();
  for (const auto& fam : tuple.families()) {
    Json sets = Json::array();
    for (const auto& s : fam) sets.push_back(set_json(s));
    families.push_back(std::move(sets));
  }
  Json doc;
  doc["n"] = tuple.ground_size();
  doc["k"] = tuple.k();
  doc["t"] = tuple.t();
  doc["m"] = tuple.m();
  doc["families"] = std::move(families);
  return layout(doc);
}

std::string write_cover(const Mod2Cover& cover) {
  Json products = Json::array();
  for (const auto& p : cover.products) products.push_back(product_json(p));
  Json doc;
  doc["n"] = cover.n;
  doc["k"] = cover.k;
  doc["t"] = cover.t;
  doc["products"] = std::move(products);
  return layout(doc);
}

std::string write_gp_cover(const GpCover& cover) {
  Json products = Json::array();
  for (const auto& p : cover.products()) products.push_back(product_json(p));
  Json doc;
  doc["n"] = cover.n();
  doc["k"] = cover.k();
  doc["products"] = std::move(products);
  return layout(doc);
}

std::string write_ok_biclique_cover(const OkBicliqueCover& cover) {
  Json list = Json::array();
  for (const auto& b : cover.bicliques) {
    Json item;
    item["left"] = tuples_json(b.left);
    item["right"] = tuples_json(b.right);
    list.push_back(std::move(item));
  }
  Json doc;
  doc["n"] = cover.n;
  doc["k"] = cover.k;
  doc["bicliques"] = std::move(list);
  return layout(doc);
}

std::string write_report(const VerifyReport& report) {
  Json list = Json::array();
  for (const auto& v : report.violations) {
    Json item;
    item["indices"] = v.indices;
    item["observed"] = v.observed;
    item["expected"] = v.expected;
    list.push_back(std::move(item));
  }
  Json doc;
  doc["valid"] = report.valid;
  doc["violations"] = std::move(list);
  return layout(doc);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace oddtown
