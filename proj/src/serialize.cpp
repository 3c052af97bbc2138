#include "accordion_tau/serialize.hpp"

#include <charconv>
#include <map>

#include "accordion_tau/errors.hpp"

namespace accordion_tau::serialize {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::Parse, what); }

int parse_int(std::string_view s) {
  int value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty())
    fail("expected an integer, got '" + std::string(s) + "'");
  return value;
}

}  // namespace

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(e.what());
  }
}

geometry::Dissection dissection_from_json(const json& j) {
  if (!j.is_object() || !j.contains("m") || !j["m"].is_number_integer())
    fail("dissection needs an integer field \"m\"");
  std::vector<std::pair<int, int>> pairs;
  if (j.contains("diagonals")) {
    if (!j["diagonals"].is_array()) fail("\"diagonals\" must be an array");
    for (const auto& d : j["diagonals"]) {
      if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() || !d[1].is_number_integer())
        fail("each diagonal must be a pair of integers");
      pairs.emplace_back(d[0].get<int>(), d[1].get<int>());
    }
  }
  return geometry::validate_dissection(j["m"].get<int>(), pairs);
}

json to_json(const geometry::Dissection& d) {
  json diagonals = json::array();
  for (const auto& [u, v] : d.label_pairs()) diagonals.push_back({u, v});
  return {{"m", d.m()}, {"diagonals", diagonals}};
}

quiver::GentleQuiver quiver_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    fail("quiver needs a \"vertices\" array");
  quiver::GentleQuiver q;
  std::map<std::string, int> vertex;
  for (const auto& v : j["vertices"]) {
    const std::string name = v.is_string() ? v.get<std::string>() : v.dump();
    if (!vertex.emplace(name, q.num_vertices()).second) fail("duplicate vertex " + name);
    q.vertices.push_back(name);
  }
  std::map<std::string, int> arrow;
  if (j.contains("arrows")) {
    for (const auto& a : j["arrows"]) {
      if (!a.is_object() || !a.contains("id") || !a.contains("src") || !a.contains("tgt"))
        fail("arrow needs id, src and tgt");
      auto name_of = [](const json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
      const std::string id = name_of(a["id"]);
      const auto src = vertex.find(name_of(a["src"]));
      const auto tgt = vertex.find(name_of(a["tgt"]));
      if (src == vertex.end() || tgt == vertex.end()) fail("arrow " + id + " uses an unknown vertex");
      if (!arrow.emplace(id, q.num_arrows()).second) fail("duplicate arrow " + id);
      q.arrows.push_back({id, src->second, tgt->second});
    }
  }
  if (j.contains("relations")) {
    for (const auto& r : j["relations"]) {
      if (!r.is_array() || r.size() != 2 || !r[0].is_string() || !r[1].is_string())
        fail("relation must be a pair of arrow ids");
      const auto a = arrow.find(r[0].get<std::string>());
      const auto b = arrow.find(r[1].get<std::string>());
      if (a == arrow.end() || b == arrow.end()) fail("relation uses an unknown arrow");
      q.relations.insert({a->second, b->second});
    }
  }
  return q;
}

json to_json(const quiver::GentleQuiver& q) {
  json arrows = json::array();
  for (const auto& a : q.arrows)
    arrows.push_back({{"id", a.name}, {"src", q.vertices[a.src]}, {"tgt", q.vertices[a.tgt]}});
  json relations = json::array();
  for (const auto& [a, b] : q.relations) relations.push_back({q.arrows[a].name, q.arrows[b].name});
  return {{"vertices", q.vertices}, {"arrows", arrows}, {"relations", relations}};
}

json algebra_dump(const quiver::AlgebraBasis& basis) {
  const auto& q = basis.quiver();
  json paths = json::array();
  for (std::size_t i = 0; i < basis.dimension(); ++i) {
    const auto& p = basis.path(static_cast<int>(i));
    json word = json::array();
    for (int a : p.arrows) word.push_back(q.arrows[a].name);
    paths.push_back({{"index", i}, {"src", q.vertices[p.src]}, {"tgt", q.vertices[p.tgt]}, {"arrows", word}});
  }
  json products = json::array();
  for (std::size_t i = 0; i < basis.dimension(); ++i)
    for (std::size_t k = 0; k < basis.dimension(); ++k) {
      const int r = basis.product(static_cast<int>(i), static_cast<int>(k));
      if (r >= 0) products.push_back({i, k, r});
    }
  return {{"convention", "paths compose left to right; [i, j, k] means basis[i] * basis[j] = basis[k]"},
          {"dimension", basis.dimension()},
          {"basis", paths},
          {"products", products}};
}

std::vector<std::pair<int, int>> parse_diagonals(std::string_view text) {
  std::vector<std::pair<int, int>> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    const std::size_t dash = item.find('-');
    if (dash == std::string_view::npos) fail("diagonal '" + std::string(item) + "' is not of the form a-b");
    out.emplace_back(parse_int(item.substr(0, dash)), parse_int(item.substr(dash + 1)));
    pos = comma + 1;
  }
  return out;
}

}  // namespace accordion_tau::serialize
