#include "hibi/io.hpp"

#include "hibi/error.hpp"
#include "hibi/grassmann.hpp"
#include "hibi/multiplicity.hpp"

#include <fstream>
#include <sstream>

namespace hibi::io {

namespace {

Label parse_label(const Json& j) {
  if (j.is_string()) return Label(j.get<std::string>());
  if (j.is_array()) {
    std::vector<int> t;
    for (const auto& v : j) {
      if (!v.is_number_integer()) throw Error(Errc::ParseError, "tuple labels must hold integers");
      t.push_back(v.get<int>());
    }
    return Label(std::move(t));
  }
  if (j.is_number_integer()) return Label(std::to_string(j.get<long long>()));
  throw Error(Errc::ParseError, "element labels must be strings or integer arrays");
}

int get_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw Error(Errc::ParseError, std::string("missing integer field \"") + key + "\"");
  }
  return j[key].get<int>();
}

std::vector<int> get_tuple(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw Error(Errc::ParseError, std::string("missing tuple field \"") + key + "\"");
  }
  return parse_label(j[key]).tuple();
}

}  // namespace

DistributiveLattice lattice_from_json(const Json& j) {
  if (!j.is_object()) throw Error(Errc::ParseError, "lattice must be a JSON object");
  if (j.contains("type")) {
    const std::string type = j["type"].get<std::string>();
    if (type == "idn") return idn(get_int(j, "d"), get_int(j, "n"));
    if (type == "chain") return chain_lattice(get_int(j, "k"));
    if (type == "diamond") return diamond_lattice();
    if (type == "interval") {
      GrassmannLattice G(get_int(j, "d"), get_int(j, "n"));
      const int lo = G.index(GrassTuple(get_tuple(j, "from")));
      const int hi = G.index(GrassTuple(get_tuple(j, "to")));
      return lattice_from_poset(interval(G.lattice().poset(), lo, hi));
    }
    throw Error(Errc::ParseError, "unknown lattice type \"" + type + "\"");
  }
  if (!j.contains("elements") || !j["elements"].is_array()) {
    throw Error(Errc::ParseError, "lattice needs an \"elements\" array");
  }
  std::vector<Label> elements;
  for (const auto& e : j["elements"]) elements.push_back(parse_label(e));
  std::vector<std::pair<Label, Label>> covers;
  if (j.contains("covers")) {
    for (const auto& c : j["covers"]) {
      if (!c.is_array() || c.size() != 2) throw Error(Errc::ParseError, "covers are [upper, lower] pairs");
      covers.emplace_back(parse_label(c[0]), parse_label(c[1]));
    }
  }
  return lattice_from_poset(Poset::from_labels(std::move(elements), covers));
}

SqFreeIdeal ideal_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array()) {
    throw Error(Errc::ParseError, "ideal needs \"n_vars\" and a \"generators\" array");
  }
  std::vector<std::vector<int>> gens;
  for (const auto& g : j["generators"]) {
    if (!g.is_array()) throw Error(Errc::ParseError, "each generator is an array of variable indices");
    gens.push_back(g.get<std::vector<int>>());
  }
  return SqFreeIdeal(get_int(j, "n_vars"), std::move(gens));
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
}

Json label_json(const Label& l) {
  if (l.is_tuple()) return Json(l.tuple());
  return Json(l.name());
}

Json elements_json(const DistributiveLattice& L, std::span<const int> xs) {
  Json arr = Json::array();
  for (int x : xs) arr.push_back(L.poset().label(x).str());
  return arr;
}

Json lattice_json(const DistributiveLattice& L) {
  Json j;
  Json elements = Json::array();
  for (const auto& l : L.poset().labels()) elements.push_back(label_json(l));
  Json covers = Json::array();
  for (auto [u, l] : L.poset().cover_pairs()) {
    covers.push_back(Json::array({label_json(L.poset().label(u)), label_json(L.poset().label(l))}));
  }
  j["elements"] = std::move(elements);
  j["covers"] = std::move(covers);
  return j;
}

}  // namespace hibi::io
