#include "isored/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "isored/error.hpp"
#include "isored/weight_format.hpp"

namespace isored {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte, std::string("invalid JSON: ") + e.what());
  }
}

[[noreturn]] void schema_error(const std::string& msg) { throw ParseError(0, msg); }

const json& field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string string_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_string()) schema_error(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

bool bool_field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) return false;
  if (!it->is_boolean()) schema_error(std::string("field \"") + key + "\" must be a boolean");
  return it->get<bool>();
}

RatFun edge_weight(const json& e, bool unit_weights) {
  auto it = e.find("weight");
  if (it == e.end()) {
    if (unit_weights) return RatFun(1);
    schema_error("edge without \"weight\" requires \"unit_weights\": true");
  }
  if (it->is_number_integer()) return RatFun(it->get<long>());
  if (!it->is_string()) schema_error("edge weight must be a string in the weight grammar");
  return parse_weight(it->get<std::string>());
}

ordered_json point_json(std::complex<double> z) {
  auto round12 = [](double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    double r = std::strtod(buf, nullptr);
    return r == 0 ? 0.0 : r;
  };
  ordered_json p;
  p["re"] = round12(z.real());
  p["im"] = round12(z.imag());
  return p;
}

ordered_json graph_object(const WeightedDigraph& g) {
  ordered_json out;
  out["vertices"] = g.labels();
  ordered_json edges = ordered_json::array();
  for (const auto& e : g.edges()) {
    ordered_json je;
    je["from"] = g.label(e.from);
    je["to"] = g.label(e.to);
    je["weight"] = format_weight(e.weight);
    edges.push_back(std::move(je));
  }
  out["edges"] = std::move(edges);
  out["undirected"] = false;
  out["unit_weights"] = false;
  return out;
}

ordered_json forbidden_object(const ForbiddenSet& n) {
  ordered_json out;
  ordered_json pts = ordered_json::array();
  for (const auto& z : n.points()) pts.push_back(point_json(z));
  out["points"] = std::move(pts);
  out["annihilator"] = format_poly(n.annihilator());
  return out;
}

}  // namespace

WeightedDigraph parse_graph_json(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) schema_error("graph JSON must be an object");
  std::vector<std::string> vertices;
  const bool listed = doc.contains("vertices");
  if (auto it = doc.find("vertices"); it != doc.end()) {
    if (!it->is_array()) schema_error("\"vertices\" must be an array");
    for (const auto& v : *it) {
      if (!v.is_string()) schema_error("vertex labels must be strings");
      vertices.push_back(v.get<std::string>());
    }
  }
  const bool undirected = bool_field(doc, "undirected");
  const bool unit = bool_field(doc, "unit_weights");
  const bool merge = bool_field(doc, "merge_parallel");
  const json empty = json::array();
  const json& edges = doc.contains("edges") ? doc["edges"] : empty;
  if (!edges.is_array()) schema_error("\"edges\" must be an array");
  // With an explicit vertex list every endpoint must appear in it; without
  // one, vertices are taken from the edges in order of first appearance.
  const std::set<std::string> known(vertices.begin(), vertices.end());
  auto endpoint = [&](const json& e, const char* key) {
    std::string label = string_field(e, key);
    if (listed && !known.count(label)) throw Error(ErrorKind::UnknownVertex, "edge refers to unknown vertex '" + label + "'");
    return label;
  };

  if (undirected) {
    std::vector<UndirectedEdge> list;
    for (const auto& e : edges) {
      if (!e.is_object()) schema_error("each edge must be an object");
      UndirectedEdge u{endpoint(e, "from"), endpoint(e, "to"), edge_weight(e, unit)};
      list.push_back(std::move(u));
    }
    return from_undirected(vertices, list);
  }
  std::vector<RawEdge> list;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& e : edges) {
    if (!e.is_object()) schema_error("each edge must be an object");
    RawEdge r{endpoint(e, "from"), endpoint(e, "to"), edge_weight(e, unit)};
    if (!merge && !seen.insert({r.from, r.to}).second)
      throw Error(ErrorKind::DuplicateEdge, "duplicate edge " + r.from + " -> " + r.to);
    list.push_back(std::move(r));
  }
  return merge_parallel(vertices, list);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

WeightedDigraph read_graph_file(const std::string& path) { return parse_graph_json(read_text_file(path)); }

std::string write_graph_json(const WeightedDigraph& g) { return graph_object(g).dump(2) + "\n"; }

std::string write_spectrum_json(const SpectralList& sigma, const RatFun& char_det) {
  ordered_json out;
  ordered_json roots = ordered_json::array();
  for (const auto& e : sigma.entries) {
    ordered_json r = point_json(e.root);
    r["mult"] = e.multiplicity;
    roots.push_back(std::move(r));
  }
  out["roots"] = std::move(roots);
  out["charpoly_num"] = format_poly(char_det.num());
  out["charpoly_den"] = format_poly(char_det.den());
  return out.dump(2) + "\n";
}

std::string write_forbidden_json(const ForbiddenSet& n) { return forbidden_object(n).dump(2) + "\n"; }

std::string write_reduction_json(const WeightedDigraph& g, const ForbiddenSet& n) {
  ordered_json out;
  out["graph"] = graph_object(g);
  out["forbidden"] = forbidden_object(n);
  return out.dump(2) + "\n";
}

std::vector<std::vector<std::string>> parse_set_sequence_json(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_array()) schema_error("set sequence must be an array of arrays of labels");
  std::vector<std::vector<std::string>> out;
  for (const auto& s : doc) {
    if (!s.is_array()) schema_error("set sequence must be an array of arrays of labels");
    std::vector<std::string> set;
    for (const auto& v : s) {
      if (!v.is_string()) schema_error("vertex labels must be strings");
      set.push_back(v.get<std::string>());
    }
    out.push_back(std::move(set));
  }
  return out;
}

}  // namespace isored
