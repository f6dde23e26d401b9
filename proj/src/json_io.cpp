#include "json_io.hpp"

#include <cstdint>
#include <sstream>

#include "errors.hpp"

namespace otd {

namespace {

[[noreturn]] void bad(const std::string& msg) { fail(Errc::invalid_input, msg); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with a \"") + key + "\" field");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::int64_t to_i64(const Json& v, const char* what) {
  if (!v.is_number_integer()) bad(std::string(what) + " must be an integer");
  return v.get<std::int64_t>();
}

std::string quote_dot(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) bad("invalid JSON");
  return j;
}

std::string dump_canonical(const Json& j) {
  // nlohmann's default object backing is std::map, so keys come out sorted;
  // dump never emits CR.
  return j.dump(2) + "\n";
}

Json rat_to_json(const Rat& r) { return Json(r.str()); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_array() && j.size() == 2)
    return Rat(to_i64(j[0], "numerator"), to_i64(j[1], "denominator"));
  bad("a rational must be an integer, a string, or a [numerator, denominator] pair");
}

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.vertex_count();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(Json::array({e.first, e.second}));
  j["edges"] = std::move(edges);
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

Graph graph_from_json(const Json& j) {
  int n = int_field(j, "n");
  const Json& ej = field(j, "edges");
  if (!ej.is_array()) bad("\"edges\" must be an array");
  std::vector<Edge> edges;
  for (const Json& e : ej) {
    if (!e.is_array() || e.size() != 2) bad("each edge must be a [u, v] pair");
    edges.emplace_back(static_cast<int>(to_i64(e[0], "edge endpoint")),
                       static_cast<int>(to_i64(e[1], "edge endpoint")));
  }
  std::vector<std::string> labels;
  if (j.is_object() && j.contains("labels")) {
    const Json& lj = j.at("labels");
    if (!lj.is_array()) bad("\"labels\" must be an array of strings");
    for (const Json& l : lj) {
      if (!l.is_string()) bad("\"labels\" must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return Graph(n, std::move(edges), std::move(labels));
}

Json decomp_to_json(const Decomposition& d) {
  Decomposition copy = d;
  normalize(copy);
  Json j;
  j["kind"] = decomp_kind_name(copy.kind);
  Json bags = Json::array();
  for (const auto& b : copy.bags) bags.push_back(b);
  j["bags"] = std::move(bags);
  if (copy.kind == DecompKind::tree) {
    Json te = Json::array();
    for (const Edge& e : copy.tree_edges) te.push_back(Json::array({e.first, e.second}));
    j["tree_edges"] = std::move(te);
  }
  return j;
}

Decomposition decomp_from_json(const Json& j) {
  Decomposition d;
  const Json& kj = field(j, "kind");
  if (!kj.is_string()) bad("\"kind\" must be a string");
  d.kind = decomp_kind_from_name(kj.get<std::string>());
  const Json& bj = field(j, "bags");
  if (!bj.is_array()) bad("\"bags\" must be an array");
  for (const Json& b : bj) {
    if (!b.is_array()) bad("each bag must be an array of vertex ids");
    std::vector<int> bag;
    for (const Json& v : b) bag.push_back(static_cast<int>(to_i64(v, "bag vertex")));
    d.bags.push_back(std::move(bag));
  }
  if (j.contains("tree_edges")) {
    const Json& tj = j.at("tree_edges");
    if (!tj.is_array()) bad("\"tree_edges\" must be an array");
    for (const Json& e : tj) {
      if (!e.is_array() || e.size() != 2) bad("each tree edge must be a [x, y] pair");
      d.tree_edges.emplace_back(static_cast<int>(to_i64(e[0], "tree edge endpoint")),
                                static_cast<int>(to_i64(e[1], "tree edge endpoint")));
    }
  }
  normalize(d);
  return d;
}

Json arrangement_to_json(const CurveArrangement& a) {
  Json j;
  j["genus"] = a.genus;
  Json curves = Json::array();
  for (const auto& c : a.curves) curves.push_back(c);
  j["curves"] = std::move(curves);
  if (a.per_curve_cap) j["per_curve_cap"] = *a.per_curve_cap;
  return j;
}

CurveArrangement arrangement_from_json(const Json& j) {
  CurveArrangement a;
  a.genus = int_field(j, "genus");
  const Json& cj = field(j, "curves");
  if (!cj.is_array()) bad("\"curves\" must be an array");
  for (const Json& c : cj) {
    if (!c.is_array()) bad("each curve must be an array of crossing ids");
    std::vector<std::string> ids;
    for (const Json& id : c) {
      if (!id.is_string()) bad("crossing ids must be strings");
      ids.push_back(id.get<std::string>());
    }
    a.curves.push_back(std::move(ids));
  }
  if (j.contains("per_curve_cap")) a.per_curve_cap = int_field(j, "per_curve_cap");
  return a;
}

Json drawing_to_json(const Drawing& d) {
  Json j;
  j["genus"] = d.genus;
  j["graph"] = graph_to_json(d.graph);
  Json edges = Json::array();
  for (const DrawnEdge& e : d.edges) {
    Json ej;
    ej["tail"] = e.tail;
    ej["head"] = e.head;
    ej["crossings"] = e.crossings;
    edges.push_back(std::move(ej));
  }
  j["edges"] = std::move(edges);
  return j;
}

Drawing drawing_from_json(const Json& j) {
  Drawing d;
  d.genus = int_field(j, "genus");
  d.graph = graph_from_json(field(j, "graph"));
  const Json& ej = field(j, "edges");
  if (!ej.is_array()) bad("\"edges\" must be an array");
  for (const Json& e : ej) {
    DrawnEdge de;
    de.tail = int_field(e, "tail");
    de.head = int_field(e, "head");
    const Json& cj = field(e, "crossings");
    if (!cj.is_array()) bad("\"crossings\" must be an array of strings");
    for (const Json& id : cj) {
      if (!id.is_string()) bad("crossing ids must be strings");
      de.crossings.push_back(id.get<std::string>());
    }
    d.edges.push_back(std::move(de));
  }
  return d;
}

Json rect_to_json(const Rect& r) {
  return Json::array(
      {rat_to_json(r.x1), rat_to_json(r.y1), rat_to_json(r.x2), rat_to_json(r.y2)});
}

Rect rect_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) bad("a rectangle must be an [x1, y1, x2, y2] array");
  return make_rect(rat_from_json(j[0]), rat_from_json(j[2]), rat_from_json(j[1]),
                   rat_from_json(j[3]));
}

Json rects_to_json(const std::vector<Rect>& rs) {
  Json arr = Json::array();
  for (const Rect& r : rs) arr.push_back(rect_to_json(r));
  Json j;
  j["rects"] = std::move(arr);
  return j;
}

std::vector<Rect> rects_from_json(const Json& j) {
  const Json& rj = field(j, "rects");
  if (!rj.is_array()) bad("\"rects\" must be an array");
  std::vector<Rect> out;
  for (const Json& r : rj) out.push_back(rect_from_json(r));
  return out;
}

Json box_to_json(const Box& b) {
  Json arr = Json::array();
  for (const auto& s : b.sides) arr.push_back(Json::array({rat_to_json(s[0]), rat_to_json(s[1])}));
  return arr;
}

Box box_from_json(const Json& j) {
  if (!j.is_array()) bad("a box must be an array of [lo, hi] sides");
  std::vector<std::array<Rat, 2>> sides;
  for (const Json& s : j) {
    if (!s.is_array() || s.size() != 2) bad("each box side must be a [lo, hi] pair");
    sides.push_back({rat_from_json(s[0]), rat_from_json(s[1])});
  }
  return make_box(std::move(sides));
}

Json boxes_to_json(const std::vector<Box>& bs) {
  Json arr = Json::array();
  for (const Box& b : bs) arr.push_back(box_to_json(b));
  Json j;
  j["boxes"] = std::move(arr);
  return j;
}

std::vector<Box> boxes_from_json(const Json& j) {
  const Json& bj = field(j, "boxes");
  if (!bj.is_array()) bad("\"boxes\" must be an array");
  std::vector<Box> out;
  for (const Json& b : bj) out.push_back(box_from_json(b));
  return out;
}

Json point_to_json(const Pt& p) { return Json::array({rat_to_json(p.x), rat_to_json(p.y)}); }

std::string graph_to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (!g.labels().empty()) out << " [label=" << quote_dot(g.labels()[v]) << "]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.first << " -- " << e.second << ";\n";
  out << "}\n";
  return out.str();
}

std::string decomp_to_dot(const Decomposition& d) {
  Decomposition copy = d;
  normalize(copy);
  std::ostringstream out;
  out << "graph {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < copy.bags.size(); ++i) {
    std::string label = std::to_string(i) + ": {";
    for (std::size_t t = 0; t < copy.bags[i].size(); ++t) {
      if (t) label += ' ';
      label += std::to_string(copy.bags[i][t]);
    }
    label += '}';
    out << "  " << i << " [label=" << quote_dot(label) << "];\n";
  }
  if (copy.kind == DecompKind::tree) {
    for (const Edge& e : copy.tree_edges) out << "  " << e.first << " -- " << e.second << ";\n";
  } else {
    for (std::size_t i = 0; i + 1 < copy.bags.size(); ++i)
      out << "  " << i << " -- " << i + 1 << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace otd
