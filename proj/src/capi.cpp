// C interface: opaque handles over the C++ core, status codes aligned with
// the library's error taxonomy, thread-local error records, and JSON
// request/reply pipelines for the compound operations.

#include "otd/otd.h"

#include <cstdlib>
#include <cstring>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "compress.hpp"
#include "constructions.hpp"
#include "decomp.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "json_io.hpp"
#include "oracles.hpp"
#include "planarize.hpp"
#include "rects.hpp"

struct otd_graph {
  otd::Graph g;
};

struct otd_decomp {
  otd::Decomposition d;
};

namespace {

using otd::Errc;
using otd::Json;

thread_local std::string t_last_error;

void set_error(Errc code, const std::string& message) {
  Json j;
  j["code"] = static_cast<int>(code);
  j["error"] = otd::errc_name(code);
  j["message"] = message;
  t_last_error = j.dump();
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs the body, translating every failure into a status code + error record.
template <typename F>
int guarded(F&& body) {
  try {
    t_last_error.clear();
    body();
    return OTD_OK;
  } catch (const otd::Error& e) {
    set_error(e.code(), e.what());
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    set_error(Errc::internal, e.what());
    return static_cast<int>(Errc::internal);
  }
}

void require(bool ok, const char* what) {
  if (!ok) otd::fail(Errc::invalid_input, std::string("null ") + what);
}

std::string need_string(const char* s, const char* what) {
  require(s != nullptr, what);
  return std::string(s);
}

int emit(const Json& j, char** out) {
  require(out != nullptr, "output pointer");
  *out = dup_string(otd::dump_canonical(j));
  if (!*out) otd::fail(Errc::internal, "out of memory");
  return OTD_OK;
}

int emit_text(const std::string& text, char** out) {
  require(out != nullptr, "output pointer");
  *out = dup_string(text);
  if (!*out) otd::fail(Errc::internal, "out of memory");
  return OTD_OK;
}

int int_option(const Json& req, const char* key, int fallback) {
  if (!req.is_object() || !req.contains(key)) return fallback;
  const Json& v = req.at(key);
  if (!v.is_number_integer())
    otd::fail(Errc::invalid_input, std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

int int_required(const Json& req, const char* key) {
  if (!req.is_object() || !req.contains(key))
    otd::fail(Errc::invalid_input, std::string("missing field \"") + key + "\"");
  return int_option(req, key, 0);
}

std::string string_required(const Json& req, const char* key) {
  if (!req.is_object() || !req.contains(key) || !req.at(key).is_string())
    otd::fail(Errc::invalid_input, std::string("missing string field \"") + key + "\"");
  return req.at(key).get<std::string>();
}

const Json& object_required(const Json& req, const char* key) {
  if (!req.is_object() || !req.contains(key))
    otd::fail(Errc::invalid_input, std::string("missing field \"") + key + "\"");
  return req.at(key);
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) otd::fail(Errc::invalid_input, std::string(what) + " must be an array");
  std::vector<int> out;
  for (const Json& v : j) {
    if (!v.is_number_integer())
      otd::fail(Errc::invalid_input, std::string(what) + " must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

otd::Graph graph_arg(const Json& req, const char* key) {
  return otd::graph_from_json(object_required(req, key));
}

otd::Decomposition decomp_arg(const Json& req, const char* key) {
  return otd::decomp_from_json(object_required(req, key));
}

// Two-coloring by breadth-first search; fails when some edge joins equal
// colors.
std::pair<std::vector<int>, std::vector<int>> bipartition(const otd::Graph& g) {
  std::vector<int> color(g.vertex_count(), -1);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          otd::fail(Errc::invalid_input, "graph is not bipartite: edge " + std::to_string(v) +
                                             "-" + std::to_string(w) +
                                             " joins vertices of the same color");
        }
      }
    }
  }
  std::pair<std::vector<int>, std::vector<int>> parts;
  for (int v = 0; v < g.vertex_count(); ++v)
    (color[v] == 0 ? parts.first : parts.second).push_back(v);
  return parts;
}

otd::Graph generate(const Json& req) {
  std::string family = string_required(req, "family");
  if (family == "grid") return otd::gen_grid(int_required(req, "n"));
  if (family == "knn") return otd::gen_complete_bipartite(int_required(req, "n"));
  if (family == "tripartite") return otd::gen_complete_tripartite(int_required(req, "n"));
  if (family == "subdiv-knn") return otd::gen_subdivided_knn(int_required(req, "n"));
  if (family == "shift") return otd::gen_shift_graph(int_required(req, "n"));
  if (family == "line-grid")
    return otd::gen_line_grid(int_required(req, "q"), int_required(req, "r"));
  if (family == "2tree")
    return otd::gen_universal_2tree(int_required(req, "h"), int_required(req, "d")).graph;
  if (family == "dominant") return otd::add_dominant_vertex(graph_arg(req, "graph"));
  if (family == "line-graph") return otd::line_graph(graph_arg(req, "graph"));
  otd::fail(Errc::invalid_input, "unknown family: " + family);
}

Json measures_json(const otd::Decomposition& d) {
  Json j;
  j["kind"] = otd::decomp_kind_name(d.kind);
  j["bag_count"] = d.bags.size();
  j["magnitude"] = otd::magnitude(d);
  j["width"] = otd::width(d);
  return j;
}

Json pair_reply(const otd::Graph& g, const otd::Decomposition& first,
                const otd::Decomposition& second) {
  Json j;
  j["first"] = otd::decomp_to_json(first);
  j["graph"] = otd::graph_to_json(g);
  j["second"] = otd::decomp_to_json(second);
  return j;
}

Json construct_reply(const Json& req) {
  std::string kind = string_required(req, "kind");
  if (kind == "grid-pair") {
    int n = int_required(req, "n");
    auto [a, b] = otd::grid_orthogonal_paths(n);
    return pair_reply(otd::gen_grid(n), a, b);
  }
  if (kind == "knn-pair") {
    int n = int_required(req, "n");
    auto [a, b] = otd::knn_orthogonal_paths(n);
    return pair_reply(otd::gen_complete_bipartite(n), a, b);
  }
  if (kind == "subdiv-pair") {
    int n = int_required(req, "n");
    auto [a, b] = otd::subdivision_star_pair(n);
    return pair_reply(otd::gen_subdivided_knn(n), a, b);
  }
  if (kind == "star-pair") {
    otd::Graph g = graph_arg(req, "graph");
    std::vector<int> a, b;
    if (req.contains("a") || req.contains("b")) {
      a = int_list(object_required(req, "a"), "\"a\"");
      b = int_list(object_required(req, "b"), "\"b\"");
    } else {
      std::tie(a, b) = bipartition(g);
    }
    auto [da, db] = otd::bipartite_star_pair(g, a, b);
    return pair_reply(g, da, db);
  }
  if (kind == "domino") {
    otd::Graph g = graph_arg(req, "graph");
    otd::Decomposition t = decomp_arg(req, "tree");
    otd::Decomposition l =
        req.contains("layering") ? decomp_arg(req, "layering") : otd::bfs_layering(g, 0);
    otd::Decomposition d = otd::domino_from_layered(t, l, g);
    Json j;
    j["decomposition"] = otd::decomp_to_json(d);
    j["domino"] = otd::is_domino(d);
    return j;
  }
  otd::fail(Errc::invalid_input, "unknown construction: " + kind);
}

Json compress_reply(const Json& req) {
  otd::Graph g = graph_arg(req, "graph");
  otd::Decomposition t = decomp_arg(req, "tree");
  otd::Decomposition p = decomp_arg(req, "weakpath");
  int k = int_required(req, "k");
  otd::Decomposition out = otd::compress(g, t, p, k);
  int w = otd::width(out);
  std::int64_t s = otd::magnitude(p);
  Json j;
  j["bound_ok"] = otd::compress_width_within_bound(w, k, s);
  j["decomposition"] = otd::decomp_to_json(out);
  j["k"] = k;
  j["magnitude"] = s;
  j["width"] = w;
  return j;
}

Json separator_reply(const Json& req) {
  otd::Graph g = graph_arg(req, "graph");
  otd::Decomposition t = decomp_arg(req, "tree");
  std::vector<int> sep = otd::separator_from_decomposition(g, t);
  std::vector<bool> excluded(g.vertex_count(), false);
  for (int v : sep) excluded[v] = true;
  std::size_t largest = 0;
  for (const auto& comp : otd::components(g, excluded)) largest = std::max(largest, comp.size());
  Json j;
  j["balanced"] = 2 * largest <= static_cast<std::size_t>(g.vertex_count());
  j["half"] = otd::Rat(g.vertex_count(), 2).str();
  j["max_component"] = largest;
  j["separator"] = sep;
  j["size"] = sep.size();
  return j;
}

Json lift_reply(const Json& req) {
  std::string mode = string_required(req, "mode");
  std::string base = string_required(req, "base");
  otd::BaseMode bm;
  if (base == "heuristic")
    bm = otd::BaseMode::heuristic;
  else if (base == "exact")
    bm = otd::BaseMode::exact;
  else
    otd::fail(Errc::invalid_input, "base must be \"heuristic\" or \"exact\"");
  int root = int_option(req, "root", 0);
  int cap = int_option(req, "exact_cap", 14);
  unsigned seed = static_cast<unsigned>(int_option(req, "seed", 0));

  otd::Graph target;
  otd::LiftPair lifted;
  otd::BasePair bp;
  if (mode == "string") {
    otd::CurveArrangement a = otd::arrangement_from_json(object_required(req, "input"));
    otd::validate_arrangement(a);
    otd::Planarization pl = otd::planarize(a);
    bp = otd::base_decomposition(pl.gprime, bm, root, cap, seed);
    lifted = otd::lift_string_path(a, bp.tree, bp.layering);
    target = otd::string_graph(a);
  } else if (mode == "drawing") {
    otd::Drawing d = otd::drawing_from_json(object_required(req, "input"));
    otd::validate_drawing(d);
    otd::Planarization pl = otd::planarize(d);
    bp = otd::base_decomposition(pl.gprime, bm, root, cap, seed);
    lifted = otd::lift_drawing(d, bp.tree, bp.layering);
    target = d.graph;
  } else {
    otd::fail(Errc::invalid_input, "mode must be \"string\" or \"drawing\"");
  }
  Json j;
  j["base_layered_width"] = otd::layered_width(bp.tree, bp.layering);
  j["base_width"] = otd::width(bp.tree);
  j["first"] = otd::decomp_to_json(lifted.tree);
  j["graph"] = otd::graph_to_json(target);
  j["magnitude"] = otd::magnitude(lifted.second);
  j["second"] = otd::decomp_to_json(lifted.second);
  return j;
}

Json bounds_reply(const Json& req) {
  otd::BoundsParams params;
  auto opt = [&](const char* key) -> std::optional<std::int64_t> {
    if (!req.is_object() || !req.contains(key)) return std::nullopt;
    const Json& v = req.at(key);
    if (!v.is_number_integer())
      otd::fail(Errc::invalid_input, std::string("field \"") + key + "\" must be an integer");
    return v.get<std::int64_t>();
  };
  params.k = opt("k");
  params.s = opt("s");
  params.n = opt("n");
  params.g = opt("g");
  params.m = opt("m");
  params.tw = opt("tw");
  otd::BoundsReport rep = otd::bounds_report(params);

  Json inputs = Json::object();
  if (params.k) inputs["k"] = *params.k;
  if (params.s) inputs["s"] = *params.s;
  if (params.n) inputs["n"] = *params.n;
  if (params.g) inputs["g"] = *params.g;
  if (params.m) inputs["m"] = *params.m;
  if (params.tw) inputs["tw"] = *params.tw;

  Json j;
  j["inputs"] = std::move(inputs);
  auto put = [&](const char* key, const std::optional<otd::BoundValue>& v) {
    if (!v) return;
    Json e;
    e["approx"] = v->real;
    e["floor"] = v->floor;
    j[key] = std::move(e);
  };
  put("compressed_treewidth", rep.compressed_treewidth);
  put("compressed_pathwidth", rep.compressed_pathwidth);
  put("genus_treewidth", rep.genus_treewidth);
  put("genus_pathwidth", rep.genus_pathwidth);
  if (rep.crossing_quota) j["crossing_quota"] = rep.crossing_quota->str();
  if (rep.crossing_lower_bound) j["crossing_lower_bound"] = rep.crossing_lower_bound->str();
  return j;
}

std::vector<otd::Rect> rect_list(const Json& j, const char* what) {
  if (!j.is_array()) otd::fail(Errc::invalid_input, std::string(what) + " must be an array");
  std::vector<otd::Rect> out;
  for (const Json& r : j) out.push_back(otd::rect_from_json(r));
  return out;
}

Json trace_json(const std::vector<otd::TraceStep>& trace) {
  Json arr = Json::array();
  for (const auto& s : trace) {
    Json e;
    e["action"] = s.action;
    e["level"] = s.level;
    e["position"] = s.position;
    e["stalls"] = s.stalls;
    arr.push_back(std::move(e));
  }
  return arr;
}

Json rect_reply(const Json& req) {
  std::string op = string_required(req, "op");
  if (op == "classify") {
    auto rs = rect_list(object_required(req, "rects"), "\"rects\"");
    if (rs.size() != 2) otd::fail(Errc::invalid_input, "classify takes exactly two rectangles");
    Json j;
    j["class"] = otd::pair_class_name(otd::classify_pair(rs[0], rs[1]));
    j["raw_h"] = otd::h_sides_touch(rs[0], rs[1]);
    j["raw_v"] = otd::v_sides_touch(rs[0], rs[1]);
    return j;
  }
  if (op == "hvo") {
    auto rs = rect_list(object_required(req, "rects"), "\"rects\"");
    otd::SequenceReport rep = otd::is_hvo_alternating(rs);
    Json j;
    j["condition"] = rep.condition;
    j["index"] = rep.index;
    j["ok"] = rep.ok;
    if (rep.ok) {
      auto whole = otd::fold_intersection(rs);
      j["fold"] = whole ? otd::rect_to_json(*whole) : Json();
    } else {
      j["fold"] = Json();
    }
    return j;
  }
  if (op == "clique") {
    int k = int_required(req, "k");
    std::string name = string_required(req, "oracle");
    unsigned seed = static_cast<unsigned>(int_option(req, "seed", 0));
    otd::RectOracle oracle;
    otd::Rect r0 = otd::make_rect(otd::Rat(0), otd::Rat(6), otd::Rat(0), otd::Rat(5));
    otd::Rect r1 = otd::make_rect(otd::Rat(-2), otd::Rat(4), otd::Rat(-1), otd::Rat(4));
    if (name == "random") {
      oracle = otd::make_random_rect_oracle(seed);
    } else if (name == "stall-h") {
      oracle = otd::make_stall_oracle(otd::Orientation::h);
    } else if (name == "stall-v") {
      oracle = otd::make_stall_oracle(otd::Orientation::v);
    } else if (name == "corner-flood") {
      oracle = otd::make_corner_flood_oracle();
      r0 = otd::make_rect(otd::Rat(0), otd::Rat(20), otd::Rat(0), otd::Rat(20));
      r1 = otd::make_rect(otd::Rat(-10), otd::Rat(10), otd::Rat(-10), otd::Rat(10));
    } else if (name == "script") {
      std::vector<std::vector<otd::Rect>> levels;
      for (const Json& lvl : object_required(req, "levels"))
        levels.push_back(rect_list(lvl, "script level"));
      oracle = otd::make_scripted_rect_oracle(std::move(levels));
    } else {
      otd::fail(Errc::invalid_input, "unknown oracle: " + name);
    }
    if (req.contains("root")) {
      auto rs = rect_list(req.at("root"), "\"root\"");
      if (rs.size() != 2) otd::fail(Errc::invalid_input, "root takes exactly two rectangles");
      r0 = rs[0];
      r1 = rs[1];
    }
    otd::RectClique res = otd::find_clique(r0, r1, oracle, k);
    Json j;
    j["exit"] = res.exit;
    j["k"] = k;
    j["levels"] = res.levels;
    j["point"] = otd::point_to_json(res.point);
    Json arr = Json::array();
    for (const auto& r : res.rects) arr.push_back(otd::rect_to_json(r));
    j["rects"] = std::move(arr);
    j["trace"] = trace_json(res.trace);
    return j;
  }
  if (op == "to-paths") {
    auto rs = otd::rects_from_json(req);
    auto [p1, p2] = otd::rects_to_paths(rs);
    otd::Graph g = otd::rect_intersection_graph(rs);
    Json j = pair_reply(g, p1, p2);
    j["orthogonality"] = otd::orthogonality(p1, p2);
    return j;
  }
  if (op == "from-paths") {
    otd::Decomposition p1 = decomp_arg(req, "first");
    otd::Decomposition p2 = decomp_arg(req, "second");
    otd::Graph g = graph_arg(req, "graph");
    return otd::rects_to_json(otd::paths_to_rects(p1, p2, g));
  }
  otd::fail(Errc::invalid_input, "unknown rect op: " + op);
}

Json box_reply(const Json& req) {
  std::string op = string_required(req, "op");
  if (op != "clique") otd::fail(Errc::invalid_input, "unknown box op: " + op);
  int d = int_required(req, "d");
  int k = int_required(req, "k");
  if (d < 1) otd::fail(Errc::invalid_input, "d must be at least 1");
  std::string name = string_required(req, "oracle");
  otd::BoxOracle oracle;
  if (name == "random") {
    oracle = otd::make_random_box_oracle(static_cast<unsigned>(int_option(req, "seed", 0)), d);
  } else if (name == "script") {
    std::vector<otd::Box> script;
    for (const Json& b : object_required(req, "boxes")) script.push_back(otd::box_from_json(b));
    oracle = otd::make_scripted_box_oracle(std::move(script));
  } else {
    otd::fail(Errc::invalid_input, "unknown oracle: " + name);
  }
  std::vector<otd::Box> root;
  if (req.contains("root")) {
    for (const Json& b : req.at("root")) root.push_back(otd::box_from_json(b));
  } else {
    for (int i = 0; i < 2 * d + 1; ++i) {
      std::vector<std::array<otd::Rat, 2>> sides;
      for (int t = 0; t < d; ++t) sides.push_back({otd::Rat(-(i + 1)), otd::Rat(i + 1)});
      root.push_back(otd::make_box(std::move(sides)));
    }
  }
  otd::BoxClique res = otd::box_find_clique(root, oracle, k, d);
  Json j;
  Json arr = Json::array();
  for (const auto& b : res.boxes) arr.push_back(otd::box_to_json(b));
  j["boxes"] = std::move(arr);
  j["d"] = d;
  j["k"] = k;
  Json pt = Json::array();
  for (const auto& c : res.point) pt.push_back(c.str());
  j["point"] = std::move(pt);
  j["rounds"] = res.rounds;
  return j;
}

Json oracle_reply(const Json& req) {
  std::string op = string_required(req, "op");
  otd::Graph g = graph_arg(req, "graph");
  Json j;
  j["op"] = op;
  if (op == "tw" || op == "pw") {
    int cap = int_option(req, "cap", 14);
    otd::WidthResult r = op == "tw" ? otd::exact_treewidth(g, cap) : otd::exact_pathwidth(g, cap);
    j["value"] = r.width;
    j["witness"] = otd::decomp_to_json(r.witness);
  } else if (op == "clique") {
    otd::CliqueResult r = otd::max_clique(g, int_option(req, "cap", 40));
    j["value"] = r.size;
    j["witness"] = r.vertices;
  } else if (op == "chi") {
    j["value"] = otd::chromatic_number(g, int_option(req, "cap", 16));
  } else if (op == "sep") {
    otd::SeparatorResult r = otd::min_separator_size(g, int_option(req, "cap", 16));
    j["value"] = r.size;
    j["witness"] = r.vertices;
  } else {
    otd::fail(Errc::invalid_input, "unknown oracle op: " + op);
  }
  return j;
}

template <typename F>
int json_pipeline(const char* request_json, char** json_out, F&& make_reply) {
  return guarded([&] {
    Json req = otd::parse_json(need_string(request_json, "request"));
    emit(make_reply(req), json_out);
  });
}

}  // namespace

extern "C" {

const char* otd_version(void) { return "1.0.0"; }

const char* otd_last_error(void) { return t_last_error.c_str(); }

void otd_string_free(char* s) { std::free(s); }

int otd_graph_parse(const char* json, otd_graph** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer");
    Json j = otd::parse_json(need_string(json, "graph JSON"));
    *out = new otd_graph{otd::graph_from_json(j)};
  });
}

int otd_graph_gen(const char* request_json, otd_graph** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer");
    Json req = otd::parse_json(need_string(request_json, "request"));
    *out = new otd_graph{generate(req)};
  });
}

int otd_graph_emit(const otd_graph* g, char** json_out) {
  return guarded([&] {
    require(g != nullptr, "graph handle");
    emit(otd::graph_to_json(g->g), json_out);
  });
}

int otd_graph_dot(const otd_graph* g, char** dot_out) {
  return guarded([&] {
    require(g != nullptr, "graph handle");
    emit_text(otd::graph_to_dot(g->g), dot_out);
  });
}

int otd_graph_counts(const otd_graph* g, int* vertices, long long* edges) {
  return guarded([&] {
    require(g != nullptr, "graph handle");
    if (vertices) *vertices = g->g.vertex_count();
    if (edges) *edges = g->g.edge_count();
  });
}

void otd_graph_free(otd_graph* g) { delete g; }

int otd_decomp_parse(const char* json, otd_decomp** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer");
    Json j = otd::parse_json(need_string(json, "decomposition JSON"));
    *out = new otd_decomp{otd::decomp_from_json(j)};
  });
}

int otd_decomp_emit(const otd_decomp* d, char** json_out) {
  return guarded([&] {
    require(d != nullptr, "decomposition handle");
    emit(otd::decomp_to_json(d->d), json_out);
  });
}

int otd_decomp_dot(const otd_decomp* d, char** dot_out) {
  return guarded([&] {
    require(d != nullptr, "decomposition handle");
    emit_text(otd::decomp_to_dot(d->d), dot_out);
  });
}

int otd_decomp_validate(const otd_decomp* d, const otd_graph* g, char** report_json_out) {
  int rc = guarded([&] {
    require(d != nullptr, "decomposition handle");
    require(g != nullptr, "graph handle");
    auto violation = otd::validate(d->d, g->g);
    Json j;
    if (violation) {
      j["axiom"] = violation->axiom;
      j["valid"] = false;
      j["witness"] = violation->witness;
      emit(j, report_json_out);
      otd::fail(Errc::validation,
                "axiom \"" + violation->axiom + "\" fails: " + violation->witness);
    }
    j = measures_json(d->d);
    j["valid"] = true;
    emit(j, report_json_out);
  });
  return rc;
}

int otd_decomp_measures(const otd_decomp* d, char** json_out) {
  return guarded([&] {
    require(d != nullptr, "decomposition handle");
    emit(measures_json(d->d), json_out);
  });
}

int otd_orthogonality(const otd_decomp* a, const otd_decomp* b, int* out) {
  return guarded([&] {
    require(a != nullptr, "decomposition handle");
    require(b != nullptr, "decomposition handle");
    require(out != nullptr, "output pointer");
    *out = otd::orthogonality(a->d, b->d);
  });
}

void otd_decomp_free(otd_decomp* d) { delete d; }

int otd_construct(const char* request_json, char** json_out) {
  return json_pipeline(request_json, json_out, construct_reply);
}

int otd_compress_pair(const char* request_json, char** json_out) {
  return json_pipeline(request_json, json_out, compress_reply);
}

int otd_separator(const char* request_json, char** json_out) {
  return json_pipeline(request_json, json_out, separator_reply);
}

int otd_lift(const char* request_json, char** json_out) {
  return json_pipeline(request_json, json_out, lift_reply);
}

int otd_bounds(const char* request_json, char** json_out) {
  return json_pipeline(request_json, json_out, bounds_reply);
}

int otd_rect(const char* request_json, char** json_out) {
  return json_pipeline(request_json, json_out, rect_reply);
}

int otd_box(const char* request_json, char** json_out) {
  return json_pipeline(request_json, json_out, box_reply);
}

int otd_oracle(const char* request_json, char** json_out) {
  return json_pipeline(request_json, json_out, oracle_reply);
}

}  // extern "C"
