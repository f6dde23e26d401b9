#include <doctest.h>

#include <string>

#include "constructions.hpp"
#include "decomp.hpp"
#include "graph.hpp"
#include "helpers.hpp"
#include "json_io.hpp"
#include "planarize.hpp"
#include "rects.hpp"

using namespace otd;
using otd::test::thrown_code;

TEST_CASE("canonical dump: sorted keys, two-space indent, trailing newline") {
  Graph g(2, {{0, 1}});
  std::string text = dump_canonical(graph_to_json(g));
  CHECK(text ==
        "{\n"
        "  \"edges\": [\n"
        "    [\n"
        "      0,\n"
        "      1\n"
        "    ]\n"
        "  ],\n"
        "  \"n\": 2\n"
        "}\n");
  CHECK(text.find('\r') == std::string::npos);
}

TEST_CASE("graph round trip preserves structure and labels") {
  Graph g = gen_shift_graph(4);
  Graph back = graph_from_json(graph_to_json(g));
  CHECK(back.vertex_count() == g.vertex_count());
  CHECK(back.edges() == g.edges());
  CHECK(back.labels() == g.labels());

  CHECK(thrown_code([] { parse_json("not json"); }) == Errc::invalid_input);
  CHECK(thrown_code([] { graph_from_json(parse_json("{\"n\": 2}")); }) == Errc::invalid_input);
  CHECK(thrown_code([] { graph_from_json(parse_json("{\"n\": 1, \"edges\": [[0, 0]]}")); }) ==
        Errc::invalid_input);
}

TEST_CASE("rational values accept integers, strings, and pairs") {
  CHECK(rat_from_json(Json(3)) == Rat(3));
  CHECK(rat_from_json(Json("3/2")) == Rat(3, 2));
  CHECK(rat_from_json(Json("-1.25")) == Rat(-5, 4));
  CHECK(rat_from_json(parse_json("[3, 6]")) == Rat(1, 2));
  CHECK(rat_to_json(Rat(7, 2)) == Json("7/2"));
  CHECK(rat_to_json(Rat(-4)) == Json("-4"));
  CHECK(thrown_code([] { rat_from_json(Json(1.5)); }) == Errc::invalid_input);
  CHECK(thrown_code([] { rat_from_json(Json("x")); }) == Errc::invalid_input);
}

TEST_CASE("decomposition round trips for every kind") {
  auto [a, b] = grid_orthogonal_paths(3);
  Decomposition ra = decomp_from_json(decomp_to_json(a));
  CHECK(ra.kind == a.kind);
  CHECK(ra.bags == a.bags);

  Decomposition tree;
  tree.kind = DecompKind::tree;
  tree.bags = {{0, 1}, {1, 2}, {1, 3}};
  tree.tree_edges = {{0, 1}, {0, 2}};
  Json jt = decomp_to_json(tree);
  CHECK(jt.contains("tree_edges"));
  Decomposition rt = decomp_from_json(jt);
  CHECK(rt.kind == DecompKind::tree);
  CHECK(rt.bags == tree.bags);
  CHECK(rt.tree_edges == tree.tree_edges);

  Decomposition weak;
  weak.kind = DecompKind::weak_path;
  weak.bags = {{0}, {1}};
  CHECK(decomp_to_json(weak)["kind"] == "weakpath");
  CHECK(decomp_from_json(decomp_to_json(weak)).kind == DecompKind::weak_path);

  CHECK(thrown_code([] {
          decomp_from_json(parse_json("{\"kind\": \"mystery\", \"bags\": []}"));
        }) == Errc::invalid_input);

  // bags come out sorted even when the input was not
  Decomposition messy;
  messy.kind = DecompKind::path;
  messy.bags = {{3, 1, 2}};
  CHECK(decomp_to_json(messy)["bags"][0] == Json::array({1, 2, 3}));
}

TEST_CASE("rectangle and box families round trip with exact coordinates") {
  std::vector<Rect> rs{make_rect(Rat(-1, 2), Rat(1, 2), Rat(0), Rat(3)),
                       make_rect(Rat(0), Rat(2), Rat(-5, 4), Rat(7))};
  Json j = rects_to_json(rs);
  CHECK(j["rects"][0] == Json::array({"-1/2", "0", "1/2", "3"}));
  CHECK(rects_from_json(j) == rs);

  // integer and decimal coordinate spellings parse to the same family
  auto alt = rects_from_json(parse_json(
      "{\"rects\": [[\"-0.5\", 0, \"0.5\", 3], [[0, 1], \"-1.25\", 2, 7]]}"));
  CHECK(alt == rs);

  std::vector<Box> bs{make_box({{Rat(0), Rat(1)}, {Rat(-3, 2), Rat(2)}})};
  Json bj = boxes_to_json(bs);
  CHECK(bj["boxes"][0] == Json::array({Json::array({"0", "1"}), Json::array({"-3/2", "2"})}));
  CHECK(boxes_from_json(bj) == bs);

  CHECK(thrown_code([] { rect_from_json(parse_json("[0, 0, 1]")); }) == Errc::invalid_input);
  CHECK(thrown_code([] { rects_from_json(parse_json("{}")); }) == Errc::invalid_input);
}

TEST_CASE("arrangements and drawings round trip") {
  CurveArrangement a;
  a.genus = 1;
  a.curves = {{"x", "y"}, {"y", "x"}, {}};
  a.per_curve_cap = 5;
  CurveArrangement ra = arrangement_from_json(arrangement_to_json(a));
  CHECK(ra.genus == 1);
  CHECK(ra.curves == a.curves);
  CHECK(ra.per_curve_cap == a.per_curve_cap);

  Drawing d;
  d.graph = Graph(3, {{0, 1}, {1, 2}, {0, 2}});
  d.genus = 0;
  d.edges = {{0, 1, {"c"}}, {1, 2, {}}, {0, 2, {"c"}}};
  Drawing rd = drawing_from_json(drawing_to_json(d));
  CHECK(rd.genus == 0);
  CHECK(rd.graph.edges() == d.graph.edges());
  REQUIRE(rd.edges.size() == 3);
  CHECK(rd.edges[0].tail == 0);
  CHECK(rd.edges[0].head == 1);
  CHECK(rd.edges[0].crossings == std::vector<std::string>{"c"});
}

TEST_CASE("deterministic DOT text") {
  Graph g(3, {{0, 1}, {1, 2}});
  CHECK(graph_to_dot(g) ==
        "graph {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n");

  Decomposition tree;
  tree.kind = DecompKind::tree;
  tree.bags = {{0, 1}, {1, 2}};
  tree.tree_edges = {{0, 1}};
  std::string dot = decomp_to_dot(tree);
  CHECK(dot.find("0 [label=\"0: {0 1}\"]") != std::string::npos);
  CHECK(dot.find("0 -- 1;") != std::string::npos);

  Decomposition layers;
  layers.kind = DecompKind::layering;
  layers.bags = {{0}, {1}, {2}};
  CHECK(decomp_to_dot(layers).find("1 -- 2;") != std::string::npos);
}
