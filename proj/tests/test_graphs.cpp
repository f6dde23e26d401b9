#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "graph.hpp"
#include "helpers.hpp"

using namespace otd;
using otd::test::thrown_code;

TEST_CASE("graph construction validates and normalizes") {
  Graph g(3, {{2, 0}, {0, 1}, {1, 0}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
  CHECK(g.has_edge(1, 0));
  CHECK(!g.has_edge(1, 2));
  CHECK(g.neighbors(0) == std::vector<int>{1, 2});

  CHECK(thrown_code([] { Graph(2, {{0, 0}}); }) == Errc::invalid_input);
  CHECK(thrown_code([] { Graph(2, {{0, 2}}); }) == Errc::invalid_input);
  CHECK(thrown_code([] { Graph(-1, {}); }) == Errc::invalid_input);
  CHECK(thrown_code([] { Graph(2, {}, {"a"}); }) == Errc::invalid_input);
}

TEST_CASE("components and induced subgraphs") {
  Graph g(6, {{0, 1}, {1, 2}, {3, 4}});
  auto comps = components(g, {});
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<int>{0, 1, 2});
  CHECK(comps[1] == std::vector<int>{3, 4});
  CHECK(comps[2] == std::vector<int>{5});

  std::vector<bool> excluded(6, false);
  excluded[1] = true;
  auto comps2 = components(g, excluded);
  REQUIRE(comps2.size() == 4);
  CHECK(comps2[0] == std::vector<int>{0});
  CHECK(comps2[1] == std::vector<int>{2});

  auto [h, back] = induced_subgraph(g, {2, 0, 1, 1});
  CHECK(h.vertex_count() == 3);
  CHECK(h.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(back == std::vector<int>{0, 1, 2});
}

TEST_CASE("grid generator") {
  Graph g = gen_grid(3);
  CHECK(g.vertex_count() == 9);
  CHECK(g.edge_count() == 12);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(0, 3));
  CHECK(!g.has_edge(2, 3));  // row boundary
  CHECK(g.has_edge(4, 5));
  CHECK(g.has_edge(4, 7));
  CHECK(thrown_code([] { gen_grid(0); }) == Errc::invalid_input);
}

TEST_CASE("complete bipartite and tripartite generators") {
  Graph b = gen_complete_bipartite(3);
  CHECK(b.vertex_count() == 6);
  CHECK(b.edge_count() == 9);
  CHECK(b.has_edge(0, 3));
  CHECK(!b.has_edge(0, 1));
  CHECK(b.labels()[0] == "v1");
  CHECK(b.labels()[3] == "w1");

  Graph t = gen_complete_tripartite(2);
  CHECK(t.vertex_count() == 6);
  CHECK(t.edge_count() == 12);
  CHECK(t.has_edge(0, 2));
  CHECK(t.has_edge(0, 4));
  CHECK(t.has_edge(2, 4));
  CHECK(!t.has_edge(0, 1));
}

TEST_CASE("subdivided K_nn generator") {
  Graph g = gen_subdivided_knn(3);
  CHECK(g.vertex_count() == 15);  // n^2 + 2n
  CHECK(g.edge_count() == 18);
  // x_{i,j} = 2n + (i-1)n + (j-1), adjacent to v_i and w_j only.
  int x11 = 6, x23 = 6 + 3 + 2;
  CHECK(g.neighbors(x11) == std::vector<int>{0, 3});
  CHECK(g.neighbors(x23) == std::vector<int>{1, 5});
  CHECK(g.labels()[x23] == "x2,3");
  CHECK(!has_triangle(g));
}

TEST_CASE("dominant vertex") {
  Graph g = add_dominant_vertex(gen_grid(3));
  CHECK(g.vertex_count() == 10);
  CHECK(g.neighbors(9).size() == 9);
}

TEST_CASE("shift graph generator") {
  Graph h4 = gen_shift_graph(4);
  CHECK(h4.vertex_count() == 6);
  CHECK(h4.edge_count() == 4);  // C(4,3) triples
  Graph h2 = gen_shift_graph(2);
  CHECK(h2.vertex_count() == 1);
  CHECK(h2.edge_count() == 0);
  CHECK(thrown_code([] { gen_shift_graph(1); }) == Errc::invalid_input);

  // (1,2)-(2,3) is an edge, (1,2)-(3,4) is not.
  Graph h = gen_shift_graph(4);
  const auto& lab = h.labels();
  auto id = [&](const std::string& s) {
    return static_cast<int>(std::find(lab.begin(), lab.end(), s) - lab.begin());
  };
  CHECK(h.has_edge(id("(1,2)"), id("(2,3)")));
  CHECK(!h.has_edge(id("(1,2)"), id("(3,4)")));

  for (int n = 2; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(!has_triangle(gen_shift_graph(n)));
  }
  Graph h5 = gen_shift_graph(5);
  CHECK(h5.vertex_count() == 10);
  CHECK(h5.edge_count() == 10);
}

TEST_CASE("line graph") {
  Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  Graph l = line_graph(k3);
  CHECK(l.vertex_count() == 3);
  CHECK(l.edge_count() == 3);

  Graph p3(3, {{0, 1}, {1, 2}});
  Graph lp = line_graph(p3);
  CHECK(lp.vertex_count() == 2);
  CHECK(lp.edge_count() == 1);

  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  Graph ls = line_graph(star);
  CHECK(ls.vertex_count() == 3);
  CHECK(ls.edge_count() == 3);

  // Degree identity: the vertex for edge vw has degree deg(v)+deg(w)-2.
  Graph g = gen_grid(3);
  Graph lg = line_graph(g);
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [v, w] = g.edges()[e];
    CHECK(static_cast<int>(lg.neighbors(e).size()) ==
          static_cast<int>(g.neighbors(v).size() + g.neighbors(w).size()) - 2);
  }
}

TEST_CASE("line grid family") {
  Graph a = gen_line_grid(1, 1);
  CHECK(a.vertex_count() == 4);  // 4 q^2 r
  CHECK(a.edge_count() == 6);    // K4: one face joined to all four subdivision vertices
  Graph b = gen_line_grid(2, 1);
  CHECK(b.vertex_count() == 16);
  Graph c = gen_line_grid(1, 2);
  CHECK(c.vertex_count() == 8);
  CHECK(thrown_code([] { gen_line_grid(0, 1); }) == Errc::invalid_input);
}

TEST_CASE("universal 2-tree materialized") {
  auto empty = gen_universal_2tree(-1, 3);
  CHECK(empty.graph.vertex_count() == 0);
  CHECK(empty.graph.edge_count() == 0);

  auto t0 = gen_universal_2tree(0, 7);
  CHECK(t0.graph.vertex_count() == 2);
  CHECK(t0.graph.edge_count() == 1);

  auto t = gen_universal_2tree(3, 2);
  CHECK(t.graph.edge_count() == 1 + 4 + 16 + 64);
  std::map<int, int> per_level;
  for (int lv : t.edge_levels) per_level[lv]++;
  for (int i = 0; i <= 3; ++i) {
    CAPTURE(i);
    CHECK(per_level[i] == t.level_edge_count(i));
  }

  CHECK(thrown_code([] { gen_universal_2tree(20, 5); }) == Errc::cap_exceeded);
}

TEST_CASE("universal 2-tree lazy addressing matches the materialized graph") {
  const int h = 3, d = 2;
  auto mat = gen_universal_2tree(h, d);
  LazyTwoTree lazy{h, d};

  std::map<int, std::set<Edge>> mat_level_edges;
  for (int e = 0; e < mat.graph.edge_count(); ++e)
    mat_level_edges[mat.edge_levels[e]].insert(mat.graph.edges()[e]);

  std::map<int, std::set<Edge>> lazy_level_edges;
  std::vector<LazyTwoTree::EdgeRef> frontier = {lazy.root()};
  for (int level = 0; level <= h; ++level) {
    std::vector<LazyTwoTree::EdgeRef> next;
    for (auto e : frontier) {
      auto [u, v] = lazy.endpoints(e);
      CHECK(u < v);
      lazy_level_edges[level].insert({static_cast<int>(u), static_cast<int>(v)});
      if (level < h)
        for (const auto& c : lazy.children(e)) {
          auto [a1, b1] = lazy.endpoints(c.to_first);
          auto [a2, b2] = lazy.endpoints(c.to_second);
          CHECK(b1 == c.vertex);
          CHECK(b2 == c.vertex);
          CHECK(a1 == u);
          CHECK(a2 == v);
          next.push_back(c.to_first);
          next.push_back(c.to_second);
        }
    }
    frontier = std::move(next);
  }
  CHECK(lazy_level_edges == mat_level_edges);
}

TEST_CASE("triangle detection") {
  CHECK(has_triangle(Graph(3, {{0, 1}, {1, 2}, {0, 2}})));
  CHECK(!has_triangle(gen_grid(4)));
  CHECK(has_triangle(gen_complete_tripartite(1)));
}
