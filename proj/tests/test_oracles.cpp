#include <doctest.h>

#include <vector>

#include "decomp.hpp"
#include "graph.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace otd;
using otd::test::thrown_code;

namespace {

Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph(n, std::move(e));
}

Graph path(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return Graph(n, std::move(e));
}

Graph star(int leaves) {
  std::vector<Edge> e;
  for (int v = 1; v <= leaves; ++v) e.push_back({0, v});
  return Graph(leaves + 1, std::move(e));
}

// Complete binary tree with 2^(h+1)-1 vertices, root 0, children 2i+1, 2i+2.
Graph binary_tree(int h) {
  int n = (1 << (h + 1)) - 1;
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.push_back({(v - 1) / 2, v});
  return Graph(n, std::move(e));
}

void check_witness(const WidthResult& r, const Graph& g) {
  auto v = validate(r.witness, g);
  CAPTURE(v ? v->axiom + ": " + v->witness : "ok");
  CHECK(!v);
  CHECK(width(r.witness) == r.width);
}

}  // namespace

TEST_CASE("exact treewidth") {
  auto grid = exact_treewidth(gen_grid(3));
  CHECK(grid.width == 3);
  check_witness(grid, gen_grid(3));

  auto k5 = exact_treewidth(complete(5));
  CHECK(k5.width == 4);
  check_witness(k5, complete(5));

  auto k222 = exact_treewidth(gen_complete_tripartite(2));
  CHECK(k222.width == 4);
  check_witness(k222, gen_complete_tripartite(2));

  CHECK(exact_treewidth(star(5)).width == 1);
  CHECK(exact_treewidth(Graph(0, {})).width == -1);
  CHECK(exact_treewidth(Graph(3, {})).width == 0);
  CHECK(thrown_code([] { exact_treewidth(gen_grid(4)); }) == Errc::cap_exceeded);
}

TEST_CASE("exact pathwidth") {
  auto p6 = exact_pathwidth(path(6));
  CHECK(p6.width == 1);
  check_witness(p6, path(6));

  // Complete binary trees: pathwidth is half the height, rounded up. Height 4
  // (31 vertices) is beyond the subset DP, so heights 1..3 carry the check and
  // height 3 already exhibits the value 2.
  for (int h = 1; h <= 3; ++h) {
    CAPTURE(h);
    Graph t = binary_tree(h);
    auto r = exact_pathwidth(t, 15);
    CHECK(r.width == (h + 1) / 2);
    check_witness(r, t);
  }

  auto s = exact_pathwidth(star(5));
  CHECK(s.width == 1);
  check_witness(s, star(5));

  CHECK(exact_pathwidth(Graph(0, {})).width == -1);
  CHECK(thrown_code([] { exact_pathwidth(gen_grid(4)); }) == Errc::cap_exceeded);
}

TEST_CASE("max clique") {
  auto b = max_clique(gen_complete_bipartite(3));
  CHECK(b.size == 2);

  auto k3 = max_clique(complete(3));
  CHECK(k3.size == 3);
  CHECK(k3.vertices == std::vector<int>{0, 1, 2});

  CHECK(max_clique(gen_shift_graph(6)).size == 2);
  CHECK(max_clique(Graph(0, {})).size == 0);
  CHECK(max_clique(Graph(4, {})).size == 1);

  auto grid = max_clique(gen_grid(5));
  CHECK(grid.size == 2);
  CHECK(gen_grid(5).has_edge(grid.vertices[0], grid.vertices[1]));

  CHECK(thrown_code([] { max_clique(gen_grid(7)); }) == Errc::cap_exceeded);
}

TEST_CASE("chromatic number") {
  CHECK(chromatic_number(gen_shift_graph(4)) == 2);
  CHECK(chromatic_number(gen_shift_graph(5)) == 3);
  CHECK(chromatic_number(complete(4)) == 4);
  CHECK(chromatic_number(Graph(0, {})) == 0);
  CHECK(chromatic_number(Graph(5, {})) == 1);
  CHECK(chromatic_number(gen_grid(4)) == 2);
  CHECK(thrown_code([] { chromatic_number(gen_grid(5)); }) == Errc::cap_exceeded);
}

TEST_CASE("minimum balanced separator") {
  auto p5 = min_separator_size(path(5));
  CHECK(p5.size == 1);
  CHECK(p5.vertices == std::vector<int>{2});

  CHECK(min_separator_size(complete(5)).size == 3);

  Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  auto tt = min_separator_size(two_triangles);
  CHECK(tt.size == 0);
  CHECK(tt.vertices.empty());

  CHECK(min_separator_size(Graph(0, {})).size == 0);
  CHECK(min_separator_size(star(9)).size == 1);
  CHECK(thrown_code([] { min_separator_size(gen_grid(5)); }) == Errc::cap_exceeded);
}

TEST_CASE("oracle cross invariants on a small battery") {
  std::vector<Graph> battery;
  battery.push_back(gen_grid(3));
  battery.push_back(gen_complete_tripartite(2));
  battery.push_back(gen_shift_graph(5));
  battery.push_back(star(7));
  battery.push_back(path(9));
  for (unsigned seed = 1; seed <= 6; ++seed) battery.push_back(otd::test::gnp(11, 0.3, seed));

  for (std::size_t i = 0; i < battery.size(); ++i) {
    CAPTURE(i);
    const Graph& g = battery[i];
    auto tw = exact_treewidth(g);
    auto pw = exact_pathwidth(g);
    check_witness(tw, g);
    check_witness(pw, g);
    CHECK(pw.width >= tw.width);
    CHECK(min_separator_size(g).size <= tw.width + 1);
  }
}
