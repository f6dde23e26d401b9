#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "compress.hpp"
#include "constructions.hpp"
#include "decomp.hpp"
#include "graph.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace otd;
using otd::test::thrown_code;

namespace {

void check_valid(const Decomposition& d, const Graph& g) {
  auto v = validate(d, g);
  CAPTURE(v ? v->axiom + ": " + v->witness : "ok");
  CHECK(!v);
}

void check_compress(const Graph& g, const Decomposition& t, const Decomposition& p, int k) {
  auto out = compress(g, t, p, k);
  check_valid(out, g);
  if (!out.bags.empty())
    CHECK(compress_width_within_bound(width(out), k, magnitude(p)));
}

}  // namespace

TEST_CASE("compress: four-vertex path walkthrough") {
  Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  Decomposition t{DecompKind::tree, {{0, 1, 2, 3}}, {}};
  Decomposition p{DecompKind::weak_path, {{0}, {1}, {2}, {3}}, {}};
  auto out = compress(p4, t, p, 1);
  CHECK(out.bags == std::vector<std::vector<int>>{{0, 1, 2}, {0, 2, 3}});
  CHECK(out.tree_edges == std::vector<Edge>{{0, 1}});
  CHECK(width(out) == 2);
  CHECK(compress_width_within_bound(2, 1, 4));
  check_valid(out, p4);
}

TEST_CASE("compress: degenerate and edge cases") {
  auto out = compress(Graph(0, {}), Decomposition{DecompKind::tree, {}, {}},
                      Decomposition{DecompKind::path, {}, {}}, 1);
  CHECK(out.bags == std::vector<std::vector<int>>{{}});
  check_valid(out, Graph(0, {}));

  // s <= k forces t = 1: everything is deleted, leaving the single bag V.
  Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  Decomposition single{DecompKind::tree, {{0, 1, 2}}, {}};
  Decomposition pv{DecompKind::path, {{0, 1, 2}}, {}};
  auto all = compress(k3, single, pv, 3);
  CHECK(all.bags == std::vector<std::vector<int>>{{0, 1, 2}});
  check_valid(all, k3);
}

TEST_CASE("compress: errors") {
  Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  Decomposition t{DecompKind::tree, {{0, 1, 2, 3}}, {}};
  Decomposition p{DecompKind::weak_path, {{0}, {1}, {2}, {3}}, {}};
  CHECK(thrown_code([&] { compress(p4, t, p, 0); }) == Errc::invalid_input);
  // k below the actual orthogonality of the pair.
  Decomposition wide{DecompKind::weak_path, {{0, 1}, {2, 3}}, {}};
  CHECK(thrown_code([&] { compress(p4, t, wide, 1); }) == Errc::invalid_input);
  Decomposition broken{DecompKind::tree, {{0, 1}}, {}};
  CHECK(thrown_code([&] { compress(p4, broken, p, 1); }) == Errc::validation);
  CHECK(thrown_code([&] { compress(p4, t, t, 4); }) == Errc::invalid_input);
}

TEST_CASE("compress: layering input reproduces the square-root treewidth bound") {
  for (int n = 3; n <= 6; ++n) {
    CAPTURE(n);
    Graph g = gen_grid(n);
    auto [cols, rows] = grid_orthogonal_paths(n);
    Decomposition t{DecompKind::tree, cols.bags, {}};
    for (int i = 0; i + 1 < static_cast<int>(cols.bags.size()); ++i)
      t.tree_edges.push_back({i, i + 1});
    auto layering = bfs_layering(g, 0);
    int k = layered_width(t, layering);
    check_compress(g, t, layering, k);
  }
}

TEST_CASE("compress: random graphs with oracle decompositions") {
  for (unsigned seed = 1; seed <= 6; ++seed) {
    CAPTURE(seed);
    Graph g = otd::test::gnp(11, 0.25, seed + 50);
    auto tw = exact_treewidth(g);
    auto layering = bfs_layering(g, 0);
    int k = std::max(1, layered_width(tw.witness, layering));
    check_compress(g, tw.witness, layering, k);
  }
  Graph k33 = gen_complete_bipartite(3);
  auto [p, q] = knn_orthogonal_paths(3);
  check_compress(k33, p, q, 2);
}

TEST_CASE("compress: never beats the exact treewidth") {
  for (unsigned seed = 1; seed <= 4; ++seed) {
    CAPTURE(seed);
    Graph g = otd::test::gnp(10, 0.3, seed);
    auto tw = exact_treewidth(g);
    auto layering = bfs_layering(g, 0);
    int k = std::max(1, layered_width(tw.witness, layering));
    auto out = compress(g, tw.witness, layering, k);
    check_valid(out, g);
    CHECK(width(out) >= tw.width);
  }
}

TEST_CASE("edge bound report") {
  Graph k33 = gen_complete_bipartite(3);
  auto [p, q] = knn_orthogonal_paths(3);
  auto r = edge_bound_check(k33, p, q, 2);
  CHECK(r.edge_count == 9);
  CHECK(r.bound == 12);
  CHECK(r.pass);

  Graph edgeless(3, {});
  Decomposition single{DecompKind::tree, {{0, 1, 2}}, {}};
  auto re = edge_bound_check(edgeless, single, single, 3);
  CHECK(re.edge_count == 0);
  CHECK(re.pass);

  Graph g4 = gen_grid(4);
  auto [c4, r4] = grid_orthogonal_paths(4);
  auto rg = edge_bound_check(g4, c4, r4, 4);
  CHECK(rg.edge_count == 24);
  CHECK(rg.bound == 72);
  CHECK(rg.pass);

  CHECK(thrown_code([&] { edge_bound_check(k33, p, q, 1); }) == Errc::invalid_input);

  // The bound holds on every constructed orthogonal pair.
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    auto [pn, qn] = knn_orthogonal_paths(n);
    CHECK(edge_bound_check(gen_complete_bipartite(n), pn, qn, 2).pass);
    auto [cn, rn] = grid_orthogonal_paths(n);
    CHECK(edge_bound_check(gen_grid(n), cn, rn, 4).pass);
  }
}

TEST_CASE("separator extraction") {
  Graph p5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  Decomposition d{DecompKind::path, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, {}};
  CHECK(separator_from_decomposition(p5, d) == std::vector<int>{1, 2});

  Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  Decomposition single{DecompKind::tree, {{0, 1, 2, 3}}, {}};
  CHECK(separator_from_decomposition(k4, single) == std::vector<int>{0, 1, 2, 3});

  // Star with one bag per leaf: the very first bag already balances.
  std::vector<Edge> star_edges;
  std::vector<std::vector<int>> star_bags;
  std::vector<Edge> star_tree;
  for (int leaf = 1; leaf <= 9; ++leaf) {
    star_edges.push_back({0, leaf});
    star_bags.push_back({0, leaf});
    if (leaf >= 2) star_tree.push_back({leaf - 2, leaf - 1});
  }
  Graph star(10, star_edges);
  Decomposition ds{DecompKind::tree, star_bags, star_tree};
  CHECK(separator_from_decomposition(star, ds) == std::vector<int>{0, 1});

  // Size and balance guarantees on oracle witnesses.
  for (unsigned seed = 1; seed <= 6; ++seed) {
    CAPTURE(seed);
    Graph g = otd::test::gnp(12, 0.25, seed + 7);
    auto tw = exact_treewidth(g);
    auto sep = separator_from_decomposition(g, tw.witness);
    CHECK(static_cast<int>(sep.size()) <= tw.width + 1);
    std::vector<bool> removed(g.vertex_count(), false);
    for (int v : sep) removed[v] = true;
    for (const auto& comp : components(g, removed))
      CHECK(2 * static_cast<int>(comp.size()) <= g.vertex_count());
  }
}

TEST_CASE("bounds report") {
  BoundsParams p;
  p.k = 4;
  p.s = 16;
  auto r = bounds_report(p);
  REQUIRE(r.compressed_treewidth.has_value());
  CHECK(r.compressed_treewidth->floor == 15);
  CHECK(r.compressed_treewidth->real == doctest::Approx(15.0));
  REQUIRE(r.compressed_pathwidth.has_value());
  CHECK(r.compressed_pathwidth->floor == 87);
  CHECK(!r.genus_treewidth.has_value());
  CHECK(!r.crossing_quota.has_value());

  BoundsParams p2;
  p2.g = 0;
  p2.m = 0;
  p2.n = 12;
  auto r2 = bounds_report(p2);
  REQUIRE(r2.genus_treewidth.has_value());
  CHECK(r2.genus_treewidth->floor == 15);  // 2*sqrt(72)-1
  CHECK(r2.genus_treewidth->real == doctest::Approx(2 * std::sqrt(72.0) - 1));
  REQUIRE(r2.genus_pathwidth.has_value());
  CHECK(r2.genus_pathwidth->floor == -1);  // m = 0

  BoundsParams p3;
  p3.tw = 23;
  p3.n = 24;
  auto r3 = bounds_report(p3);
  REQUIRE(r3.crossing_quota.has_value());
  CHECK(*r3.crossing_quota == Rat(12));
  REQUIRE(r3.crossing_lower_bound.has_value());
  CHECK(*r3.crossing_lower_bound == Rat(0));

  BoundsParams p4;
  p4.tw = 47;
  p4.n = 24;
  CHECK(*bounds_report(p4).crossing_lower_bound == Rat(36));

  BoundsParams p5;
  p5.tw = 4;
  p5.n = 5;
  auto r5 = bounds_report(p5);
  CHECK(*r5.crossing_quota == Rat(25, 48));
  CHECK(*r5.crossing_lower_bound == Rat(0));

  BoundsParams bad;
  bad.k = -1;
  CHECK(thrown_code([&] { bounds_report(bad); }) == Errc::invalid_input);
}
