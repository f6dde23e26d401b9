#pragma once

// Simple undirected graphs on vertices 0..n-1 plus the generator families used
// throughout the library. Edges are stored as sorted (u,v) pairs with u < v.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace otd {

using Edge = std::pair<int, int>;

class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const;
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::string> labels_;
};

// Connected components of the graph with `excluded` vertices removed; each
// component is sorted, components ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g, const std::vector<bool>& excluded);

// Induced subgraph on `vertices` (deduplicated, sorted); second return value
// maps new ids back to the original ones.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const std::vector<int>& vertices);

bool has_triangle(const Graph& g);

// Generator families.
Graph gen_grid(int n);                                     // n*n grid, row-major ids
Graph gen_complete_bipartite(int n);                       // K_{n,n}
Graph gen_complete_tripartite(int n);                      // K_{n,n,n}
Graph gen_subdivided_knn(int n);                           // K_{n,n} with every edge subdivided once
Graph add_dominant_vertex(const Graph& g);                 // new vertex adjacent to everything
Graph gen_shift_graph(int n);                              // vertices (i,j), i<j; edges (i,j)-(j,l)
Graph line_graph(const Graph& g);                          // vertices = edges of g in sorted order
Graph gen_line_grid(int q, int r);                         // line graph of the face/subdivision incidence plane graph

// Universal 2-tree T_{h,d}. Construction is level by level: T_{-1,d} is empty,
// T_{0,d} is a single edge, and every level-i edge receives d fresh vertices
// joined to both of its ends, creating 2d level-(i+1) edges.
struct UniversalTwoTree {
  int h = -1;
  int d = 1;
  Graph graph;                     // materialized form
  std::vector<int> edge_levels;    // aligned with graph.edges()
  std::int64_t level_edge_count(int level) const;  // (2d)^level for 0 <= level <= h
};

// Materializes T_{h,d}; refuses to build more than `edge_cap` edges.
UniversalTwoTree gen_universal_2tree(int h, int d, std::int64_t edge_cap = 1000000);

// Lazy addressing of T_{h,d}: edges are (level, index) pairs; vertex ids follow
// the same breadth-first numbering the materialized form uses. No part of the
// tree is stored.
struct LazyTwoTree {
  int h;
  int d;
  struct EdgeRef {
    int level;
    std::int64_t index;
  };
  EdgeRef root() const { return {0, 0}; }
  std::pair<std::int64_t, std::int64_t> endpoints(EdgeRef e) const;
  // The d fresh vertices of e, each listed with its two child edges.
  struct Child {
    std::int64_t vertex;
    EdgeRef to_first;   // edge to the first endpoint of e
    EdgeRef to_second;  // edge to the second endpoint of e
  };
  std::vector<Child> children(EdgeRef e) const;
};

}  // namespace otd
