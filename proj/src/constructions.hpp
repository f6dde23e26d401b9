#pragma once

// Explicit decomposition constructions: orthogonal pairs for grids, complete
// bipartite graphs and their subdivisions, star pairs for bipartite graphs,
// the layered-to-domino construction, and the partition-based orthogonal pair.

#include <utility>
#include <vector>

#include "decomp.hpp"
#include "graph.hpp"

namespace otd {

// Column-pair and row-pair path decompositions of the n x n grid (n >= 2);
// n-1 bags of size 2n each, orthogonality exactly 4.
std::pair<Decomposition, Decomposition> grid_orthogonal_paths(int n);

// The two path decompositions (V u {w_1}, ..., V u {w_n}) and
// (W u {v_1}, ..., W u {v_n}) of K_{n,n}; magnitude n(n+1), orthogonality 2.
std::pair<Decomposition, Decomposition> knn_orthogonal_paths(int n);

// Star decompositions of a bipartite graph: root bag A with one leaf N[w] per
// w in B, and the mirror with the parts swapped. Node 0 is the root; leaves
// follow in vertex order. Magnitude |V|+|E| each.
std::pair<Decomposition, Decomposition> bipartite_star_pair(const Graph& g,
                                                            const std::vector<int>& a,
                                                            const std::vector<int>& b);

// Star decompositions of the 1-subdivision of K_{n,n}: root bag the v-side,
// one leaf per w_j holding the v-side, w_j and its division vertices; plus the
// mirror. Orthogonality <= 3.
std::pair<Decomposition, Decomposition> subdivision_star_pair(int n);

// Consecutive-layer-pair path decomposition (L_0 u L_1, L_1 u L_2, ...,
// L_{t-1} u empty). Every vertex lands in at most two bags. The inputs must
// validate for g.
Decomposition domino_from_layered(const Decomposition& t, const Decomposition& l, const Graph& g);

// Given a partition (v1, v2) of g's vertices and path decompositions p1, p2 of
// the induced halves (bags in g's own vertex ids), adds the opposite part to
// every bag. With both widths <= c the results are (2c+2)-orthogonal path
// decompositions of g. An empty bag list on either side becomes a single bag
// holding the opposite part.
std::pair<Decomposition, Decomposition> vertex_partition_orthogonal(
    const Graph& g, const std::vector<int>& v1, const std::vector<int>& v2,
    const Decomposition& p1, const Decomposition& p2);

}  // namespace otd
