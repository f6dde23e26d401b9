#pragma once

// Exact brute-force computations on small graphs. Every result is exact; when
// an instance exceeds the configured cap the call fails rather than
// approximating.

#include <vector>

#include "decomp.hpp"
#include "graph.hpp"

namespace otd {

struct WidthResult {
  int width = -1;
  Decomposition witness;  // validates against the input graph
};

// Minimum width over all tree decompositions, via a dynamic program over
// vertex subsets in the elimination-ordering formulation. Default cap 14.
WidthResult exact_treewidth(const Graph& g, int cap = 14);

// Minimum width over all path decompositions, via the vertex-separation
// dynamic program over subsets. Default cap 14.
WidthResult exact_pathwidth(const Graph& g, int cap = 14);

struct CliqueResult {
  int size = 0;
  std::vector<int> vertices;  // sorted
};

// Maximum clique via branch and bound with a greedy-coloring bound. Default cap 40.
CliqueResult max_clique(const Graph& g, int cap = 40);

// Exact chromatic number via backtracking with first-use color symmetry
// breaking. Default cap 16.
int chromatic_number(const Graph& g, int cap = 16);

struct SeparatorResult {
  int size = 0;
  std::vector<int> vertices;  // sorted; every component of g minus it has <= n/2 vertices
};

// Smallest vertex set whose removal leaves components of at most half the
// graph's vertices, via subset enumeration. Default cap 16.
SeparatorResult min_separator_size(const Graph& g, int cap = 16);

}  // namespace otd
