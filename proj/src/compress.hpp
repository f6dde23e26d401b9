#pragma once

// Width compression from an orthogonal pair, the edge-count bound, balanced
// separator extraction from a tree decomposition, and closed-form bound
// evaluation.

#include <cstdint>
#include <optional>
#include <vector>

#include "decomp.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace otd {

// Compresses the pair into one tree decomposition of width at most
// 2*sqrt(k*s)-1 where s = magnitude(p). Steps: t = ceil(sqrt(s/k)); label p's
// bags cyclically 1..t; delete the label class of smallest total size (ties:
// smallest label) as D; restrict t_in to each component of g - D; star-link
// the component copies through the first copy's node 0; add D to every bag.
// With no components left the result is the single bag D. t_in may be a tree
// or path decomposition; p may be a path, weak path, or layering.
Decomposition compress(const Graph& g, const Decomposition& t_in, const Decomposition& p, int k);

// True iff (width+1)^2 <= 4*k*s, the integer form of width <= 2*sqrt(k*s)-1.
bool compress_width_within_bound(int width, std::int64_t k, std::int64_t s);

struct EdgeBoundReport {
  std::int64_t edge_count = 0;
  std::int64_t bound = 0;  // (k-1) * magnitude(s_decomp)
  bool pass = false;
};

// Checks |E(g)| <= (k-1) * magnitude(s_decomp) for a k-orthogonal pair.
EdgeBoundReport edge_bound_check(const Graph& g, const Decomposition& s_decomp,
                                 const Decomposition& t_decomp, int k);

// Walks the decomposition tree from node 0 toward the unique oversized
// component until the current bag splits g into parts of at most half the
// vertices; returns that bag (deduplicated). Size <= width+1.
std::vector<int> separator_from_decomposition(const Graph& g, const Decomposition& t);

struct BoundValue {
  double real = 0.0;        // display value
  std::int64_t floor = 0;   // exact floor of the bound
};

struct BoundsParams {
  std::optional<std::int64_t> k, s, n, g, m, tw;
};

struct BoundsReport {
  // 2*sqrt(k*s) - 1, from k and s.
  std::optional<BoundValue> compressed_treewidth;
  // 11*sqrt(k*s) - 1, from k and s (s standing for the magnitude bound c*n).
  std::optional<BoundValue> compressed_pathwidth;
  // 2*sqrt((4g+6)(2m+n)) - 1, from g, m and n.
  std::optional<BoundValue> genus_treewidth;
  // 4*sqrt((2g+3)m) - 1, from g and m.
  std::optional<BoundValue> genus_pathwidth;
  // (tw+1)^2 / 48 and the clamped crossing lower bound max(0, quota - n/2).
  std::optional<Rat> crossing_quota;
  std::optional<Rat> crossing_lower_bound;
};

BoundsReport bounds_report(const BoundsParams& params);

}  // namespace otd
