#pragma once

// Combinatorial curve arrangements and edge-crossing drawings, their
// planarizations (one new vertex per crossing), and the decomposition
// liftings that turn a tree-decomposition/layering pair of the planarized
// graph into decomposition pairs of the curve intersection graph or of the
// drawn graph.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "decomp.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace otd {

// A family of curves given purely combinatorially: each curve lists the ids
// of its crossings in traversal order. Every id is shared by exactly two
// curves and appears once on each. `genus` is caller-supplied metadata used
// only in bound formulas; `per_curve_cap`, when set, bounds how many
// crossings any one curve may carry.
struct CurveArrangement {
  std::vector<std::vector<std::string>> curves;
  int genus = 0;
  std::optional<int> per_curve_cap;
};

// One directed edge of a drawing: the edge {tail, head} of the underlying
// graph together with the ids of the crossings on it, ordered from tail to
// head.
struct DrawnEdge {
  int tail = 0;
  int head = 0;
  std::vector<std::string> crossings;
};

// A drawing of a graph given combinatorially: every graph edge appears
// exactly once in `edges` with a chosen direction and its ordered crossing
// list. Every crossing id is shared by exactly two distinct edges; crossings
// between edges that share an endpoint are allowed.
struct Drawing {
  Graph graph;
  std::vector<DrawnEdge> edges;
  int genus = 0;
};

// Throw Errc::invalid_input when the crossing pattern breaks the invariants
// above (or a configured per-curve cap).
void validate_arrangement(const CurveArrangement& a);
void validate_drawing(const Drawing& d);

// Result of replacing every crossing by a vertex. For an arrangement the
// vertices are exactly the crossings; for a drawing the original vertices
// keep their ids 0..n-1 and the crossing vertices follow. Crossing vertices
// are numbered in lexicographic id order. Each curve (or drawn edge) induces
// a path in `gprime`.
struct Planarization {
  Graph gprime;
  int original_count = 0;                     // leading vertices carried over unchanged
  std::vector<std::string> crossing_ids;      // per crossing vertex, ascending
  std::vector<std::array<int, 2>> owners;     // owning curve/edge indices, smaller first
  std::vector<std::array<int, 2>> positions;  // index of the id within each owner's list

  // gprime vertex id of the crossing with the given id; Errc::invalid_input
  // if the id is unknown.
  int crossing_vertex(const std::string& id) const;
};

// Intersection graph of the curves: one vertex per curve, an edge whenever
// two curves share at least one crossing.
Graph string_graph(const CurveArrangement& a);

Planarization planarize(const CurveArrangement& a);
Planarization planarize(const Drawing& d);

// A lifted decomposition pair: `tree` is always a tree decomposition;
// `second` is a layering, path, or weak path decomposition depending on the
// lift that produced it.
struct LiftPair {
  Decomposition tree;
  Decomposition second;
};

// Lift a tree decomposition + layering of the planarized arrangement to the
// intersection graph, grouping k-1 planarization layers per output layer.
// Every crossing vertex occurrence in a bag becomes its two owning curves.
// Requires k >= 2 and at most k crossings per curve (Errc::cap_exceeded
// otherwise). Curves with no crossings are placed in layer 0 and in bag 0 of
// the tree decomposition.
LiftPair lift_string_layered(const CurveArrangement& a, const Decomposition& tprime,
                             const Decomposition& lprime, int k);

// Lift a tree decomposition + layering of the planarized arrangement to a
// tree decomposition + path decomposition of the intersection graph: bag i of
// the path decomposition holds both owners of every crossing in layer i, one
// occurrence each, so its magnitude is exactly twice the number of crossings
// when every curve has at least one. Crossing-free curves are placed in bag 0
// of both outputs.
LiftPair lift_string_path(const CurveArrangement& a, const Decomposition& tprime,
                          const Decomposition& lprime);

// Lift a tree decomposition + layering of the planarized drawing back to the
// drawn graph: each crossing vertex occurrence is replaced by the tails of
// its two edges, each original vertex stays itself. The second output is a
// weak path decomposition of magnitude exactly 2*crossings + n.
LiftPair lift_drawing(const Drawing& d, const Decomposition& tprime, const Decomposition& lprime);

enum class BaseMode { heuristic, exact };

// A decomposition pair for a planarized graph: a tree decomposition plus a
// breadth-first layering.
struct BasePair {
  Decomposition tree;
  Decomposition layering;
};

// Produce such a pair for any graph. heuristic: min-fill elimination with
// seeded tie-breaking; exact: the minimum-width decomposition from the exact
// solver, subject to its cap. The layering is breadth-first from `root`. The
// layered width of the result is whatever it measures to be; no bound is
// promised.
BasePair base_decomposition(const Graph& gp, BaseMode mode, int root, int exact_cap = 14,
                            unsigned seed = 0);

// max(0, (tw+1)^2/48 - n/2) as an exact rational.
Rat crossing_lower_bound(std::int64_t tw, std::int64_t n);

}  // namespace otd
