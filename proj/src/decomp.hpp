#pragma once

// Decomposition values (tree / path / weak path / layering), the axioms that
// define them as validators, and the scalar measures on them.
//
// Bags are sorted vectors and may contain repeated entries: a few producers
// deliberately record one occurrence per replaced vertex so that magnitude
// counts occurrences. Every measure except magnitude treats bags as sets.

#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace otd {

enum class DecompKind { tree, path, weak_path, layering };

std::string decomp_kind_name(DecompKind k);
DecompKind decomp_kind_from_name(const std::string& name);

struct Decomposition {
  DecompKind kind = DecompKind::path;
  std::vector<std::vector<int>> bags;  // each sorted ascending
  std::vector<Edge> tree_edges;        // kind == tree only; node ids index bags
};

// Sorts every bag (repeats kept). Tree edges are left untouched.
void normalize(Decomposition& d);

struct Violation {
  std::string axiom;    // e.g. "tree-structure", "vertex-coverage"
  std::string witness;  // smallest-id witness, human readable
};

// std::nullopt means the decomposition satisfies every axiom for g. Axioms are
// checked in a fixed order (structure, vertex coverage, edge coverage,
// connectivity / disjointness) and the first failure is reported.
std::optional<Violation> validate(const Decomposition& d, const Graph& g);

int width(const Decomposition& d);                    // max distinct bag size - 1
std::int64_t magnitude(const Decomposition& d);       // sum of bag sizes, repeats counted
int orthogonality(const Decomposition& a, const Decomposition& b);
int layered_width(const Decomposition& d, const Decomposition& layering);
bool is_domino(const Decomposition& d);               // every vertex in <= 2 bags

// Bags intersected with s; kind and tree edges preserved.
Decomposition restrict_to(const Decomposition& d, const std::vector<int>& s);

// (P_1 u P_2), (P_2 u P_3), ...; a single-bag input is returned unchanged.
// The result is an ordinary path decomposition with deduplicated bags.
Decomposition weak_to_path(const Decomposition& p);

// Distance-from-root layering. On a disconnected graph the root's component
// comes first and the remaining components follow in order of smallest member,
// each rooted at its smallest member, with one empty layer between components.
Decomposition bfs_layering(const Graph& g, int root);

// Shared helpers.
int distinct_size(const std::vector<int>& sorted_bag);
bool bag_contains(const std::vector<int>& sorted_bag, int v);
std::vector<int> vertex_universe(const Decomposition& d);  // distinct union of bags

}  // namespace otd
