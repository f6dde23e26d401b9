#pragma once

// Canonical JSON and DOT serialization for every value that crosses the
// library boundary. Canonical output has sorted keys, two-space indentation,
// LF-only line endings, one trailing newline, and exact rationals rendered as
// canonical strings ("n" or "n/d"). Parsers accept rationals as integers,
// exact decimal or fraction strings, or [numerator, denominator] pairs.

#include <json.hpp>

#include <string>
#include <vector>

#include "decomp.hpp"
#include "graph.hpp"
#include "planarize.hpp"
#include "rational.hpp"
#include "rects.hpp"

namespace otd {

using Json = nlohmann::json;

// Parse errors surface as invalid-input failures, never as foreign exceptions.
Json parse_json(const std::string& text);
std::string dump_canonical(const Json& j);

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

// {"edges": [[u,v],...], "n": int} plus "labels" when present; edges are
// stored sorted with u < v, so output order is lexicographic.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// {"bags": [[v,...],...], "kind": "tree|path|weakpath|layering"} plus
// "tree_edges" for tree kind. Bags are emitted sorted ascending.
Json decomp_to_json(const Decomposition& d);
Decomposition decomp_from_json(const Json& j);

// {"curves": [[crossing-id,...],...], "genus": int} plus "per_curve_cap" when
// set. Per-curve crossing lists keep traversal order; the planarization (not
// the file format) numbers crossing vertices by sorted id.
Json arrangement_to_json(const CurveArrangement& a);
CurveArrangement arrangement_from_json(const Json& j);

// {"edges": [{"crossings": [...], "head": v, "tail": u},...], "genus": int,
// "graph": {...}}.
Json drawing_to_json(const Drawing& d);
Drawing drawing_from_json(const Json& j);

// One rectangle is [x1, y1, x2, y2]; a family is {"rects": [...]}.
Json rect_to_json(const Rect& r);
Rect rect_from_json(const Json& j);
Json rects_to_json(const std::vector<Rect>& rs);
std::vector<Rect> rects_from_json(const Json& j);

// One box is its side list [[lo, hi],...]; a family is {"boxes": [...]}.
Json box_to_json(const Box& b);
Box box_from_json(const Json& j);
Json boxes_to_json(const std::vector<Box>& bs);
std::vector<Box> boxes_from_json(const Json& j);

Json point_to_json(const Pt& p);  // [x, y]

// Deterministic DOT text: vertices ascending, edges in stored order. The
// decomposition form renders bags as box nodes joined by tree edges (tree
// kind) or consecutively (ordered kinds).
std::string graph_to_dot(const Graph& g);
std::string decomp_to_dot(const Decomposition& d);

}  // namespace otd
