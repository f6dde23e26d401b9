#pragma once

// Open axis-aligned rectangles and boxes with exact rational coordinates:
// pair classification (h/v/o), alternating-sequence checks, nesting witnesses,
// oracle-driven clique search in rectangle and box intersection graphs, and
// the translation between orthogonal path-decomposition pairs and rectangle
// families.

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "decomp.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace otd {

struct Pt {
  Rat x;
  Rat y;
  friend bool operator==(const Pt&, const Pt&) = default;
};

// Open rectangle (x1, x2) x (y1, y2); construction enforces x1 < x2, y1 < y2.
struct Rect {
  Rat x1, x2, y1, y2;
  friend bool operator==(const Rect&, const Rect&) = default;
};

Rect make_rect(const Rat& x1, const Rat& x2, const Rat& y1, const Rat& y2);

// Intersection of two open rectangles; nullopt when empty (touching counts as
// empty because the rectangles are open).
std::optional<Rect> intersect(const Rect& a, const Rect& b);

// Open containment of a point.
bool contains(const Rect& r, const Pt& p);

Pt center(const Rect& r);

// The four corner points, ordered by (x ascending, y ascending).
std::array<Pt, 4> corners(const Rect& r);

// True when some corner of v lies strictly inside w.
bool contains_any_corner(const Rect& w, const Rect& v);

// Raw side predicates for an intersecting pair (v, w): whether the left/right
// (top/bottom) sides of v's intersection with w lie on v's boundary. Both can
// hold at once when coordinates coincide; classify_pair resolves that by
// preferring h. Throws empty_intersection when v and w are disjoint.
bool h_sides_touch(const Rect& v, const Rect& w);
bool v_sides_touch(const Rect& v, const Rect& w);

enum class PairClass { h, v, o };

// Classifies an intersecting pair by which sides of the intersection lie on
// the first rectangle's boundary: h for left/right, v for top/bottom, o for
// neither (the second rectangle is then contained in the first). Errors:
// empty_intersection when disjoint, corner_contained when the second
// rectangle holds a corner of the first.
PairClass classify_pair(const Rect& v, const Rect& w);

const char* pair_class_name(PairClass c);

// Outcome of a sequence check: ok, or the first failing element index with a
// short condition name.
struct SequenceReport {
  bool ok = true;
  int index = -1;
  std::string condition;
};

// Checks the alternating-sequence conditions against the running intersection:
// every element meets it, holds none of its corners, and consecutive pairs are
// never both h-touching nor both v-touching. A single rectangle passes.
SequenceReport is_hvo_alternating(const std::vector<Rect>& seq);

// Intersection of all rectangles in the list; nullopt when empty. The empty
// list is rejected (invalid_input).
std::optional<Rect> fold_intersection(const std::vector<Rect>& seq);

enum class Orientation { h, v };

// Checks that every element forms an h-pair (resp. v-pair) both with r and
// with the intersection of r and its predecessor, holding no corner of either.
SequenceReport is_nesting(const std::vector<Rect>& seq, const Rect& r, Orientation o);

struct NestingWitness {
  Pt point;
  std::vector<int> indices;  // ascending; at least ceil(k/2) of them
  Orientation orientation;
};

// For a nesting sequence, produces a point of r interior to at least half of
// the members (rounded up), computed as the center of the intersection of r
// with the majority side's members. Throws not_nesting otherwise.
NestingWitness nesting_witness(const std::vector<Rect>& seq, const Rect& r);

// Answers child queries during clique search: given the two most recent
// sequence members, returns at least `count` rectangles each intersecting
// both. The name labels the oracle in traces and error messages.
struct RectOracle {
  std::string name;
  std::function<std::vector<Rect>(const Rect& a, const Rect& b, int count)> children;
};

struct TraceStep {
  int level;           // 1-based oracle request number
  std::string action;  // success | stall | corner-exit | nesting-exit | sweep-exit | sweep-miss
  int position;        // sequence length when the step happened
  int stalls;          // replacements recorded at that position so far
};

struct RectClique {
  std::vector<Rect> rects;
  Pt point;
  std::vector<TraceStep> trace;
  int levels = 0;      // oracle requests consumed
  std::string exit;    // trivial | grown | corner | nesting | sweep
};

// Grows a k-clique in the rectangle intersection graph explored through the
// oracle, starting from an intersecting root pair. Uses at most (k-1)^2
// oracle requests. Errors: invalid_input (k < 2 or disjoint root),
// oracle_violation (a child missing a parent), exhausted (the oracle returned
// fewer children than requested), validation (degenerate coordinates broke a
// replacement), internal (a proven invariant failed).
RectClique find_clique(const Rect& r0, const Rect& r1, const RectOracle& oracle, int k);

// Open d-dimensional box; sides[i] = {lo, hi} with lo < hi.
struct Box {
  std::vector<std::array<Rat, 2>> sides;
  friend bool operator==(const Box&, const Box&) = default;
};

Box make_box(std::vector<std::array<Rat, 2>> sides);

std::optional<Box> intersect(const Box& a, const Box& b);

std::vector<Rat> center(const Box& b);

bool contains(const Box& b, const std::vector<Rat>& p);

// Extends a box clique: given the current working clique, returns one box
// intersecting every member.
struct BoxOracle {
  std::string name;
  std::function<Box(const std::vector<Box>& clique, int round)> extend;
};

struct BoxClique {
  std::vector<Box> boxes;
  std::vector<Rat> point;
  int rounds = 0;
};

// Grows a k-clique of open d-boxes from a root clique of 2d+1 boxes with a
// common point, asking the oracle for one extension per round over exactly
// max(0, k-2d-1) rounds. After each round one box made redundant by the other
// 2d (for the common intersection) is dropped from the working set. Errors:
// invalid_input (bad dimensions, root size, or disjoint root),
// oracle_violation (an extension missing a working-set member).
BoxClique box_find_clique(const std::vector<Box>& root, const BoxOracle& oracle, int k, int d);

struct HellyResult {
  std::optional<Pt> point;                         // center of the common intersection
  std::optional<std::pair<int, int>> disjoint_pair;  // witness when there is none
};

// Pairwise-intersecting rectangles always share a point; returns it, or a
// disjoint pair as witness. The empty list is rejected (invalid_input).
HellyResult helly_point(const std::vector<Rect>& rects);

// One rectangle per vertex: the product of its (half-unit padded) bag-index
// intervals in the two path decompositions. Both inputs must be valid path
// decompositions of g.
std::vector<Rect> paths_to_rects(const Decomposition& p1, const Decomposition& p2, const Graph& g);

// Sweep-line path decompositions of the intersection graph of a rectangle
// family: one bag per slab between consecutive distinct x-coordinates
// (members: rectangles spanning the slab), and the same over y.
std::pair<Decomposition, Decomposition> rects_to_paths(const std::vector<Rect>& rects);

// Intersection graph: one vertex per rectangle, edges between intersecting
// pairs.
Graph rect_intersection_graph(const std::vector<Rect>& rects);

// Seeded oracle returning children anchored at random points of the parents'
// intersection. All generated coordinates are pairwise distinct and distinct
// from the parents', so no degenerate coincidences arise.
RectOracle make_random_rect_oracle(unsigned seed);

// Adversarial oracle whose children always touch the working intersection
// from one side (left for h, bottom for v), forcing a stall on every level
// after the first until the nesting exit fires.
RectOracle make_stall_oracle(Orientation o);

// Adversarial oracle whose children all contain the lower-left corner of the
// parents' intersection, forcing the corner exit on the first level.
RectOracle make_corner_flood_oracle();

// Replays prerecorded child lists, one list per request, then under-delivers.
RectOracle make_scripted_rect_oracle(std::vector<std::vector<Rect>> levels);

// Seeded box oracle returning a box around a random point common to the
// working clique.
BoxOracle make_random_box_oracle(unsigned seed, int d);

// Replays prerecorded extension boxes, one per round.
BoxOracle make_scripted_box_oracle(std::vector<Box> boxes);

}  // namespace otd
