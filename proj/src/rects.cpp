#include "rects.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <random>
#include <set>
#include <string>

#include "errors.hpp"

namespace otd {

namespace {

Rect transposed(const Rect& r) { return Rect{r.y1, r.y2, r.x1, r.x2}; }

Pt transposed(const Pt& p) { return Pt{p.y, p.x}; }

std::string rect_str(const Rect& r) {
  return "(" + r.x1.str() + "," + r.x2.str() + ")x(" + r.y1.str() + "," + r.y2.str() + ")";
}

Rect require_intersect(const Rect& a, const Rect& b, const char* what) {
  auto c = intersect(a, b);
  if (!c) fail(Errc::internal, std::string(what) + ": " + rect_str(a) + " and " + rect_str(b) + " are disjoint");
  return *c;
}

// Maximum-coverage point of the member rectangles inside `within`. Coverage is
// piecewise constant on the cells of the coordinate grid, and every maximal
// open region contains a whole cell, so scanning cell centers finds the true
// maximum. Ties resolve to the lowest cell in (x, y) scan order.
struct SweepBest {
  Pt point;
  std::vector<int> members;
};

SweepBest sweep_max_coverage(const std::vector<Rect>& seq, const Rect& within) {
  std::vector<Rat> xs{within.x1, within.x2};
  std::vector<Rat> ys{within.y1, within.y2};
  for (const Rect& s : seq) {
    for (const Rat& c : {s.x1, s.x2})
      if (within.x1 < c && c < within.x2) xs.push_back(c);
    for (const Rat& c : {s.y1, s.y2})
      if (within.y1 < c && c < within.y2) ys.push_back(c);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  SweepBest best;
  best.point = center(within);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
      Pt p{Rat::midpoint(xs[i], xs[i + 1]), Rat::midpoint(ys[j], ys[j + 1])};
      std::vector<int> members;
      for (int t = 0; t < static_cast<int>(seq.size()); ++t)
        if (contains(seq[t], p)) members.push_back(t);
      if (members.size() > best.members.size()) best = {p, std::move(members)};
    }
  }
  return best;
}

// Witness construction for a sequence that raw-h-nests in `r`. Every member
// reaches past r's left or right edge, its vertical extent strictly contains
// the horizontal line through the last member's overlap with r, and the
// member's near vertical edge clears the thin column hugging the side it
// reaches past; so each member covers one of the two column midpoints and a
// majority lands on one side.
NestingWitness witness_core(const std::vector<Rect>& seq, const Rect& r) {
  const int k = static_cast<int>(seq.size());
  const int need = (k + 1) / 2;
  Rect last_cap = require_intersect(r, seq.back(), "nesting witness base");
  Rat ystar = Rat::midpoint(last_cap.y1, last_cap.y2);
  Rat xn = r.x2;  // smallest member coordinate right of r.x1
  Rat xp = r.x1;  // largest member coordinate left of r.x2
  for (const Rect& s : seq) {
    for (const Rat& c : {s.x1, s.x2}) {
      if (r.x1 < c && c < xn) xn = c;
      if (c < r.x2 && xp < c) xp = c;
    }
  }
  Pt left{Rat::midpoint(r.x1, xn), ystar};
  Pt right{Rat::midpoint(xp, r.x2), ystar};
  std::vector<int> ml, mr;
  for (int i = 0; i < k; ++i) {
    if (contains(seq[i], left)) ml.push_back(i);
    if (contains(seq[i], right)) mr.push_back(i);
  }
  std::vector<int> chosen = ml.size() >= mr.size() ? ml : mr;
  if (static_cast<int>(chosen.size()) < need) {
    // Only reachable when coordinate coincidences park a member's edge exactly
    // on r's side; fall back to an exact coverage sweep.
    auto best = sweep_max_coverage(seq, r);
    if (static_cast<int>(best.members.size()) < need)
      fail(Errc::not_nesting, "no point of the base rectangle reaches half the members");
    chosen = best.members;
  }
  std::vector<Rect> sel;
  sel.reserve(chosen.size());
  for (int i : chosen) sel.push_back(seq[i]);
  auto common = fold_intersection(sel);
  std::optional<Rect> land = common ? intersect(*common, r) : std::nullopt;
  if (!land) fail(Errc::internal, "majority members lost their common point");
  NestingWitness w;
  w.point = center(*land);
  w.orientation = Orientation::h;
  for (int i = 0; i < k; ++i)
    if (contains(seq[i], w.point)) w.indices.push_back(i);
  if (static_cast<int>(w.indices.size()) < need)
    fail(Errc::internal, "majority recount fell short");
  return w;
}

void verify_clique(const std::vector<Rect>& rects, const Pt& p) {
  for (std::size_t i = 0; i < rects.size(); ++i) {
    if (!contains(rects[i], p))
      fail(Errc::internal, "clique point not interior to member " + std::to_string(i));
    for (std::size_t j = i + 1; j < rects.size(); ++j)
      if (!intersect(rects[i], rects[j]))
        fail(Errc::internal, "clique members " + std::to_string(i) + " and " + std::to_string(j) + " are disjoint");
  }
}

// Strictly-inside sample on a fine dyadic grid. With a `used` registry the
// value is also distinct from every coordinate ever registered, which keeps
// randomly generated instances free of the boundary coincidences that the
// degenerate-geometry code paths exist for.
Rat sample_fresh(const Rat& lo, const Rat& hi, std::mt19937& rng, std::set<Rat>* used) {
  std::int64_t den = std::int64_t{1} << 20;
  for (int attempt = 0;; ++attempt) {
    if (den > (std::int64_t{1} << 44)) fail(Errc::internal, "coordinate sampling exhausted");
    std::int64_t nlo = (lo * Rat(den)).floor() + 1;
    std::int64_t nhi = (hi * Rat(den)).ceil() - 1;
    if (nlo <= nhi) {
      auto span = static_cast<std::uint64_t>(nhi - nlo + 1);
      Rat v(nlo + static_cast<std::int64_t>(rng() % span), den);
      if (lo < v && v < hi && (!used || used->insert(v).second)) return v;
    }
    if (attempt % 3 == 2) den *= 2;
  }
}

}  // namespace

Rect make_rect(const Rat& x1, const Rat& x2, const Rat& y1, const Rat& y2) {
  if (!(x1 < x2) || !(y1 < y2))
    fail(Errc::invalid_input, "rectangle sides must have positive extent");
  return Rect{x1, x2, y1, y2};
}

std::optional<Rect> intersect(const Rect& a, const Rect& b) {
  Rat x1 = std::max(a.x1, b.x1);
  Rat x2 = std::min(a.x2, b.x2);
  Rat y1 = std::max(a.y1, b.y1);
  Rat y2 = std::min(a.y2, b.y2);
  if (!(x1 < x2) || !(y1 < y2)) return std::nullopt;
  return Rect{x1, x2, y1, y2};
}

bool contains(const Rect& r, const Pt& p) {
  return r.x1 < p.x && p.x < r.x2 && r.y1 < p.y && p.y < r.y2;
}

Pt center(const Rect& r) {
  return Pt{Rat::midpoint(r.x1, r.x2), Rat::midpoint(r.y1, r.y2)};
}

std::array<Pt, 4> corners(const Rect& r) {
  return {Pt{r.x1, r.y1}, Pt{r.x1, r.y2}, Pt{r.x2, r.y1}, Pt{r.x2, r.y2}};
}

bool contains_any_corner(const Rect& w, const Rect& v) {
  for (const Pt& c : corners(v))
    if (contains(w, c)) return true;
  return false;
}

bool h_sides_touch(const Rect& v, const Rect& w) {
  if (!intersect(v, w)) fail(Errc::empty_intersection, "rectangles do not intersect");
  return w.x1 <= v.x1 || w.x2 >= v.x2;
}

bool v_sides_touch(const Rect& v, const Rect& w) {
  if (!intersect(v, w)) fail(Errc::empty_intersection, "rectangles do not intersect");
  return w.y1 <= v.y1 || w.y2 >= v.y2;
}

PairClass classify_pair(const Rect& v, const Rect& w) {
  if (!intersect(v, w)) fail(Errc::empty_intersection, "rectangles do not intersect");
  if (contains_any_corner(w, v))
    fail(Errc::corner_contained, "second rectangle holds a corner of the first");
  if (h_sides_touch(v, w)) return PairClass::h;
  if (v_sides_touch(v, w)) return PairClass::v;
  return PairClass::o;
}

const char* pair_class_name(PairClass c) {
  switch (c) {
    case PairClass::h: return "h";
    case PairClass::v: return "v";
    default: return "o";
  }
}

SequenceReport is_hvo_alternating(const std::vector<Rect>& seq) {
  if (seq.empty()) fail(Errc::invalid_input, "sequence must be nonempty");
  Rect running = seq[0];
  bool ph = false, pv = false;
  for (int i = 1; i < static_cast<int>(seq.size()); ++i) {
    const Rect& s = seq[i];
    auto cap = intersect(running, s);
    if (!cap) return {false, i, "intersects-running"};
    if (contains_any_corner(s, running)) return {false, i, "corner-free"};
    bool ch = h_sides_touch(running, s);
    bool cv = v_sides_touch(running, s);
    if (i >= 2 && ((ph && ch) || (pv && cv))) return {false, i, "alternation"};
    ph = ch;
    pv = cv;
    running = *cap;
  }
  return {};
}

std::optional<Rect> fold_intersection(const std::vector<Rect>& seq) {
  if (seq.empty()) fail(Errc::invalid_input, "intersection of an empty list");
  std::optional<Rect> acc = seq[0];
  for (std::size_t i = 1; i < seq.size(); ++i) {
    acc = intersect(*acc, seq[i]);
    if (!acc) return std::nullopt;
  }
  return acc;
}

SequenceReport is_nesting(const std::vector<Rect>& seq, const Rect& r, Orientation o) {
  if (seq.empty()) fail(Errc::invalid_input, "sequence must be nonempty");
  auto touch = o == Orientation::h ? h_sides_touch : v_sides_touch;
  for (int i = 0; i < static_cast<int>(seq.size()); ++i) {
    const Rect& s = seq[i];
    if (!intersect(r, s)) return {false, i, "pair-intersects"};
    if (contains_any_corner(s, r)) return {false, i, "pair-corner-free"};
    if (!touch(r, s)) return {false, i, "pair-orientation"};
    if (i >= 1) {
      Rect q = *intersect(r, seq[i - 1]);  // nonempty: i-1 passed pair-intersects
      if (!intersect(q, s)) return {false, i, "chain-intersects"};
      if (contains_any_corner(s, q)) return {false, i, "chain-corner-free"};
      if (!touch(q, s)) return {false, i, "chain-orientation"};
    }
  }
  return {};
}

NestingWitness nesting_witness(const std::vector<Rect>& seq, const Rect& r) {
  if (seq.empty()) fail(Errc::invalid_input, "sequence must be nonempty");
  auto hrep = is_nesting(seq, r, Orientation::h);
  if (hrep.ok) return witness_core(seq, r);
  auto vrep = is_nesting(seq, r, Orientation::v);
  if (vrep.ok) {
    std::vector<Rect> tseq;
    tseq.reserve(seq.size());
    for (const Rect& s : seq) tseq.push_back(transposed(s));
    NestingWitness w = witness_core(tseq, transposed(r));
    w.point = transposed(w.point);
    w.orientation = Orientation::v;
    return w;
  }
  fail(Errc::not_nesting,
       "sequence nests in neither orientation: h fails at index " + std::to_string(hrep.index) +
           " (" + hrep.condition + "), v fails at index " + std::to_string(vrep.index) + " (" +
           vrep.condition + ")");
}

RectClique find_clique(const Rect& r0, const Rect& r1, const RectOracle& oracle, int k) {
  if (k < 2) fail(Errc::invalid_input, "clique size must be at least 2");
  auto root_cap = intersect(r0, r1);
  if (!root_cap) fail(Errc::invalid_input, "root rectangles must intersect");
  RectClique out;
  if (k == 2) {
    out.rects = {r0, r1};
    out.point = center(*root_cap);
    out.exit = "trivial";
    verify_clique(out.rects, out.point);
    return out;
  }

  std::vector<Rect> seq{r0};
  std::optional<Rect> prefix;  // intersection of seq without its last member
  Rect running = r0;           // intersection of all of seq
  bool last_h = false, last_v = false;  // side flags of (prefix, seq.back())
  std::vector<Rect> stall_values;       // values the current last position has taken
  int stalls_cur = 0;
  const int budget = (k - 1) * (k - 1);
  const int want = 4 * k - 7;

  // The two invariants the procedure rides on, rechecked after every mutation:
  // the sequence stays alternating, and its full intersection collapses to the
  // intersection of the last two members. An append can never break either;
  // a replacement can break alternation only through coordinate coincidences,
  // which is an input defect, not a procedure failure.
  auto check_sequence = [&](bool appended) {
    auto rep = is_hvo_alternating(seq);
    if (!rep.ok) {
      std::string where = " at index " + std::to_string(rep.index) + " (" + rep.condition + ")";
      if (appended) fail(Errc::internal, "appended sequence lost alternation" + where);
      fail(Errc::validation, "degenerate coordinates: replacement broke alternation" + where);
    }
    auto f = fold_intersection(seq);
    bool ok = f.has_value() && *f == running;
    if (ok && seq.size() >= 2) {
      auto tail = intersect(seq[seq.size() - 2], seq.back());
      ok = tail.has_value() && *tail == *f;
    }
    if (!ok) fail(Errc::internal, "running intersection lost the last-two identity");
  };

  while (static_cast<int>(seq.size()) < k) {
    int level = out.levels + 1;
    if (level > budget + k) fail(Errc::cap_exceeded, "oracle request budget exceeded");
    const Rect& a = seq.size() >= 2 ? seq[seq.size() - 2] : r1;
    const Rect b = seq.back();
    auto kids = oracle.children(a, b, want);
    out.levels = level;
    if (static_cast<int>(kids.size()) < want)
      fail(Errc::exhausted, "oracle '" + oracle.name + "' returned " + std::to_string(kids.size()) +
                                " children, needed " + std::to_string(want));
    kids.resize(want);
    for (int j = 0; j < want; ++j)
      if (!intersect(kids[j], a) || !intersect(kids[j], b))
        fail(Errc::oracle_violation,
             "oracle '" + oracle.name + "' child " + std::to_string(j) + " misses a parent");

    const int n = static_cast<int>(seq.size());
    int pick = -1;
    for (int j = 0; j < want; ++j)
      if (!contains_any_corner(kids[j], running)) {
        pick = j;
        break;
      }

    if (pick < 0) {
      // Every child holds a corner of the running intersection, so one corner
      // lies in at least a quarter of them: ceil((4k-7)/4) = k-1 children plus
      // the last sequence member make the clique.
      auto cs = corners(running);
      std::array<std::vector<int>, 4> holders;
      for (int j = 0; j < want; ++j)
        for (int c = 0; c < 4; ++c)
          if (contains(kids[j], cs[c])) holders[c].push_back(j);
      int bc = 0;
      for (int c = 1; c < 4; ++c)
        if (holders[c].size() > holders[bc].size()) bc = c;
      if (static_cast<int>(holders[bc].size()) < k - 1)
        fail(Errc::internal, "corner pigeonhole fell short");
      std::vector<Rect> chosen;
      for (int t = 0; t < k - 1; ++t) chosen.push_back(kids[holders[bc][t]]);
      auto common = fold_intersection(chosen);
      std::optional<Rect> land = common ? intersect(*common, running) : std::nullopt;
      if (!land) fail(Errc::internal, "corner children lost their common point");
      out.rects.clear();
      out.rects.push_back(seq.back());
      out.rects.insert(out.rects.end(), chosen.begin(), chosen.end());
      out.point = center(*land);
      out.exit = "corner";
      out.trace.push_back({level, "corner-exit", n, stalls_cur});
      verify_clique(out.rects, out.point);
      return out;
    }

    const Rect v = kids[pick];
    auto rv = intersect(running, v);
    if (!rv) fail(Errc::internal, "child misses the running intersection");
    bool nh = h_sides_touch(running, v);
    bool nv = v_sides_touch(running, v);
    bool stall = n >= 2 && ((last_h && nh) || (last_v && nv));

    if (!stall) {
      prefix = running;
      seq.push_back(v);
      running = *rv;
      last_h = nh;
      last_v = nv;
      stall_values.assign(1, v);
      stalls_cur = 0;
      out.trace.push_back({level, "success", static_cast<int>(seq.size()), 0});
      check_sequence(true);
      continue;
    }

    // Stall: the replacement still meets the shorter prefix and holds none of
    // its corners, so the sequence survives with the same length.
    seq.back() = v;
    auto nr = intersect(*prefix, v);
    if (!nr) fail(Errc::internal, "replacement misses the prefix intersection");
    running = *nr;
    last_h = h_sides_touch(*prefix, v);
    last_v = v_sides_touch(*prefix, v);
    stall_values.push_back(v);
    ++stalls_cur;
    out.trace.push_back({level, "stall", n, stalls_cur});
    check_sequence(false);

    if (static_cast<int>(stall_values.size()) >= 2 * (k - n) + 1) {
      // The stall list is full: half of it shares a point of the prefix
      // intersection, which the first n-1 members also contain.
      const int need = k - n + 1;
      auto finish = [&](const std::vector<int>& idxs, const Pt& p, const char* how,
                        const char* action) {
        out.rects.assign(seq.begin(), seq.end() - 1);
        for (int t = 0; t < need; ++t) out.rects.push_back(stall_values[idxs[t]]);
        out.point = p;
        out.exit = how;
        out.trace.push_back({level, action, n, stalls_cur});
        verify_clique(out.rects, out.point);
      };
      bool witnessed = false;
      NestingWitness w;
      try {
        w = nesting_witness(stall_values, *prefix);
        witnessed = true;
      } catch (const Error& e) {
        if (e.code() != Errc::not_nesting) throw;
      }
      if (witnessed) {
        if (static_cast<int>(w.indices.size()) < need)
          fail(Errc::internal, "nesting witness too small");
        finish(w.indices, w.point, "nesting", "nesting-exit");
        return out;
      }
      auto best = sweep_max_coverage(stall_values, *prefix);
      if (static_cast<int>(best.members.size()) >= need) {
        std::vector<Rect> sel;
        for (int i : best.members) sel.push_back(stall_values[i]);
        auto common = fold_intersection(sel);
        std::optional<Rect> land = common ? intersect(*common, *prefix) : std::nullopt;
        if (!land) fail(Errc::internal, "sweep members lost their common point");
        Pt p = center(*land);
        std::vector<int> idxs;
        for (int i = 0; i < static_cast<int>(stall_values.size()); ++i)
          if (contains(stall_values[i], p)) idxs.push_back(i);
        if (static_cast<int>(idxs.size()) < need)
          fail(Errc::internal, "sweep recount fell short");
        finish(idxs, p, "sweep", "sweep-exit");
        return out;
      }
      out.trace.push_back({level, "sweep-miss", n, stalls_cur});
    }
  }

  out.rects = seq;
  out.point = center(running);
  out.exit = "grown";
  verify_clique(out.rects, out.point);
  return out;
}

Box make_box(std::vector<std::array<Rat, 2>> sides) {
  if (sides.empty()) fail(Errc::invalid_input, "box needs at least one dimension");
  for (const auto& s : sides)
    if (!(s[0] < s[1])) fail(Errc::invalid_input, "box sides must have positive extent");
  return Box{std::move(sides)};
}

std::optional<Box> intersect(const Box& a, const Box& b) {
  if (a.sides.size() != b.sides.size()) fail(Errc::invalid_input, "box dimensions differ");
  Box out;
  out.sides.reserve(a.sides.size());
  for (std::size_t j = 0; j < a.sides.size(); ++j) {
    Rat lo = std::max(a.sides[j][0], b.sides[j][0]);
    Rat hi = std::min(a.sides[j][1], b.sides[j][1]);
    if (!(lo < hi)) return std::nullopt;
    out.sides.push_back({lo, hi});
  }
  return out;
}

std::vector<Rat> center(const Box& b) {
  std::vector<Rat> p;
  p.reserve(b.sides.size());
  for (const auto& s : b.sides) p.push_back(Rat::midpoint(s[0], s[1]));
  return p;
}

bool contains(const Box& b, const std::vector<Rat>& p) {
  if (p.size() != b.sides.size()) fail(Errc::invalid_input, "point dimension mismatch");
  for (std::size_t j = 0; j < p.size(); ++j)
    if (!(b.sides[j][0] < p[j] && p[j] < b.sides[j][1])) return false;
  return true;
}

namespace {

Box fold_boxes(const std::vector<Box>& boxes, const char* what) {
  Box acc = boxes.at(0);
  for (std::size_t i = 1; i < boxes.size(); ++i) {
    auto c = intersect(acc, boxes[i]);
    if (!c) fail(Errc::internal, std::string(what) + ": common intersection is empty");
    acc = *c;
  }
  return acc;
}

// Removes one box whose absence leaves the common intersection unchanged.
// Each face of the intersection is attributed to the lowest-index box whose
// bound achieves it; with more boxes than faces, some box gets nothing.
void drop_redundant(std::vector<Box>& work, const Box& common) {
  const int d = static_cast<int>(common.sides.size());
  if (static_cast<int>(work.size()) != 2 * d + 1)
    fail(Errc::internal, "redundant removal expects 2d+1 boxes");
  std::set<int> attributed;
  for (int j = 0; j < d; ++j) {
    for (int side = 0; side < 2; ++side) {
      int holder = -1;
      for (int i = 0; i < static_cast<int>(work.size()); ++i)
        if (work[i].sides[j][side] == common.sides[j][side]) {
          holder = i;
          break;
        }
      if (holder < 0) fail(Errc::internal, "no box achieves an intersection face");
      attributed.insert(holder);
    }
  }
  int victim = -1;
  for (int i = 0; i < static_cast<int>(work.size()); ++i)
    if (!attributed.count(i)) {
      victim = i;
      break;
    }
  if (victim < 0) fail(Errc::internal, "no redundant box among 2d+1");
  work.erase(work.begin() + victim);
  if (!(fold_boxes(work, "redundant removal") == common))
    fail(Errc::internal, "redundant removal changed the intersection");
}

}  // namespace

BoxClique box_find_clique(const std::vector<Box>& root, const BoxOracle& oracle, int k, int d) {
  if (d < 1) fail(Errc::invalid_input, "dimension must be positive");
  if (k < 1) fail(Errc::invalid_input, "clique size must be positive");
  if (static_cast<int>(root.size()) != 2 * d + 1)
    fail(Errc::invalid_input, "root must hold exactly 2d+1 boxes");
  for (const Box& b : root)
    if (static_cast<int>(b.sides.size()) != d)
      fail(Errc::invalid_input, "root box dimension mismatch");
  for (std::size_t i = 0; i < root.size(); ++i)
    for (std::size_t j = i + 1; j < root.size(); ++j)
      if (!intersect(root[i], root[j]))
        fail(Errc::invalid_input, "root boxes " + std::to_string(i) + " and " + std::to_string(j) +
                                      " are disjoint");

  Box common = fold_boxes(root, "root clique");  // nonempty: pairwise + interval reasoning per axis
  std::vector<Box> all = root;
  std::vector<Box> work = root;
  drop_redundant(work, common);

  const int rounds = std::max(0, k - 2 * d - 1);
  for (int round = 1; round <= rounds; ++round) {
    Box v = oracle.extend(work, round);
    if (static_cast<int>(v.sides.size()) != d)
      fail(Errc::oracle_violation, "oracle '" + oracle.name + "' returned a box of the wrong dimension");
    for (std::size_t i = 0; i < work.size(); ++i)
      if (!intersect(v, work[i]))
        fail(Errc::oracle_violation, "oracle '" + oracle.name + "' extension misses working box " +
                                         std::to_string(i));
    auto c = intersect(common, v);
    if (!c) fail(Errc::internal, "extension misses the common intersection");
    common = *c;
    all.push_back(v);
    work.push_back(v);
    drop_redundant(work, common);
  }

  BoxClique out;
  out.boxes.assign(all.begin(), all.begin() + k);
  out.point = center(common);
  out.rounds = rounds;
  for (std::size_t i = 0; i < out.boxes.size(); ++i)
    if (!contains(out.boxes[i], out.point))
      fail(Errc::internal, "clique point not interior to box " + std::to_string(i));
  return out;
}

HellyResult helly_point(const std::vector<Rect>& rects) {
  if (rects.empty()) fail(Errc::invalid_input, "needs at least one rectangle");
  for (int i = 0; i < static_cast<int>(rects.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(rects.size()); ++j)
      if (!intersect(rects[i], rects[j])) return {std::nullopt, std::pair{i, j}};
  auto common = fold_intersection(rects);
  if (!common)
    fail(Errc::internal, "pairwise-intersecting rectangles with empty common intersection");
  return {center(*common), std::nullopt};
}

std::vector<Rect> paths_to_rects(const Decomposition& p1, const Decomposition& p2, const Graph& g) {
  if (p1.kind != DecompKind::path || p2.kind != DecompKind::path)
    fail(Errc::invalid_input, "both decompositions must be paths");
  if (auto v = validate(p1, g))
    fail(Errc::validation, "first path decomposition invalid: " + v->axiom + " (" + v->witness + ")");
  if (auto v = validate(p2, g))
    fail(Errc::validation, "second path decomposition invalid: " + v->axiom + " (" + v->witness + ")");
  auto span = [](const Decomposition& p, int v) {
    int first = -1, last = -1;
    for (int i = 0; i < static_cast<int>(p.bags.size()); ++i)
      if (bag_contains(p.bags[i], v)) {
        if (first < 0) first = i;
        last = i;
      }
    return std::pair{first, last};
  };
  const Rat half(1, 2);
  std::vector<Rect> out;
  out.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto [a, b] = span(p1, v);
    auto [c, d] = span(p2, v);
    out.push_back(make_rect(Rat(a) - half, Rat(b) + half, Rat(c) - half, Rat(d) + half));
  }
  return out;
}

std::pair<Decomposition, Decomposition> rects_to_paths(const std::vector<Rect>& rects) {
  auto sweep = [&](bool along_x) {
    std::vector<Rat> cuts;
    for (const Rect& r : rects) {
      cuts.push_back(along_x ? r.x1 : r.y1);
      cuts.push_back(along_x ? r.x2 : r.y2);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    Decomposition p;
    p.kind = DecompKind::path;
    for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
      std::vector<int> bag;
      for (int i = 0; i < static_cast<int>(rects.size()); ++i) {
        const Rat& lo = along_x ? rects[i].x1 : rects[i].y1;
        const Rat& hi = along_x ? rects[i].x2 : rects[i].y2;
        if (lo <= cuts[j] && cuts[j + 1] <= hi) bag.push_back(i);
      }
      p.bags.push_back(std::move(bag));
    }
    return p;
  };
  return {sweep(true), sweep(false)};
}

Graph rect_intersection_graph(const std::vector<Rect>& rects) {
  std::vector<Edge> edges;
  const int n = static_cast<int>(rects.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (intersect(rects[i], rects[j])) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

RectOracle make_random_rect_oracle(unsigned seed) {
  struct State {
    std::mt19937 rng;
    std::set<Rat> used;
  };
  auto st = std::make_shared<State>();
  st->rng.seed(seed);
  RectOracle o;
  o.name = "random(" + std::to_string(seed) + ")";
  o.children = [st](const Rect& a, const Rect& b, int count) {
    Rect q = require_intersect(a, b, "child request");
    for (const Rect* r : {&a, &b})
      for (const Rat& c : {r->x1, r->x2, r->y1, r->y2}) st->used.insert(c);
    const Rat one(1);
    Rat wx = q.x2 - q.x1 + one;
    Rat wy = q.y2 - q.y1 + one;
    std::vector<Rect> out;
    out.reserve(count);
    for (int j = 0; j < count; ++j) {
      Rat px = sample_fresh(q.x1, q.x2, st->rng, &st->used);
      Rat py = sample_fresh(q.y1, q.y2, st->rng, &st->used);
      Rat x1 = sample_fresh(px - wx, px, st->rng, &st->used);
      Rat x2 = sample_fresh(px, px + wx, st->rng, &st->used);
      Rat y1 = sample_fresh(py - wy, py, st->rng, &st->used);
      Rat y2 = sample_fresh(py, py + wy, st->rng, &st->used);
      out.push_back(make_rect(x1, x2, y1, y2));
    }
    return out;
  };
  return o;
}

RectOracle make_stall_oracle(Orientation o) {
  struct State {
    Rat low{0};
  };
  auto st = std::make_shared<State>();
  const bool horizontal = o == Orientation::h;
  RectOracle out;
  out.name = horizontal ? "stall-h" : "stall-v";
  out.children = [st, horizontal](const Rect& pa, const Rect& pb, int count) {
    Rect a = horizontal ? pa : transposed(pa);
    Rect b = horizontal ? pb : transposed(pb);
    Rect q = require_intersect(a, b, "child request");
    st->low = std::min({st->low, a.x1, b.x1});
    Rat w = q.x2 - q.x1;
    Rat h = q.y2 - q.y1;
    std::vector<Rect> kids;
    kids.reserve(count);
    for (int j = 0; j < count; ++j) {
      st->low = st->low - Rat(1);
      Rat x2 = q.x1 + w * Rat(j + 2, 2 * count + 4);
      Rat y1 = q.y1 + h * Rat(j + 1, 2 * count + 4);
      Rat y2 = q.y2 - h * Rat(j + 1, 2 * count + 4);
      Rect kid = make_rect(st->low, x2, y1, y2);
      kids.push_back(horizontal ? kid : transposed(kid));
    }
    return kids;
  };
  return out;
}

RectOracle make_corner_flood_oracle() {
  RectOracle out;
  out.name = "corner-flood";
  out.children = [](const Rect& a, const Rect& b, int count) {
    Rect q = require_intersect(a, b, "child request");
    std::vector<Rect> kids;
    kids.reserve(count);
    for (int j = 0; j < count; ++j) {
      Rat reach = Rat(1) + Rat(1, j + 2);
      Rat ix = q.x1 + (q.x2 - q.x1) * Rat(1, j + 3);
      Rat iy = q.y1 + (q.y2 - q.y1) * Rat(1, j + 3);
      kids.push_back(make_rect(q.x1 - reach, ix, q.y1 - reach, iy));
    }
    return kids;
  };
  return out;
}

RectOracle make_scripted_rect_oracle(std::vector<std::vector<Rect>> levels) {
  struct State {
    std::vector<std::vector<Rect>> levels;
    std::size_t next = 0;
  };
  auto st = std::make_shared<State>();
  st->levels = std::move(levels);
  RectOracle out;
  out.name = "scripted";
  out.children = [st](const Rect&, const Rect&, int) -> std::vector<Rect> {
    if (st->next >= st->levels.size()) return {};
    return st->levels[st->next++];
  };
  return out;
}

BoxOracle make_random_box_oracle(unsigned seed, int d) {
  struct State {
    std::mt19937 rng;
  };
  auto st = std::make_shared<State>();
  st->rng.seed(seed);
  BoxOracle o;
  o.name = "random(" + std::to_string(seed) + ")";
  o.extend = [st, d](const std::vector<Box>& clique, int) -> Box {
    if (clique.empty()) fail(Errc::internal, "extension request without a working clique");
    Box common = fold_boxes(clique, "extension request");
    if (static_cast<int>(common.sides.size()) != d)
      fail(Errc::internal, "extension request dimension mismatch");
    std::vector<std::array<Rat, 2>> sides;
    sides.reserve(d);
    for (int j = 0; j < d; ++j) {
      const auto& s = common.sides[j];
      Rat p = sample_fresh(s[0], s[1], st->rng, nullptr);
      Rat w = s[1] - s[0] + Rat(1);
      Rat lo = sample_fresh(p - w, p, st->rng, nullptr);
      Rat hi = sample_fresh(p, p + w, st->rng, nullptr);
      sides.push_back({lo, hi});
    }
    return make_box(std::move(sides));
  };
  return o;
}

BoxOracle make_scripted_box_oracle(std::vector<Box> boxes) {
  struct State {
    std::vector<Box> boxes;
    std::size_t next = 0;
  };
  auto st = std::make_shared<State>();
  st->boxes = std::move(boxes);
  BoxOracle o;
  o.name = "scripted";
  o.extend = [st](const std::vector<Box>&, int) -> Box {
    if (st->next >= st->boxes.size())
      fail(Errc::exhausted, "scripted box oracle has no more boxes");
    return st->boxes[st->next++];
  };
  return o;
}

}  // namespace otd
