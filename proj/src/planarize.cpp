#include "planarize.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <random>
#include <utility>

#include "errors.hpp"
#include "oracles.hpp"

namespace otd {

namespace {

void require_valid(const Decomposition& d, const Graph& g, const char* what) {
  if (auto v = validate(d, g))
    fail(Errc::validation, std::string(what) + " is invalid: " + v->axiom + ": " + v->witness);
}

// id -> the two (owner index, position) occurrences, in owner order.
using Occurrences = std::map<std::string, std::vector<std::array<int, 2>>>;

Occurrences collect_occurrences(const std::vector<std::vector<std::string>>& sequences) {
  Occurrences occ;
  for (std::size_t i = 0; i < sequences.size(); ++i)
    for (std::size_t j = 0; j < sequences[i].size(); ++j)
      occ[sequences[i][j]].push_back({static_cast<int>(i), static_cast<int>(j)});
  return occ;
}

void check_two_distinct_owners(const Occurrences& occ, const char* owner_kind) {
  for (const auto& [id, where] : occ) {
    if (where.size() != 2)
      fail(Errc::invalid_input, "crossing id \"" + id + "\" appears " +
                                    std::to_string(where.size()) + " times; it must appear " +
                                    "exactly twice");
    if (where[0][0] == where[1][0])
      fail(Errc::invalid_input, "crossing id \"" + id + "\" appears twice on the same " +
                                    owner_kind + " " + std::to_string(where[0][0]));
  }
}

std::vector<std::vector<std::string>> drawn_sequences(const Drawing& d) {
  std::vector<std::vector<std::string>> seq;
  seq.reserve(d.edges.size());
  for (const auto& e : d.edges) seq.push_back(e.crossings);
  return seq;
}

Planarization planarization_from(const std::vector<std::vector<std::string>>& sequences,
                                 int original_count, const std::vector<std::string>& base_labels,
                                 const std::vector<std::array<int, 2>>& sequence_ends) {
  auto occ = collect_occurrences(sequences);
  Planarization p;
  p.original_count = original_count;
  p.crossing_ids.reserve(occ.size());
  p.owners.reserve(occ.size());
  p.positions.reserve(occ.size());
  std::map<std::string, int> vertex_of;
  for (const auto& [id, where] : occ) {  // std::map iterates ids in ascending order
    vertex_of[id] = original_count + static_cast<int>(p.crossing_ids.size());
    p.crossing_ids.push_back(id);
    p.owners.push_back({where[0][0], where[1][0]});
    p.positions.push_back({where[0][1], where[1][1]});
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < sequences.size(); ++i) {
    const auto& s = sequences[i];
    std::vector<int> chain;
    if (!sequence_ends.empty() && sequence_ends[i][0] >= 0) chain.push_back(sequence_ends[i][0]);
    for (const auto& id : s) chain.push_back(vertex_of.at(id));
    if (!sequence_ends.empty() && sequence_ends[i][1] >= 0) chain.push_back(sequence_ends[i][1]);
    for (std::size_t j = 0; j + 1 < chain.size(); ++j)
      edges.push_back({chain[j], chain[j + 1]});
  }
  std::vector<std::string> labels = base_labels;
  labels.insert(labels.end(), p.crossing_ids.begin(), p.crossing_ids.end());
  p.gprime = Graph(original_count + static_cast<int>(p.crossing_ids.size()), std::move(edges),
                   std::move(labels));
  return p;
}

}  // namespace

void validate_arrangement(const CurveArrangement& a) {
  if (a.genus < 0) fail(Errc::invalid_input, "genus must be nonnegative");
  if (a.per_curve_cap && *a.per_curve_cap < 0)
    fail(Errc::invalid_input, "per-curve cap must be nonnegative");
  for (std::size_t i = 0; i < a.curves.size(); ++i)
    if (a.per_curve_cap && static_cast<int>(a.curves[i].size()) > *a.per_curve_cap)
      fail(Errc::cap_exceeded, "curve " + std::to_string(i) + " has " +
                                   std::to_string(a.curves[i].size()) +
                                   " crossings, above the configured cap of " +
                                   std::to_string(*a.per_curve_cap));
  check_two_distinct_owners(collect_occurrences(a.curves), "curve");
}

void validate_drawing(const Drawing& d) {
  if (d.genus < 0) fail(Errc::invalid_input, "genus must be nonnegative");
  if (d.edges.size() != static_cast<std::size_t>(d.graph.edge_count()))
    fail(Errc::invalid_input, "drawing lists " + std::to_string(d.edges.size()) +
                                  " directed edges for a graph with " +
                                  std::to_string(d.graph.edge_count()) + " edges");
  std::map<Edge, int> seen;
  for (const auto& e : d.edges) {
    int n = d.graph.vertex_count();
    if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n || e.tail == e.head)
      fail(Errc::invalid_input, "directed edge (" + std::to_string(e.tail) + "," +
                                    std::to_string(e.head) + ") is not a valid vertex pair");
    Edge key{std::min(e.tail, e.head), std::max(e.tail, e.head)};
    if (!d.graph.has_edge(key.first, key.second))
      fail(Errc::invalid_input, "directed edge (" + std::to_string(e.tail) + "," +
                                    std::to_string(e.head) + ") is not a graph edge");
    if (++seen[key] > 1)
      fail(Errc::invalid_input, "edge {" + std::to_string(key.first) + "," +
                                    std::to_string(key.second) + "} is drawn twice");
  }
  check_two_distinct_owners(collect_occurrences(drawn_sequences(d)), "edge");
}

int Planarization::crossing_vertex(const std::string& id) const {
  auto it = std::lower_bound(crossing_ids.begin(), crossing_ids.end(), id);
  if (it == crossing_ids.end() || *it != id)
    fail(Errc::invalid_input, "unknown crossing id \"" + id + "\"");
  return original_count + static_cast<int>(it - crossing_ids.begin());
}

Graph string_graph(const CurveArrangement& a) {
  validate_arrangement(a);
  auto occ = collect_occurrences(a.curves);
  std::vector<Edge> edges;
  for (const auto& [id, where] : occ) edges.push_back({where[0][0], where[1][0]});
  for (auto& [u, v] : edges)
    if (u > v) std::swap(u, v);
  return Graph(static_cast<int>(a.curves.size()), std::move(edges));
}

Planarization planarize(const CurveArrangement& a) {
  validate_arrangement(a);
  return planarization_from(a.curves, 0, {}, {});
}

Planarization planarize(const Drawing& d) {
  validate_drawing(d);
  int n = d.graph.vertex_count();
  std::vector<std::string> labels = d.graph.labels();
  if (labels.empty())
    for (int v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  std::vector<std::array<int, 2>> ends;
  ends.reserve(d.edges.size());
  for (const auto& e : d.edges) ends.push_back({e.tail, e.head});
  return planarization_from(drawn_sequences(d), n, labels, ends);
}

namespace {

std::vector<int> lift_bag(const std::vector<int>& bag,
                          const std::vector<std::vector<int>>& replacement) {
  std::vector<int> out;
  out.reserve(bag.size() * 2);
  for (int x : bag) out.insert(out.end(), replacement[x].begin(), replacement[x].end());
  std::sort(out.begin(), out.end());
  return out;
}

// Replace every planarization vertex occurrence in every bag, keeping the
// tree structure (or bag order) intact.
Decomposition lift_decomposition(const Decomposition& d, DecompKind out_kind,
                                 const std::vector<std::vector<int>>& replacement) {
  Decomposition out;
  out.kind = out_kind;
  if (out_kind == DecompKind::tree) out.tree_edges = d.tree_edges;
  out.bags.reserve(d.bags.size());
  for (const auto& b : d.bags) out.bags.push_back(lift_bag(b, replacement));
  return out;
}

// Adds each listed vertex once to bag 0, creating the bag when there is none.
void add_to_first_bag(Decomposition& d, const std::vector<int>& vs) {
  if (vs.empty()) return;
  if (d.bags.empty()) d.bags.push_back({});
  auto& b = d.bags[0];
  b.insert(b.end(), vs.begin(), vs.end());
  std::sort(b.begin(), b.end());
}

// Gives each listed vertex a fresh singleton bag attached to node 0, so the
// additions never enlarge any intersection with existing bags.
void add_singleton_bags(Decomposition& d, const std::vector<int>& vs) {
  for (int v : vs) {
    d.bags.push_back({v});
    int node = static_cast<int>(d.bags.size()) - 1;
    if (node > 0) d.tree_edges.push_back({node, 0});
  }
}

struct StringLiftInput {
  Planarization p;
  Graph sg;
  std::vector<std::vector<int>> replacement;  // crossing vertex -> its two curves
  std::vector<int> isolated;                  // curves with no crossings
};

StringLiftInput prepare_string_lift(const CurveArrangement& a, const Decomposition& tprime,
                                    const Decomposition& lprime) {
  if (tprime.kind != DecompKind::tree)
    fail(Errc::invalid_input, "lifting needs a tree decomposition of the planarized graph");
  if (lprime.kind != DecompKind::layering)
    fail(Errc::invalid_input, "lifting needs a layering of the planarized graph");
  StringLiftInput in;
  in.p = planarize(a);
  in.sg = string_graph(a);
  require_valid(tprime, in.p.gprime, "tree decomposition of the planarized graph");
  require_valid(lprime, in.p.gprime, "layering of the planarized graph");
  in.replacement.resize(in.p.gprime.vertex_count());
  for (int x = 0; x < in.p.gprime.vertex_count(); ++x)
    in.replacement[x] = {in.p.owners[x][0], in.p.owners[x][1]};
  for (std::size_t c = 0; c < a.curves.size(); ++c)
    if (a.curves[c].empty()) in.isolated.push_back(static_cast<int>(c));
  return in;
}

}  // namespace

LiftPair lift_string_layered(const CurveArrangement& a, const Decomposition& tprime,
                             const Decomposition& lprime, int k) {
  if (k < 2) fail(Errc::invalid_input, "layer grouping needs k >= 2");
  auto in = prepare_string_lift(a, tprime, lprime);
  for (std::size_t c = 0; c < a.curves.size(); ++c)
    if (static_cast<int>(a.curves[c].size()) > k)
      fail(Errc::cap_exceeded, "curve " + std::to_string(c) + " has " +
                                   std::to_string(a.curves[c].size()) +
                                   " crossings, above the cap of " + std::to_string(k));

  LiftPair out;
  out.tree = lift_decomposition(tprime, DecompKind::tree, in.replacement);
  add_singleton_bags(out.tree, in.isolated);

  std::vector<int> layer_of(in.p.gprime.vertex_count(), 0);
  for (std::size_t i = 0; i < lprime.bags.size(); ++i)
    for (int x : lprime.bags[i]) layer_of[x] = static_cast<int>(i);
  int curves = static_cast<int>(a.curves.size());
  std::vector<int> first_layer(curves, 0);
  std::vector<bool> touched(curves, false);
  for (int x = 0; x < in.p.gprime.vertex_count(); ++x)
    for (int c : in.replacement[x]) {
      if (!touched[c] || layer_of[x] < first_layer[c]) first_layer[c] = layer_of[x];
      touched[c] = true;
    }

  out.second.kind = DecompKind::layering;
  int group_size = k - 1;
  int groups = 0;
  for (int c = 0; c < curves; ++c) groups = std::max(groups, first_layer[c] / group_size + 1);
  out.second.bags.resize(groups);
  for (int c = 0; c < curves; ++c) out.second.bags[first_layer[c] / group_size].push_back(c);
  return out;
}

LiftPair lift_string_path(const CurveArrangement& a, const Decomposition& tprime,
                          const Decomposition& lprime) {
  auto in = prepare_string_lift(a, tprime, lprime);
  LiftPair out;
  out.tree = lift_decomposition(tprime, DecompKind::tree, in.replacement);
  out.second = lift_decomposition(lprime, DecompKind::path, in.replacement);
  add_singleton_bags(out.tree, in.isolated);
  add_to_first_bag(out.second, in.isolated);
  return out;
}

LiftPair lift_drawing(const Drawing& d, const Decomposition& tprime, const Decomposition& lprime) {
  if (tprime.kind != DecompKind::tree)
    fail(Errc::invalid_input, "lifting needs a tree decomposition of the planarized graph");
  if (lprime.kind != DecompKind::layering)
    fail(Errc::invalid_input, "lifting needs a layering of the planarized graph");
  Planarization p = planarize(d);
  require_valid(tprime, p.gprime, "tree decomposition of the planarized graph");
  require_valid(lprime, p.gprime, "layering of the planarized graph");

  int n = d.graph.vertex_count();
  std::vector<std::vector<int>> replacement(p.gprime.vertex_count());
  for (int v = 0; v < n; ++v) replacement[v] = {v};
  for (std::size_t r = 0; r < p.crossing_ids.size(); ++r) {
    // A crossing is replaced by the tails of the two directed edges it
    // lies on; these coincide when the edges leave a shared endpoint, and
    // the occurrence is then kept twice.
    int t0 = d.edges[p.owners[r][0]].tail;
    int t1 = d.edges[p.owners[r][1]].tail;
    replacement[n + static_cast<int>(r)] = {t0, t1};
  }
  LiftPair out;
  out.tree = lift_decomposition(tprime, DecompKind::tree, replacement);
  out.second = lift_decomposition(lprime, DecompKind::weak_path, replacement);
  return out;
}

namespace {

using Words = std::vector<std::uint64_t>;

int count_and(const Words& a, const Words& b) {
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

template <typename F>
void for_each_bit(const Words& w, F&& f) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::uint64_t rest = w[i]; rest;) {
      int b = std::countr_zero(rest);
      rest &= rest - 1;
      f(static_cast<int>(i) * 64 + b);
    }
}

// Tree decomposition from a greedy minimum-fill elimination order; ties are
// broken uniformly at random with the given seed.
Decomposition min_fill_decomposition(const Graph& g, unsigned seed) {
  int n = g.vertex_count();
  Decomposition out;
  out.kind = DecompKind::tree;
  if (n == 0) {
    out.bags = {{}};
    return out;
  }
  int nw = (n + 63) / 64;
  std::vector<Words> adj(n, Words(nw, 0));
  auto set_bit = [](Words& w, int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); };
  auto clear_bit = [](Words& w, int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); };
  for (auto [u, v] : g.edges()) {
    set_bit(adj[u], v);
    set_bit(adj[v], u);
  }
  Words alive(nw, 0);
  for (int v = 0; v < n; ++v) set_bit(alive, v);
  std::mt19937 rng(seed);
  std::vector<int> order(n), pos(n);
  out.bags.resize(n);
  for (int step = 0; step < n; ++step) {
    long long best = -1;
    std::vector<int> candidates;
    for_each_bit(alive, [&](int v) {
      Words nbrs(nw);
      for (int i = 0; i < nw; ++i) nbrs[i] = adj[v][i] & alive[i];
      long long deg = 0;
      long long adjacent_pairs = 0;
      for_each_bit(nbrs, [&](int u) {
        ++deg;
        adjacent_pairs += count_and(adj[u], nbrs);
      });
      long long fill = deg * (deg - 1) / 2 - adjacent_pairs / 2;
      if (best < 0 || fill < best) {
        best = fill;
        candidates.clear();
      }
      if (fill == best) candidates.push_back(v);
    });
    int v = candidates[rng() % candidates.size()];
    Words nbrs(nw);
    for (int i = 0; i < nw; ++i) nbrs[i] = adj[v][i] & alive[i];
    std::vector<int> bag = {v};
    for_each_bit(nbrs, [&](int u) {
      bag.push_back(u);
      for (int i = 0; i < nw; ++i) adj[u][i] |= nbrs[i];
      clear_bit(adj[u], u);
    });
    std::sort(bag.begin(), bag.end());
    out.bags[step] = std::move(bag);
    order[step] = v;
    pos[v] = step;
    clear_bit(alive, v);
  }
  for (int i = 0; i < n; ++i) {
    int parent = -1;
    for (int u : out.bags[i])
      if (u != order[i] && (parent < 0 || pos[u] < pos[parent])) parent = u;
    if (parent >= 0)
      out.tree_edges.push_back({i, pos[parent]});
    else if (i + 1 < n)
      out.tree_edges.push_back({i, i + 1});
  }
  return out;
}

}  // namespace

BasePair base_decomposition(const Graph& gp, BaseMode mode, int root, int exact_cap,
                            unsigned seed) {
  BasePair out;
  if (gp.vertex_count() == 0) {
    out.tree.kind = DecompKind::tree;
    out.tree.bags = {{}};
    out.layering.kind = DecompKind::layering;
    return out;
  }
  out.tree = mode == BaseMode::exact ? exact_treewidth(gp, exact_cap).witness
                                     : min_fill_decomposition(gp, seed);
  out.layering = bfs_layering(gp, root);
  return out;
}

Rat crossing_lower_bound(std::int64_t tw, std::int64_t n) {
  if (tw < 0 || n < 0) fail(Errc::invalid_input, "arguments must be nonnegative");
  Rat bound = Rat(tw + 1) * Rat(tw + 1, 48) - Rat(n, 2);
  return bound < Rat(0) ? Rat(0) : bound;
}

}  // namespace otd
