#include "decomp.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>

#include "errors.hpp"

namespace otd {

std::string decomp_kind_name(DecompKind k) {
  switch (k) {
    case DecompKind::tree: return "tree";
    case DecompKind::path: return "path";
    case DecompKind::weak_path: return "weakpath";
    case DecompKind::layering: return "layering";
  }
  fail(Errc::internal, "unknown decomposition kind");
}

DecompKind decomp_kind_from_name(const std::string& name) {
  if (name == "tree") return DecompKind::tree;
  if (name == "path") return DecompKind::path;
  if (name == "weakpath") return DecompKind::weak_path;
  if (name == "layering") return DecompKind::layering;
  fail(Errc::invalid_input, "unknown decomposition kind: " + name);
}

void normalize(Decomposition& d) {
  for (auto& b : d.bags) std::sort(b.begin(), b.end());
}

int distinct_size(const std::vector<int>& sorted_bag) {
  int c = 0;
  for (std::size_t i = 0; i < sorted_bag.size(); ++i)
    if (i == 0 || sorted_bag[i] != sorted_bag[i - 1]) ++c;
  return c;
}

bool bag_contains(const std::vector<int>& sorted_bag, int v) {
  return std::binary_search(sorted_bag.begin(), sorted_bag.end(), v);
}

std::vector<int> vertex_universe(const Decomposition& d) {
  std::vector<int> u;
  for (const auto& b : d.bags) u.insert(u.end(), b.begin(), b.end());
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  return u;
}

namespace {

void check_bag_range(const Decomposition& d, const Graph& g) {
  for (const auto& b : d.bags)
    for (int v : b)
      if (v < 0 || v >= g.vertex_count())
        fail(Errc::invalid_input, "bag vertex out of range");
}

// Adjacency of the decomposition tree (or implicit path) over node ids.
std::vector<std::vector<int>> node_adjacency(const Decomposition& d) {
  int b = static_cast<int>(d.bags.size());
  std::vector<std::vector<int>> adj(b);
  if (d.kind == DecompKind::tree) {
    for (auto [x, y] : d.tree_edges) {
      adj[x].push_back(y);
      adj[y].push_back(x);
    }
  } else {
    for (int i = 0; i + 1 < b; ++i) {
      adj[i].push_back(i + 1);
      adj[i + 1].push_back(i);
    }
  }
  return adj;
}

std::optional<Violation> check_tree_structure(const Decomposition& d) {
  int b = static_cast<int>(d.bags.size());
  for (auto [x, y] : d.tree_edges) {
    if (x < 0 || y < 0 || x >= b || y >= b)
      return Violation{"tree-structure", "edge endpoint " + std::to_string(std::max(x, y)) +
                                             " is not a node id"};
    if (x == y) return Violation{"tree-structure", "self-loop at node " + std::to_string(x)};
  }
  if (static_cast<int>(d.tree_edges.size()) != std::max(0, b - 1))
    return Violation{"tree-structure", "tree on " + std::to_string(b) + " nodes needs " +
                                           std::to_string(std::max(0, b - 1)) + " edges, got " +
                                           std::to_string(d.tree_edges.size())};
  if (b == 0) return std::nullopt;
  auto adj = node_adjacency(d);
  std::vector<bool> seen(b, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int reached = 0;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    ++reached;
    for (int y : adj[x])
      if (!seen[y]) {
        seen[y] = true;
        q.push(y);
      }
  }
  if (reached != b) {
    int missing = 0;
    while (seen[missing]) ++missing;
    return Violation{"tree-structure", "node " + std::to_string(missing) + " is disconnected"};
  }
  return std::nullopt;  // connected with b-1 edges implies acyclic
}

std::optional<Violation> check_vertex_coverage(const Decomposition& d, const Graph& g) {
  std::vector<bool> covered(g.vertex_count(), false);
  for (const auto& b : d.bags)
    for (int v : b) covered[v] = true;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!covered[v])
      return Violation{"vertex-coverage", "vertex " + std::to_string(v) + " is in no bag"};
  return std::nullopt;
}

std::optional<Violation> check_connectivity(const Decomposition& d, const Graph& g) {
  // Nodes whose bag contains v must induce a connected, nonempty subtree. For
  // path kinds that means a nonempty consecutive run, which is the same check
  // with the implicit path adjacency.
  auto adj = node_adjacency(d);
  int b = static_cast<int>(d.bags.size());
  std::vector<int> mark(b, -1), queued(b, -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    int first = -1, total = 0;
    for (int x = 0; x < b; ++x)
      if (bag_contains(d.bags[x], v)) {
        mark[x] = v;
        ++total;
        if (first < 0) first = x;
      }
    if (total <= 1) continue;  // nonemptiness is vertex coverage's job
    std::queue<int> q;
    q.push(first);
    queued[first] = v;
    int reached = 0;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      ++reached;
      for (int y : adj[x])
        if (mark[y] == v && queued[y] != v) {
          queued[y] = v;
          q.push(y);
        }
    }
    if (reached != total)
      return Violation{"connectivity",
                       "bags containing vertex " + std::to_string(v) + " are not connected"};
  }
  return std::nullopt;
}

std::optional<Violation> validate_bag_decomposition(const Decomposition& d, const Graph& g) {
  if (d.kind == DecompKind::tree) {
    if (auto v = check_tree_structure(d)) return v;
  }
  if (auto v = check_vertex_coverage(d, g)) return v;
  if (d.kind == DecompKind::weak_path) {
    int b = static_cast<int>(d.bags.size());
    for (auto [u, w] : g.edges()) {
      bool ok = false;
      for (int i = 0; i < b && !ok; ++i) {
        bool u_in = bag_contains(d.bags[i], u) ||
                    (i + 1 < b && bag_contains(d.bags[i + 1], u));
        bool w_in = bag_contains(d.bags[i], w) ||
                    (i + 1 < b && bag_contains(d.bags[i + 1], w));
        ok = u_in && w_in;
      }
      if (!ok)
        return Violation{"edge-coverage", "edge (" + std::to_string(u) + "," + std::to_string(w) +
                                              ") has no covering bag pair"};
    }
  } else {
    for (auto [u, w] : g.edges()) {
      bool ok = false;
      for (const auto& bag : d.bags)
        if (bag_contains(bag, u) && bag_contains(bag, w)) {
          ok = true;
          break;
        }
      if (!ok)
        return Violation{"edge-coverage",
                         "edge (" + std::to_string(u) + "," + std::to_string(w) + ") is in no bag"};
    }
  }
  return check_connectivity(d, g);
}

std::optional<Violation> validate_layering(const Decomposition& d, const Graph& g) {
  if (auto v = check_vertex_coverage(d, g)) return v;
  std::vector<int> layer_of(g.vertex_count(), -1);
  for (std::size_t i = 0; i < d.bags.size(); ++i)
    for (std::size_t j = 0; j < d.bags[i].size(); ++j) {
      int v = d.bags[i][j];
      bool repeat_in_layer = j > 0 && d.bags[i][j - 1] == v;
      if (layer_of[v] >= 0 && (repeat_in_layer || layer_of[v] != static_cast<int>(i)))
        return Violation{"disjointness", "vertex " + std::to_string(v) + " is in layers " +
                                             std::to_string(layer_of[v]) + " and " +
                                             std::to_string(i)};
      layer_of[v] = static_cast<int>(i);
    }
  for (auto [u, w] : g.edges())
    if (std::abs(layer_of[u] - layer_of[w]) > 1)
      return Violation{"edge-locality", "edge (" + std::to_string(u) + "," + std::to_string(w) +
                                            ") joins layers " + std::to_string(layer_of[u]) +
                                            " and " + std::to_string(layer_of[w])};
  return std::nullopt;
}

}  // namespace

std::optional<Violation> validate(const Decomposition& d, const Graph& g) {
  if (d.kind != DecompKind::tree && !d.tree_edges.empty())
    fail(Errc::invalid_input, "tree edges are only meaningful for tree decompositions");
  check_bag_range(d, g);
  for (const auto& b : d.bags)
    if (!std::is_sorted(b.begin(), b.end()))
      fail(Errc::invalid_input, "bag is not sorted");
  if (d.kind == DecompKind::layering) return validate_layering(d, g);
  return validate_bag_decomposition(d, g);
}

int width(const Decomposition& d) {
  if (d.bags.empty()) fail(Errc::invalid_input, "width of an empty bag list");
  int mx = 0;
  for (const auto& b : d.bags) mx = std::max(mx, distinct_size(b));
  return mx - 1;
}

std::int64_t magnitude(const Decomposition& d) {
  std::int64_t s = 0;
  for (const auto& b : d.bags) s += static_cast<std::int64_t>(b.size());
  return s;
}

namespace {
int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t i = 0, j = 0;
  int c = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++c;
      int v = a[i];
      while (i < a.size() && a[i] == v) ++i;
      while (j < b.size() && b[j] == v) ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return c;
}
}  // namespace

int orthogonality(const Decomposition& a, const Decomposition& b) {
  if (vertex_universe(a) != vertex_universe(b))
    fail(Errc::invalid_input, "decompositions cover different vertex sets");
  int mx = 0;
  for (const auto& x : a.bags)
    for (const auto& y : b.bags) mx = std::max(mx, intersection_size(x, y));
  return mx;
}

int layered_width(const Decomposition& d, const Decomposition& layering) {
  if (layering.kind != DecompKind::layering)
    fail(Errc::invalid_input, "layered width needs a layering as second argument");
  if (vertex_universe(d) != vertex_universe(layering))
    fail(Errc::invalid_input, "decomposition and layering cover different vertex sets");
  int mx = 0;
  for (const auto& bag : d.bags)
    for (const auto& layer : layering.bags) mx = std::max(mx, intersection_size(bag, layer));
  return mx;
}

bool is_domino(const Decomposition& d) {
  std::vector<std::pair<int, int>> occ;  // (vertex, bag)
  for (std::size_t i = 0; i < d.bags.size(); ++i)
    for (std::size_t j = 0; j < d.bags[i].size(); ++j)
      if (j == 0 || d.bags[i][j] != d.bags[i][j - 1])
        occ.push_back({d.bags[i][j], static_cast<int>(i)});
  std::sort(occ.begin(), occ.end());
  int run = 0;
  for (std::size_t i = 0; i < occ.size(); ++i) {
    run = (i > 0 && occ[i].first == occ[i - 1].first) ? run + 1 : 1;
    if (run > 2) return false;
  }
  return true;
}

Decomposition restrict_to(const Decomposition& d, const std::vector<int>& s) {
  std::vector<int> keep = s;
  std::sort(keep.begin(), keep.end());
  Decomposition out;
  out.kind = d.kind;
  out.tree_edges = d.tree_edges;
  out.bags.reserve(d.bags.size());
  for (const auto& b : d.bags) {
    std::vector<int> nb;
    for (int v : b)
      if (std::binary_search(keep.begin(), keep.end(), v)) nb.push_back(v);
    out.bags.push_back(std::move(nb));
  }
  return out;
}

Decomposition weak_to_path(const Decomposition& p) {
  Decomposition out;
  out.kind = DecompKind::path;
  if (p.bags.size() <= 1) {
    out.bags = p.bags;
    return out;
  }
  for (std::size_t i = 0; i + 1 < p.bags.size(); ++i) {
    std::vector<int> u;
    std::set_union(p.bags[i].begin(), p.bags[i].end(), p.bags[i + 1].begin(), p.bags[i + 1].end(),
                   std::back_inserter(u));
    u.erase(std::unique(u.begin(), u.end()), u.end());
    out.bags.push_back(std::move(u));
  }
  return out;
}

namespace {
// Appends distance layers of the component of `root`, using only vertices not
// yet assigned; marks them assigned.
void append_bfs_layers(const Graph& g, int root, std::vector<bool>& assigned,
                       std::vector<std::vector<int>>& layers) {
  std::vector<int> frontier = {root};
  assigned[root] = true;
  while (!frontier.empty()) {
    layers.push_back(frontier);
    std::vector<int> next;
    for (int v : frontier)
      for (int w : g.neighbors(v))
        if (!assigned[w]) {
          assigned[w] = true;
          next.push_back(w);
        }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
}
}  // namespace

Decomposition bfs_layering(const Graph& g, int root) {
  if (root < 0 || root >= g.vertex_count()) fail(Errc::invalid_input, "root out of range");
  Decomposition out;
  out.kind = DecompKind::layering;
  std::vector<bool> assigned(g.vertex_count(), false);
  append_bfs_layers(g, root, assigned, out.bags);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!assigned[v]) {
      out.bags.push_back({});  // separates consecutive components
      append_bfs_layers(g, v, assigned, out.bags);
    }
  return out;
}

}  // namespace otd
