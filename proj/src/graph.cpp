#include "graph.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "errors.hpp"

namespace otd {

Graph::Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels) : n_(n) {
  if (n < 0) fail(Errc::invalid_input, "negative vertex count");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    fail(Errc::invalid_input, "label list does not match vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      fail(Errc::invalid_input, "edge endpoint out of range");
    if (u == v) fail(Errc::invalid_input, "self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  labels_ = std::move(labels);
  adj_.assign(n_, {});
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::vector<std::vector<int>> components(const Graph& g, const std::vector<bool>& excluded) {
  int n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (seen[s] || (s < static_cast<int>(excluded.size()) && excluded[s])) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int w : g.neighbors(v)) {
        if (seen[w] || (w < static_cast<int>(excluded.size()) && excluded[w])) continue;
        seen[w] = true;
        q.push(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> vs = vertices;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<int> pos(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] < 0 || vs[i] >= g.vertex_count())
      fail(Errc::invalid_input, "induced subgraph vertex out of range");
    pos[vs[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (pos[u] >= 0 && pos[v] >= 0) edges.push_back({pos[u], pos[v]});
  return {Graph(static_cast<int>(vs.size()), std::move(edges)), vs};
}

bool has_triangle(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    const auto& a = g.neighbors(u);
    const auto& b = g.neighbors(v);
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return true;
      if (a[i] < b[j]) ++i;
      else ++j;
    }
  }
  return false;
}

Graph gen_grid(int n) {
  if (n < 1) fail(Errc::invalid_input, "grid size must be positive");
  std::vector<Edge> edges;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      int v = r * n + c;
      if (c + 1 < n) edges.push_back({v, v + 1});
      if (r + 1 < n) edges.push_back({v, v + n});
    }
  return Graph(n * n, std::move(edges));
}

Graph gen_complete_bipartite(int n) {
  if (n < 1) fail(Errc::invalid_input, "part size must be positive");
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i) labels.push_back("w" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) edges.push_back({i, n + j});
  return Graph(2 * n, std::move(edges), std::move(labels));
}

Graph gen_complete_tripartite(int n) {
  if (n < 1) fail(Errc::invalid_input, "part size must be positive");
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  const char* part = "abc";
  for (int p = 0; p < 3; ++p)
    for (int i = 0; i < n; ++i) labels.push_back(std::string(1, part[p]) + std::to_string(i + 1));
  for (int p = 0; p < 3; ++p)
    for (int q = p + 1; q < 3; ++q)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) edges.push_back({p * n + i, q * n + j});
  return Graph(3 * n, std::move(edges), std::move(labels));
}

Graph gen_subdivided_knn(int n) {
  if (n < 1) fail(Errc::invalid_input, "part size must be positive");
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));
  for (int j = 1; j <= n; ++j) labels.push_back("w" + std::to_string(j));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      labels.push_back("x" + std::to_string(i) + "," + std::to_string(j));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int x = 2 * n + (i - 1) * n + (j - 1);
      edges.push_back({i - 1, x});
      edges.push_back({n + j - 1, x});
    }
  return Graph(n * n + 2 * n, std::move(edges), std::move(labels));
}

Graph add_dominant_vertex(const Graph& g) {
  int n = g.vertex_count();
  std::vector<Edge> edges = g.edges();
  for (int v = 0; v < n; ++v) edges.push_back({v, n});
  std::vector<std::string> labels = g.labels();
  if (!labels.empty()) labels.push_back("dominant");
  return Graph(n + 1, std::move(edges), std::move(labels));
}

Graph gen_shift_graph(int n) {
  if (n < 2) fail(Errc::invalid_input, "shift graph needs n >= 2");
  std::vector<std::vector<int>> id(n + 1, std::vector<int>(n + 1, -1));
  std::vector<std::string> labels;
  int next = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      id[i][j] = next++;
      labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int l = j + 1; l <= n; ++l) edges.push_back({id[i][j], id[j][l]});
  return Graph(next, std::move(edges), std::move(labels));
}

Graph line_graph(const Graph& g) {
  const auto& ge = g.edges();
  int m = static_cast<int>(ge.size());
  std::vector<std::string> labels;
  labels.reserve(m);
  for (auto [u, v] : ge)
    labels.push_back("(" + std::to_string(u) + "," + std::to_string(v) + ")");
  std::vector<std::vector<int>> incident(g.vertex_count());
  for (int e = 0; e < m; ++e) {
    incident[ge[e].first].push_back(e);
    incident[ge[e].second].push_back(e);
  }
  std::vector<Edge> edges;
  for (const auto& inc : incident)
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j) edges.push_back({inc[i], inc[j]});
  return Graph(m, std::move(edges), std::move(labels));
}

Graph gen_line_grid(int q, int r) {
  if (q < 1 || r < 1) fail(Errc::invalid_input, "line grid needs q >= 1 and r >= 1");
  // Subdivide every edge of the (q+1)x(q+1) grid r times, join a fresh vertex
  // inside each unit face to the 4r subdivision vertices on its boundary, then
  // drop the grid paths entirely; only face-to-subdivision edges remain.
  int h_edges = (q + 1) * q;           // horizontal: (a,b)-(a,b+1)
  int v_edges = q * (q + 1);           // vertical:   (a,b)-(a+1,b)
  int subdiv = (h_edges + v_edges) * r;
  auto h_index = [&](int a, int b) { return a * q + b; };
  auto v_index = [&](int a, int b) { return h_edges + a * (q + 1) + b; };
  std::vector<Edge> edges;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      int face = subdiv + a * q + b;
      int boundary[4] = {h_index(a, b), h_index(a + 1, b), v_index(a, b), v_index(a, b + 1)};
      for (int e : boundary)
        for (int t = 0; t < r; ++t) edges.push_back({e * r + t, face});
    }
  Graph y(subdiv + q * q, std::move(edges));
  return line_graph(y);
}

std::int64_t UniversalTwoTree::level_edge_count(int level) const {
  if (level < 0 || level > h) fail(Errc::invalid_input, "level out of range");
  std::int64_t c = 1;
  for (int i = 0; i < level; ++i) c *= 2 * d;
  return c;
}

UniversalTwoTree gen_universal_2tree(int h, int d, std::int64_t edge_cap) {
  if (h < -1 || d < 1) fail(Errc::invalid_input, "universal 2-tree needs h >= -1 and d >= 1");
  UniversalTwoTree t;
  t.h = h;
  t.d = d;
  if (h == -1) return t;

  std::int64_t total = 0, level_count = 1;
  for (int i = 0; i <= h; ++i) {
    total += level_count;
    if (total > edge_cap)
      fail(Errc::cap_exceeded, "universal 2-tree would exceed the edge cap");
    if (i < h) level_count *= 2 * d;
  }

  std::vector<Edge> edges;
  std::vector<int> creation_levels;
  edges.reserve(total);
  std::vector<Edge> frontier = {{0, 1}};
  edges.push_back({0, 1});
  creation_levels.push_back(0);
  int next_vertex = 2;
  for (int level = 1; level <= h; ++level) {
    std::vector<Edge> next_frontier;
    next_frontier.reserve(frontier.size() * 2 * d);
    for (auto [u, v] : frontier)
      for (int j = 0; j < d; ++j) {
        int nv = next_vertex++;
        next_frontier.push_back({u, nv});
        next_frontier.push_back({v, nv});
        edges.push_back({u, nv});
        creation_levels.push_back(level);
        edges.push_back({v, nv});
        creation_levels.push_back(level);
      }
    frontier = std::move(next_frontier);
  }

  std::map<Edge, int> level_of;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Edge e = edges[i];
    if (e.first > e.second) std::swap(e.first, e.second);
    level_of[e] = creation_levels[i];
  }
  t.graph = Graph(next_vertex, edges);
  t.edge_levels.reserve(t.graph.edge_count());
  for (auto e : t.graph.edges()) t.edge_levels.push_back(level_of.at(e));
  return t;
}

namespace {
// First vertex id of level `level` under the breadth-first numbering.
std::int64_t two_tree_vertex_base(int d, int level) {
  std::int64_t base = 2, edges_below = 1;
  for (int l = 1; l < level; ++l) {
    base += static_cast<std::int64_t>(d) * edges_below;
    edges_below *= 2 * d;
  }
  return base;
}
}  // namespace

std::pair<std::int64_t, std::int64_t> LazyTwoTree::endpoints(EdgeRef e) const {
  if (e.level < 0 || e.level > h || e.index < 0) fail(Errc::invalid_input, "bad edge reference");
  if (e.level == 0) {
    if (e.index != 0) fail(Errc::invalid_input, "bad edge reference");
    return {0, 1};
  }
  EdgeRef parent{e.level - 1, e.index / (2 * d)};
  auto pe = endpoints(parent);
  std::int64_t j = (e.index % (2 * d)) / 2;
  std::int64_t nv = two_tree_vertex_base(d, e.level) + parent.index * d + j;
  std::int64_t other = (e.index % 2 == 0) ? pe.first : pe.second;
  return {other, nv};
}

std::vector<LazyTwoTree::Child> LazyTwoTree::children(EdgeRef e) const {
  if (e.level >= h) fail(Errc::invalid_input, "edge has no children below the height bound");
  endpoints(e);  // validates the reference
  std::vector<Child> out;
  out.reserve(d);
  std::int64_t vb = two_tree_vertex_base(d, e.level + 1);
  for (int j = 0; j < d; ++j) {
    Child c;
    c.vertex = vb + e.index * d + j;
    c.to_first = {e.level + 1, e.index * 2 * d + 2 * j};
    c.to_second = {e.level + 1, e.index * 2 * d + 2 * j + 1};
    out.push_back(c);
  }
  return out;
}

}  // namespace otd
