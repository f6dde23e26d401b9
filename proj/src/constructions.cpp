#include "constructions.hpp"

#include <algorithm>

#include "errors.hpp"

namespace otd {

namespace {

void require_valid(const Decomposition& d, const Graph& g, const char* what) {
  if (auto v = validate(d, g))
    fail(Errc::validation, std::string(what) + " does not validate: " + v->axiom + ", " + v->witness);
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::pair<Decomposition, Decomposition> grid_orthogonal_paths(int n) {
  if (n < 2) fail(Errc::invalid_input, "grid orthogonal pair needs n >= 2");
  Decomposition cols{DecompKind::path, {}, {}}, rows{DecompKind::path, {}, {}};
  for (int j = 0; j + 1 < n; ++j) {
    std::vector<int> bag;
    for (int r = 0; r < n; ++r) {
      bag.push_back(r * n + j);
      bag.push_back(r * n + j + 1);
    }
    std::sort(bag.begin(), bag.end());
    cols.bags.push_back(std::move(bag));
  }
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> bag;
    for (int c = 0; c < n; ++c) {
      bag.push_back(i * n + c);
      bag.push_back((i + 1) * n + c);
    }
    std::sort(bag.begin(), bag.end());
    rows.bags.push_back(std::move(bag));
  }
  return {std::move(cols), std::move(rows)};
}

std::pair<Decomposition, Decomposition> knn_orthogonal_paths(int n) {
  if (n < 1) fail(Errc::invalid_input, "orthogonal pair needs n >= 1");
  Decomposition p{DecompKind::path, {}, {}}, q{DecompKind::path, {}, {}};
  for (int j = 0; j < n; ++j) {
    std::vector<int> bag(n);
    for (int i = 0; i < n; ++i) bag[i] = i;
    bag.push_back(n + j);
    p.bags.push_back(std::move(bag));
  }
  for (int i = 0; i < n; ++i) {
    std::vector<int> bag(n);
    for (int j = 0; j < n; ++j) bag[j] = n + j;
    bag.push_back(i);
    std::sort(bag.begin(), bag.end());
    q.bags.push_back(std::move(bag));
  }
  return {std::move(p), std::move(q)};
}

namespace {

// Star decomposition with root bag `root_part` and a closed-neighborhood leaf
// for every vertex of `leaf_part`, in ascending order.
Decomposition star_decomposition(const Graph& g, const std::vector<int>& root_part,
                                 const std::vector<int>& leaf_part) {
  Decomposition d{DecompKind::tree, {}, {}};
  d.bags.push_back(root_part);
  for (int w : leaf_part) {
    std::vector<int> bag = g.neighbors(w);
    bag.push_back(w);
    std::sort(bag.begin(), bag.end());
    int node = static_cast<int>(d.bags.size());
    d.bags.push_back(std::move(bag));
    d.tree_edges.push_back({0, node});
  }
  return d;
}

}  // namespace

std::pair<Decomposition, Decomposition> bipartite_star_pair(const Graph& g,
                                                            const std::vector<int>& a,
                                                            const std::vector<int>& b) {
  auto sa = sorted_unique(a), sb = sorted_unique(b);
  if (sa.size() != a.size() || sb.size() != b.size())
    fail(Errc::invalid_input, "bipartition parts contain repeats");
  std::vector<int> side(g.vertex_count(), -1);
  for (int v : sa) {
    if (v < 0 || v >= g.vertex_count()) fail(Errc::invalid_input, "part vertex out of range");
    side[v] = 0;
  }
  for (int v : sb) {
    if (v < 0 || v >= g.vertex_count()) fail(Errc::invalid_input, "part vertex out of range");
    if (side[v] == 0) fail(Errc::invalid_input, "parts overlap");
    side[v] = 1;
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (side[v] < 0) fail(Errc::invalid_input, "parts do not cover the graph");
  for (auto [u, v] : g.edges())
    if (side[u] == side[v]) fail(Errc::invalid_input, "edge inside one part");
  return {star_decomposition(g, sa, sb), star_decomposition(g, sb, sa)};
}

std::pair<Decomposition, Decomposition> subdivision_star_pair(int n) {
  if (n < 1) fail(Errc::invalid_input, "subdivision star pair needs n >= 1");
  Decomposition s{DecompKind::tree, {}, {}}, sp{DecompKind::tree, {}, {}};
  std::vector<int> vside(n), wside(n);
  for (int i = 0; i < n; ++i) vside[i] = i;
  for (int j = 0; j < n; ++j) wside[j] = n + j;
  auto xid = [n](int i, int j) { return 2 * n + i * n + j; };  // zero-based i, j

  s.bags.push_back(vside);
  for (int j = 0; j < n; ++j) {
    std::vector<int> bag = vside;
    bag.push_back(n + j);
    for (int i = 0; i < n; ++i) bag.push_back(xid(i, j));
    std::sort(bag.begin(), bag.end());
    int node = static_cast<int>(s.bags.size());
    s.bags.push_back(std::move(bag));
    s.tree_edges.push_back({0, node});
  }

  sp.bags.push_back(wside);
  for (int i = 0; i < n; ++i) {
    std::vector<int> bag = wside;
    bag.push_back(i);
    for (int j = 0; j < n; ++j) bag.push_back(xid(i, j));
    std::sort(bag.begin(), bag.end());
    int node = static_cast<int>(sp.bags.size());
    sp.bags.push_back(std::move(bag));
    sp.tree_edges.push_back({0, node});
  }
  return {std::move(s), std::move(sp)};
}

Decomposition domino_from_layered(const Decomposition& t, const Decomposition& l, const Graph& g) {
  require_valid(t, g, "tree decomposition");
  if (l.kind != DecompKind::layering) fail(Errc::invalid_input, "second argument must be a layering");
  require_valid(l, g, "layering");
  Decomposition out{DecompKind::path, {}, {}};
  std::size_t tcount = l.bags.size();
  for (std::size_t i = 0; i < tcount; ++i) {
    std::vector<int> bag = l.bags[i];
    if (i + 1 < tcount) bag.insert(bag.end(), l.bags[i + 1].begin(), l.bags[i + 1].end());
    std::sort(bag.begin(), bag.end());
    out.bags.push_back(std::move(bag));
  }
  return out;
}

std::pair<Decomposition, Decomposition> vertex_partition_orthogonal(
    const Graph& g, const std::vector<int>& v1, const std::vector<int>& v2,
    const Decomposition& p1, const Decomposition& p2) {
  auto s1 = sorted_unique(v1), s2 = sorted_unique(v2);
  if (s1.size() != v1.size() || s2.size() != v2.size())
    fail(Errc::invalid_input, "partition parts contain repeats");
  std::vector<int> side(g.vertex_count(), -1);
  for (int v : s1) {
    if (v < 0 || v >= g.vertex_count()) fail(Errc::invalid_input, "part vertex out of range");
    side[v] = 0;
  }
  for (int v : s2) {
    if (v < 0 || v >= g.vertex_count()) fail(Errc::invalid_input, "part vertex out of range");
    if (side[v] == 0) fail(Errc::invalid_input, "parts overlap");
    side[v] = 1;
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (side[v] < 0) fail(Errc::invalid_input, "parts do not cover the graph");

  auto check_half = [&](const Decomposition& p, const std::vector<int>& part, const char* name) {
    if (p.kind != DecompKind::path) fail(Errc::invalid_input, "half decompositions must be paths");
    auto [h, back] = induced_subgraph(g, part);
    std::vector<int> fwd(g.vertex_count(), -1);
    for (std::size_t i = 0; i < back.size(); ++i) fwd[back[i]] = static_cast<int>(i);
    Decomposition relabeled{DecompKind::path, {}, {}};
    for (const auto& bag : p.bags) {
      std::vector<int> nb;
      for (int v : bag) {
        if (v < 0 || v >= g.vertex_count() || fwd[v] < 0)
          fail(Errc::invalid_input, std::string(name) + " bag leaves its part");
        nb.push_back(fwd[v]);
      }
      std::sort(nb.begin(), nb.end());
      relabeled.bags.push_back(std::move(nb));
    }
    require_valid(relabeled, h, name);
  };
  check_half(p1, s1, "first half decomposition");
  check_half(p2, s2, "second half decomposition");

  auto lift = [](const Decomposition& p, const std::vector<int>& other) {
    Decomposition out{DecompKind::path, {}, {}};
    if (p.bags.empty()) {
      out.bags.push_back(other);
      return out;
    }
    for (const auto& bag : p.bags) {
      std::vector<int> nb = bag;
      nb.insert(nb.end(), other.begin(), other.end());
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
      out.bags.push_back(std::move(nb));
    }
    return out;
  };
  return {lift(p1, s2), lift(p2, s1)};
}

}  // namespace otd
