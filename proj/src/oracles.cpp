#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "errors.hpp"

namespace otd {

namespace {

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> nb(g.vertex_count(), 0);
  for (auto [u, v] : g.edges()) {
    nb[u] |= std::uint64_t{1} << v;
    nb[v] |= std::uint64_t{1} << u;
  }
  return nb;
}

// Number of vertices outside T | {v} reachable from v through T.
int through_degree(const std::vector<std::uint64_t>& nb, std::uint32_t T, int v) {
  std::uint32_t visited = std::uint32_t{1} << v;
  std::uint32_t stack = visited, outside = 0;
  while (stack) {
    int u = std::countr_zero(stack);
    stack &= stack - 1;
    std::uint32_t nbu = static_cast<std::uint32_t>(nb[u]);
    outside |= nbu & ~T;
    std::uint32_t fresh = nbu & T & ~visited;
    visited |= fresh;
    stack |= fresh;
  }
  return std::popcount(outside & ~(std::uint32_t{1} << v));
}

Decomposition empty_witness(DecompKind kind) {
  Decomposition d;
  d.kind = kind;
  d.bags = {{}};
  return d;
}

}  // namespace

WidthResult exact_treewidth(const Graph& g, int cap) {
  int n = g.vertex_count();
  if (n > cap || n > 22) fail(Errc::cap_exceeded, "treewidth instance exceeds the cap");
  if (n == 0) return {-1, empty_witness(DecompKind::tree)};
  auto nb = adjacency_masks(g);
  std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<int> f(full + 1, 0), choice(full + 1, -1);
  f[0] = -1;
  for (std::uint32_t S = 1; S <= full; ++S) {
    int best = n + 1;
    for (std::uint32_t rest = S; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      std::uint32_t prev = S & ~(std::uint32_t{1} << v);
      int cost = std::max(f[prev], through_degree(nb, prev, v));
      if (cost < best) {
        best = cost;
        choice[S] = v;
      }
    }
    f[S] = best;
  }

  // Recover the elimination order: choice[S] is eliminated last within S.
  std::vector<int> order(n);
  std::uint32_t S = full;
  for (int i = n - 1; i >= 0; --i) {
    order[i] = choice[S];
    S &= ~(std::uint32_t{1} << order[i]);
  }

  // Build the witness by simulating the elimination with fill edges.
  std::vector<std::uint64_t> fill = nb;
  std::uint32_t remaining = full;
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  Decomposition witness;
  witness.kind = DecompKind::tree;
  witness.bags.resize(n);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    std::uint32_t nbrs =
        static_cast<std::uint32_t>(fill[v]) & remaining & ~(std::uint32_t{1} << v);
    std::vector<int> bag = {v};
    int parent_vertex = -1;
    for (std::uint32_t rest = nbrs; rest;) {
      int w = std::countr_zero(rest);
      rest &= rest - 1;
      bag.push_back(w);
      if (parent_vertex < 0 || pos[w] < pos[parent_vertex]) parent_vertex = w;
    }
    std::sort(bag.begin(), bag.end());
    witness.bags[i] = std::move(bag);
    if (parent_vertex >= 0)
      witness.tree_edges.push_back({i, pos[parent_vertex]});
    else if (i + 1 < n)
      witness.tree_edges.push_back({i, i + 1});
    for (std::uint32_t rest = nbrs; rest;) {
      int u = std::countr_zero(rest);
      rest &= rest - 1;
      fill[u] |= nbrs & ~(std::uint32_t{1} << u);
    }
    remaining &= ~(std::uint32_t{1} << v);
  }
  return {f[full], std::move(witness)};
}

WidthResult exact_pathwidth(const Graph& g, int cap) {
  int n = g.vertex_count();
  if (n > cap || n > 22) fail(Errc::cap_exceeded, "pathwidth instance exceeds the cap");
  if (n == 0) return {-1, empty_witness(DecompKind::path)};
  auto nb = adjacency_masks(g);
  std::uint32_t full = (std::uint32_t{1} << n) - 1;
  auto boundary = [&](std::uint32_t T) {
    int c = 0;
    for (std::uint32_t rest = T; rest;) {
      int u = std::countr_zero(rest);
      rest &= rest - 1;
      if (static_cast<std::uint32_t>(nb[u]) & ~T) ++c;
    }
    return c;
  };
  std::vector<int> f(full + 1, 0), choice(full + 1, -1);
  for (std::uint32_t S = 1; S <= full; ++S) {
    int best = n + 1;
    for (std::uint32_t rest = S; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      int sub = f[S & ~(std::uint32_t{1} << v)];
      if (sub < best) {
        best = sub;
        choice[S] = v;
      }
    }
    f[S] = std::max(boundary(S), best);
  }

  std::vector<int> order(n);
  std::uint32_t S = full;
  for (int i = n - 1; i >= 0; --i) {
    order[i] = choice[S];
    S &= ~(std::uint32_t{1} << order[i]);
  }

  // Bag i = boundary of the first i vertices, plus the (i+1)-st.
  Decomposition witness;
  witness.kind = DecompKind::path;
  std::uint32_t prefix = 0;
  for (int i = 0; i < n; ++i) {
    std::vector<int> bag = {order[i]};
    for (std::uint32_t rest = prefix; rest;) {
      int u = std::countr_zero(rest);
      rest &= rest - 1;
      if (static_cast<std::uint32_t>(nb[u]) & ~prefix) bag.push_back(u);
    }
    std::sort(bag.begin(), bag.end());
    witness.bags.push_back(std::move(bag));
    prefix |= std::uint32_t{1} << order[i];
  }
  return {f[full], std::move(witness)};
}

namespace {

struct CliqueSearch {
  const std::vector<std::uint64_t>& nb;
  std::vector<int> best, current;

  void expand(std::uint64_t P) {
    if (P == 0) {
      if (current.size() > best.size()) best = current;
      return;
    }
    // Greedy coloring; vertices listed color class by color class.
    std::vector<std::pair<int, int>> colored;  // (color, vertex)
    std::uint64_t rem = P;
    int c = 0;
    while (rem) {
      std::uint64_t cls = 0;
      for (std::uint64_t rest = rem; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if ((nb[v] & cls) == 0) {
          cls |= std::uint64_t{1} << v;
          colored.push_back({c, v});
        }
      }
      rem &= ~cls;
      ++c;
    }
    for (int i = static_cast<int>(colored.size()) - 1; i >= 0; --i) {
      auto [color, v] = colored[i];
      if (current.size() + color + 1 <= best.size()) return;
      current.push_back(v);
      expand(P & nb[v]);
      current.pop_back();
      P &= ~(std::uint64_t{1} << v);
    }
  }
};

}  // namespace

CliqueResult max_clique(const Graph& g, int cap) {
  int n = g.vertex_count();
  if (n > cap || n > 63) fail(Errc::cap_exceeded, "clique instance exceeds the cap");
  auto nb = adjacency_masks(g);
  CliqueSearch search{nb, {}, {}};
  std::uint64_t all = (n == 0) ? 0 : (n == 63 ? ~std::uint64_t{0} >> 1 : (std::uint64_t{1} << n) - 1);
  search.expand(all);
  std::sort(search.best.begin(), search.best.end());
  return {static_cast<int>(search.best.size()), std::move(search.best)};
}

namespace {

struct ColorSearch {
  const Graph& g;
  const std::vector<int>& order;
  int k;
  std::vector<int> color;

  bool recurse(std::size_t i, int used) {
    if (i == order.size()) return true;
    int v = order[i];
    int limit = std::min(used + 1, k);
    for (int c = 0; c < limit; ++c) {
      bool ok = true;
      for (int w : g.neighbors(v))
        if (color[w] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[v] = c;
      if (recurse(i + 1, std::max(used, c + 1))) return true;
      color[v] = -1;
    }
    return false;
  }
};

}  // namespace

int chromatic_number(const Graph& g, int cap) {
  int n = g.vertex_count();
  if (n > cap) fail(Errc::cap_exceeded, "chromatic instance exceeds the cap");
  if (n == 0) return 0;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    auto da = g.neighbors(a).size(), db = g.neighbors(b).size();
    return da != db ? da > db : a < b;
  });
  int lower = std::max(1, max_clique(g, std::max(cap, n)).size);
  for (int k = lower; k <= n; ++k) {
    ColorSearch search{g, order, k, std::vector<int>(n, -1)};
    if (search.recurse(0, 0)) return k;
  }
  fail(Errc::internal, "no coloring found");
}

SeparatorResult min_separator_size(const Graph& g, int cap) {
  int n = g.vertex_count();
  if (n > cap) fail(Errc::cap_exceeded, "separator instance exceeds the cap");
  auto nb = adjacency_masks(g);
  std::uint32_t full = (n == 0) ? 0 : (std::uint32_t{1} << n) - 1;
  int best_size = n + 1;
  std::uint32_t best_mask = 0;
  for (std::uint32_t S = 0; S <= full; ++S) {
    int size = std::popcount(S);
    if (size >= best_size) continue;
    std::uint32_t left = full & ~S;
    bool ok = true;
    while (left && ok) {
      int s = std::countr_zero(left);
      std::uint32_t visited = std::uint32_t{1} << s, stack = visited;
      while (stack) {
        int u = std::countr_zero(stack);
        stack &= stack - 1;
        std::uint32_t fresh = static_cast<std::uint32_t>(nb[u]) & ~S & ~visited;
        visited |= fresh;
        stack |= fresh;
      }
      if (2 * std::popcount(visited) > n) ok = false;
      left &= ~visited;
    }
    if (ok) {
      best_size = size;
      best_mask = S;
      if (best_size == 0) break;
    }
  }
  SeparatorResult out;
  out.size = best_size;
  for (std::uint32_t rest = best_mask; rest;) {
    out.vertices.push_back(std::countr_zero(rest));
    rest &= rest - 1;
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

}  // namespace otd
