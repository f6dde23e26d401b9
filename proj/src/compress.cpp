#include "compress.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "errors.hpp"
#include "planarize.hpp"

namespace otd {

namespace {

void require_valid(const Decomposition& d, const Graph& g, const char* what) {
  if (auto v = validate(d, g))
    fail(Errc::validation, std::string(what) + " does not validate: " + v->axiom + ", " + v->witness);
}

std::int64_t checked_product(std::int64_t a, std::int64_t b) {
  __int128 p = static_cast<__int128>(a) * b;
  if (p > static_cast<__int128>(INT64_MAX) || p < -static_cast<__int128>(INT64_MAX))
    fail(Errc::invalid_input, "bound parameters too large");
  return static_cast<std::int64_t>(p);
}

// Smallest t >= 1 with t*t*k >= s.
std::int64_t ceil_sqrt_ratio(std::int64_t s, std::int64_t k) {
  std::int64_t t = std::max<std::int64_t>(1, isqrt64((s + k - 1) / k));
  while (checked_product(checked_product(t, t), k) < s) ++t;
  while (t > 1 && checked_product(checked_product(t - 1, t - 1), k) >= s) --t;
  return t;
}

std::vector<Edge> tree_edges_of(const Decomposition& d) {
  if (d.kind == DecompKind::tree) return d.tree_edges;
  std::vector<Edge> out;
  for (int i = 0; i + 1 < static_cast<int>(d.bags.size()); ++i) out.push_back({i, i + 1});
  return out;
}

}  // namespace

bool compress_width_within_bound(int width, std::int64_t k, std::int64_t s) {
  std::int64_t lhs = checked_product(width + 1, width + 1);
  return lhs <= checked_product(4, checked_product(k, s));
}

Decomposition compress(const Graph& g, const Decomposition& t_in, const Decomposition& p, int k) {
  if (t_in.kind != DecompKind::tree && t_in.kind != DecompKind::path)
    fail(Errc::invalid_input, "first decomposition must be a tree or path decomposition");
  if (p.kind == DecompKind::tree)
    fail(Errc::invalid_input, "second decomposition must be sequential (path, weak path, or layering)");
  require_valid(t_in, g, "tree decomposition");
  require_valid(p, g, "sequential decomposition");
  if (k < 1) fail(Errc::invalid_input, "orthogonality parameter must be positive");
  if (orthogonality(t_in, p) > k)
    fail(Errc::invalid_input, "pair is not k-orthogonal for the given k");

  Decomposition out{DecompKind::tree, {}, {}};
  if (g.vertex_count() == 0) {
    out.bags = {{}};
    return out;
  }

  std::int64_t s = magnitude(p);
  std::int64_t t = ceil_sqrt_ratio(s, k);

  // Total bag size per cyclic label 1..t; pick the lightest label class.
  std::vector<std::int64_t> totals(t, 0);
  for (std::size_t j = 0; j < p.bags.size(); ++j)
    totals[j % t] += static_cast<std::int64_t>(p.bags[j].size());
  int chosen = 0;
  for (int i = 1; i < t; ++i)
    if (totals[i] < totals[chosen]) chosen = i;

  std::vector<int> d_set;
  for (std::size_t j = 0; j < p.bags.size(); ++j)
    if (static_cast<int>(j % t) == chosen)
      d_set.insert(d_set.end(), p.bags[j].begin(), p.bags[j].end());
  std::sort(d_set.begin(), d_set.end());
  d_set.erase(std::unique(d_set.begin(), d_set.end()), d_set.end());

  std::vector<bool> deleted(g.vertex_count(), false);
  for (int v : d_set) deleted[v] = true;
  auto comps = components(g, deleted);

  if (comps.empty()) {
    out.bags.push_back(d_set);
    return out;
  }

  auto edges = tree_edges_of(t_in);
  int b = static_cast<int>(t_in.bags.size());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    auto restricted = restrict_to(t_in, comps[c]);
    int offset = static_cast<int>(c) * b;
    for (auto& bag : restricted.bags) {
      bag.insert(bag.end(), d_set.begin(), d_set.end());
      std::sort(bag.begin(), bag.end());
      bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
      out.bags.push_back(std::move(bag));
    }
    for (auto [x, y] : edges) out.tree_edges.push_back({x + offset, y + offset});
    if (c > 0) out.tree_edges.push_back({0, offset});
  }
  return out;
}

EdgeBoundReport edge_bound_check(const Graph& g, const Decomposition& s_decomp,
                                 const Decomposition& t_decomp, int k) {
  require_valid(s_decomp, g, "first decomposition");
  require_valid(t_decomp, g, "second decomposition");
  if (k < 1) fail(Errc::invalid_input, "orthogonality parameter must be positive");
  if (orthogonality(s_decomp, t_decomp) > k)
    fail(Errc::invalid_input, "pair is not k-orthogonal for the given k");
  EdgeBoundReport r;
  r.edge_count = g.edge_count();
  r.bound = checked_product(k - 1, magnitude(s_decomp));
  r.pass = r.edge_count <= r.bound;
  return r;
}

std::vector<int> separator_from_decomposition(const Graph& g, const Decomposition& t) {
  if (t.kind != DecompKind::tree && t.kind != DecompKind::path)
    fail(Errc::invalid_input, "separator extraction needs a tree or path decomposition");
  require_valid(t, g, "tree decomposition");
  int n = g.vertex_count();
  Decomposition norm = t;  // bags deduplicated for set arithmetic
  for (auto& bag : norm.bags) bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
  if (norm.bags.empty()) return {};
  int b = static_cast<int>(norm.bags.size());

  auto edges = tree_edges_of(t);
  std::vector<std::vector<int>> adj(b);
  for (auto [x, y] : edges) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }

  int x = 0;
  for (int steps = 0; steps <= b; ++steps) {
    const auto& bag = norm.bags[x];
    std::vector<bool> removed(n, false);
    for (int v : bag) removed[v] = true;
    auto comps = components(g, removed);
    const std::vector<int>* oversized = nullptr;
    for (const auto& c : comps)
      if (2 * static_cast<std::int64_t>(c.size()) > n) oversized = &c;
    if (!oversized) return bag;

    // The oversized component's vertices live in one subtree hanging off x;
    // step to the neighbor on the path toward any node holding one of them.
    int probe = (*oversized)[0];
    std::vector<int> parent(b, -2);
    std::queue<int> q;
    q.push(x);
    parent[x] = -1;
    int holder = -1;
    while (!q.empty() && holder < 0) {
      int y = q.front();
      q.pop();
      if (bag_contains(norm.bags[y], probe)) holder = y;
      for (int z : adj[y])
        if (parent[z] == -2) {
          parent[z] = y;
          q.push(z);
        }
    }
    if (holder < 0) fail(Errc::internal, "vertex missing from the decomposition tree");
    int step_to = holder;
    while (parent[step_to] != x) step_to = parent[step_to];
    x = step_to;
  }
  fail(Errc::internal, "separator walk did not terminate");
}

namespace {

BoundValue sqrt_bound(std::int64_t factor, std::int64_t product, std::int64_t minus) {
  // factor*sqrt(product) - minus, with an exact floor via integer square root.
  BoundValue v;
  v.real = factor * std::sqrt(static_cast<double>(product)) - minus;
  v.floor = isqrt64(checked_product(checked_product(factor, factor), product)) - minus;
  return v;
}

}  // namespace

BoundsReport bounds_report(const BoundsParams& params) {
  auto nonneg = [](std::optional<std::int64_t> v) { return v && *v >= 0; };
  for (auto field : {params.k, params.s, params.n, params.g, params.m, params.tw})
    if (field && *field < 0) fail(Errc::invalid_input, "bound parameters must be nonnegative");
  BoundsReport r;
  if (nonneg(params.k) && nonneg(params.s)) {
    std::int64_t ks = checked_product(*params.k, *params.s);
    r.compressed_treewidth = sqrt_bound(2, ks, 1);
    r.compressed_pathwidth = sqrt_bound(11, ks, 1);
  }
  if (nonneg(params.g) && nonneg(params.m) && nonneg(params.n)) {
    std::int64_t inner =
        checked_product(4 * *params.g + 6, checked_product(2, *params.m) + *params.n);
    r.genus_treewidth = sqrt_bound(2, inner, 1);
  }
  if (nonneg(params.g) && nonneg(params.m)) {
    std::int64_t inner = checked_product(2 * *params.g + 3, *params.m);
    r.genus_pathwidth = sqrt_bound(4, inner, 1);
  }
  if (nonneg(params.tw)) {
    r.crossing_quota = Rat(checked_product(*params.tw + 1, *params.tw + 1), 48);
    if (nonneg(params.n)) r.crossing_lower_bound = crossing_lower_bound(*params.tw, *params.n);
  }
  return r;
}

}  // namespace otd
