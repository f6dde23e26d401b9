#pragma once

#include <doctest.h>

#include <random>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace otd::test {

// Runs f, which must throw Error, and returns its code.
template <class F>
Errc thrown_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error to be thrown");
  return Errc::internal;
}

inline Graph gnp(int n, double p, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

}  // namespace otd::test
