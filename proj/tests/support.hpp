#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "dissoc/graph.hpp"

namespace dissoc::test {

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline Graph random_graph(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> order(lo, hi);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  const int n = order(rng);
  return random_graph(rng, n, density(rng));
}

inline Graph random_graph(std::mt19937_64& rng, int lo, int hi, double p) {
  return random_graph(rng, std::uniform_int_distribution<int>(lo, hi)(rng), p);
}

inline std::vector<Vertex> random_perm(std::mt19937_64& rng, int n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline VertexSet random_subset(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<std::uint64_t> bits;
  return VertexSet(static_cast<std::uint32_t>(bits(rng)) & VertexSet::full(n).bits());
}

inline bool symmetric_irreflexive(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.neighbors(v).contains(v)) return false;
    for (Vertex u : g.neighbors(v))
      if (!g.has_edge(u, v)) return false;
  }
  return true;
}

}  // namespace dissoc::test
