#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "dissoc/graph.hpp"

namespace dissoc {

// Named families. Vertex 0 is the path end / cycle start / star center.

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

/// S_n = K_{1,n-1}.
inline Graph star_graph(int n) {
  if (n < 1) throw std::invalid_argument("star needs at least 1 vertex");
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

/// sK_1 ∪ tK_2, isolated vertices first.
inline Graph matching_union(int isolated, int edges) {
  Graph g(isolated + 2 * edges);
  for (int i = 0; i < edges; ++i) g.add_edge(isolated + 2 * i, isolated + 2 * i + 1);
  return g;
}

inline Graph complete_multipartite(const std::vector<int>& part_sizes) {
  if (part_sizes.empty()) throw std::invalid_argument("complete_multipartite: no parts");
  std::vector<int> label;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    if (part_sizes[p] < 1) throw std::invalid_argument("complete_multipartite: empty part");
    label.insert(label.end(), static_cast<std::size_t>(part_sizes[p]), static_cast<int>(p));
  }
  Graph g(static_cast<int>(label.size()));
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (label[u] != label[v]) g.add_edge(u, v);
  return g;
}

// ---------------------------------------------------------------------------
// Star join K_r ∗ (G_1 ∪ ... ∪ G_t): hub vertex 0 of K_r gets one edge to the
// attachment vertex of each part. Labels: K_r is 0..r-1, then each part in
// order with its own labels shifted.

struct StarJoinPart {
  Graph graph;
  Vertex attach = 0;
};

struct StarJoinSpec {
  int r = 1;
  std::vector<StarJoinPart> parts;
};

inline Graph star_join(const StarJoinSpec& spec) {
  if (spec.r < 1) throw std::invalid_argument("star_join: hub clique needs r >= 1");
  int n = spec.r;
  for (const auto& p : spec.parts) {
    if (p.graph.order() < 1) throw std::invalid_argument("star_join: empty part");
    if (p.attach < 0 || p.attach >= p.graph.order())
      throw std::out_of_range("star_join: attachment vertex outside its part");
    n += p.graph.order();
  }
  Graph g = complete_graph(spec.r);
  Graph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  int offset = spec.r;
  for (const auto& p : spec.parts) {
    for (auto [u, v] : p.graph.edges()) out.add_edge(offset + u, offset + v);
    out.add_edge(0, offset + p.attach);
    offset += p.graph.order();
  }
  return out;
}

inline int order(const StarJoinSpec& spec) {
  int n = spec.r;
  for (const auto& p : spec.parts) n += p.graph.order();
  return n;
}

inline StarJoinSpec star_join_matching_spec(int r, int k2, int k1) {
  StarJoinSpec spec{r, {}};
  for (int i = 0; i < k2; ++i) spec.parts.push_back({complete_graph(2), 0});
  for (int i = 0; i < k1; ++i) spec.parts.push_back({complete_graph(1), 0});
  return spec;
}

/// K_r ∗ (k2 K_2 ∪ k1 K_1), K_2 parts first.
inline Graph star_join_matching(int r, int k2, int k1) {
  return star_join(star_join_matching_spec(r, k2, k1));
}

/// Star-join form of the maximal trees; any order >= 1. At n = 6 this is the
/// K_2 ∗ 2K_2 member only.
inline StarJoinSpec extremal_tree_spec(int n) {
  if (n < 1) throw std::invalid_argument("extremal_tree: order must be >= 1");
  if (n % 2 == 1) return star_join_matching_spec(1, (n - 1) / 2, 0);
  return star_join_matching_spec(2, (n - 2) / 2, 0);
}

/// Maximal trees of order n; two non-isomorphic trees at n = 6.
inline std::vector<Graph> extremal_tree(int n) {
  if (n == 6) return {path_graph(6), star_join(extremal_tree_spec(6))};
  return {star_join(extremal_tree_spec(n))};
}

inline StarJoinSpec extremal_unicyclic_spec(int n) {
  if (n < 3) throw std::invalid_argument("extremal_unicyclic: order must be >= 3");
  if (n == 6) return {1, {{complete_graph(3), 0}, {complete_graph(2), 0}}};
  return star_join_matching_spec(3, (n - 3) / 2, (n + 1) % 2);
}

/// Maximal unicyclic graph of order n.
inline Graph extremal_unicyclic(int n) { return star_join(extremal_unicyclic_spec(n)); }

/// The tree obtained from the maximal unicyclic graph by deleting the edge
/// between its true twins: K_1 ∗ (2K_1 ∪ (n-3)/2 K_2) for odd n,
/// K_1 ∗ (3K_1 ∪ (n-4)/2 K_2) for even n.
inline Graph runner_up_tree_candidate(int n) {
  if (n < 3) throw std::invalid_argument("runner_up_tree_candidate: order must be >= 3");
  if (n % 2 == 1) return star_join_matching(1, (n - 3) / 2, 2);
  if (n < 4) throw std::invalid_argument("runner_up_tree_candidate: even order must be >= 4");
  return star_join_matching(1, (n - 4) / 2, 3);
}

// ---------------------------------------------------------------------------
// C_r(k_1, ..., k_r): cycle v_1..v_r with a pendant tree identified at each
// cycle vertex through its root. Cycle vertices are 0..r-1; the non-root
// vertices of each slot follow in slot order.

struct PendantSlot {
  Graph tree = Graph(1);
  Vertex root = 0;
};

inline Graph pendant_cycle(int r, const std::vector<PendantSlot>& slots) {
  if (r < 3) throw std::invalid_argument("pendant_cycle: cycle length must be >= 3");
  if (static_cast<int>(slots.size()) != r)
    throw std::invalid_argument("pendant_cycle: expected " + std::to_string(r) + " slots, got " +
                                std::to_string(slots.size()));
  int n = 0;
  for (const auto& s : slots) {
    if (!is_tree(s.tree)) throw std::invalid_argument("pendant_cycle: slot is not a tree");
    if (s.root < 0 || s.root >= s.tree.order())
      throw std::out_of_range("pendant_cycle: root outside its tree");
    n += s.tree.order();
  }
  Graph g(n);
  for (Vertex i = 0; i < r; ++i) g.add_edge(i, (i + 1) % r);
  int offset = r;
  for (Vertex i = 0; i < r; ++i) {
    const auto& s = slots[static_cast<std::size_t>(i)];
    std::vector<Vertex> label(static_cast<std::size_t>(s.tree.order()));
    for (Vertex v = 0; v < s.tree.order(); ++v)
      label[static_cast<std::size_t>(v)] = v == s.root ? i : offset++;
    for (auto [u, v] : s.tree.edges())
      g.add_edge(label[static_cast<std::size_t>(u)], label[static_cast<std::size_t>(v)]);
  }
  return g;
}

}  // namespace dissoc
