#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dissoc/count.hpp"
#include "dissoc/graph.hpp"

namespace dissoc {

enum class Relation { kStrictIncrease, kEqual, kDecrease };

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::kStrictIncrease: return "strict-increase";
    case Relation::kEqual: return "equal";
    case Relation::kDecrease: return "decrease";
  }
  return "?";
}

inline Relation compare_counts(const Count& before, const Count& after) {
  if (after > before) return Relation::kStrictIncrease;
  if (after == before) return Relation::kEqual;
  return Relation::kDecrease;
}

/// d before and after deleting edge uv, with the twin status of u and v in
/// the graph before deletion. Equality is expected exactly for true twins.
struct ComparisonRecord {
  Vertex u = 0;
  Vertex v = 0;
  Count before;
  Count after;
  Relation relation = Relation::kEqual;
  TwinStatus witness = TwinStatus::kNeither;

  /// Relation agrees with the twin witness: equal <=> true twins, and never a decrease.
  bool consistent() const {
    if (relation == Relation::kDecrease) return false;
    return (relation == Relation::kEqual) == (witness == TwinStatus::kTrueTwin);
  }
};

inline ComparisonRecord delete_edge_check(const Graph& g, Vertex u, Vertex v) {
  if (u == v || !g.has_edge(u, v))
    throw std::invalid_argument("delete_edge_check: " + std::to_string(u) + "-" +
                                std::to_string(v) + " is not an edge");
  ComparisonRecord rec;
  rec.u = std::min(u, v);
  rec.v = std::max(u, v);
  rec.before = count(g);
  rec.after = count(g.without_edge(u, v));
  rec.relation = compare_counts(rec.before, rec.after);
  rec.witness = twin_status(g, u, v);
  return rec;
}

// ---------------------------------------------------------------------------
// Quasi-pendant vertices

struct QuasiPendant {
  Vertex vertex = 0;
  VertexSet pendants;
};

/// Vertices of degree >= 2 with at least one degree-1 neighbor, ascending.
inline std::vector<QuasiPendant> find_quasi_pendants(const Graph& g) {
  std::vector<QuasiPendant> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 2) continue;
    VertexSet leaves;
    for (Vertex u : g.neighbors(v))
      if (g.degree(u) == 1) leaves.insert(u);
    if (!leaves.empty()) out.push_back({v, leaves});
  }
  return out;
}

/// Replaces the star on u_q and its pendants v_1 < ... < v_s by
/// K_1 ∗ (floor(s/2) K_2 ∪ (s mod 2) K_1): for each pair (v_1,v_2), (v_3,v_4), ...
/// the edge u_q v_{2i} is replaced by v_{2i-1} v_{2i}. With s odd, v_s stays
/// a pendant of u_q.
inline Graph quasi_pendant_transform(const Graph& g, Vertex u_q) {
  if (u_q < 0 || u_q >= g.order()) throw std::out_of_range("quasi_pendant_transform: bad vertex");
  if (g.degree(u_q) < 2)
    throw std::invalid_argument("quasi_pendant_transform: vertex " + std::to_string(u_q) +
                                " is not quasi-pendant");
  std::vector<Vertex> leaves;
  for (Vertex u : g.neighbors(u_q))
    if (g.degree(u) == 1) leaves.push_back(u);
  if (leaves.empty())
    throw std::invalid_argument("quasi_pendant_transform: vertex " + std::to_string(u_q) +
                                " is not quasi-pendant");
  if (leaves.size() < 2)
    throw std::invalid_argument("quasi_pendant_transform: vertex " + std::to_string(u_q) +
                                " carries a single pendant");
  Graph out = g;
  for (std::size_t i = 0; i + 1 < leaves.size(); i += 2) {
    out.remove_edge(u_q, leaves[i + 1]);
    out.add_edge(leaves[i], leaves[i + 1]);
  }
  return out;
}

/// Applies quasi_pendant_transform at the lowest eligible site until every
/// quasi-pendant vertex has one pendant. A P_3 component (u_q of degree 2 with
/// two pendants) maps to itself and is left alone.
inline Graph normalize_quasi_pendants(Graph g) {
  while (true) {
    auto sites = find_quasi_pendants(g);
    auto it = std::find_if(sites.begin(), sites.end(), [&](const QuasiPendant& q) {
      const int s = q.pendants.size();
      return s >= 2 && !(s == 2 && g.degree(q.vertex) == 2);
    });
    if (it == sites.end()) return g;
    g = quasi_pendant_transform(g, it->vertex);
  }
}

// ---------------------------------------------------------------------------
// Spanning-tree reduction

struct SpanningTreeChain {
  std::vector<ComparisonRecord> steps;
  Graph tree;
};

namespace detail {

/// Edges of the depth-first search tree from vertex 0, neighbors taken in
/// ascending order.
inline Graph dfs_tree(const Graph& g) {
  Graph t(g.order());
  if (g.order() == 0) return t;
  VertexSet seen = VertexSet::single(0);
  auto visit = [&](auto&& self, Vertex v) -> void {
    for (Vertex u : g.neighbors(v)) {
      if (seen.contains(u)) continue;
      seen.insert(u);
      t.add_edge(v, u);
      self(self, u);
    }
  };
  visit(visit, 0);
  return t;
}

}  // namespace detail

/// Deletes the non-tree edges of a DFS spanning tree one at a time, in
/// ascending lexicographic order, recording each comparison. The chain has
/// c(G) steps and ends at a spanning tree.
inline SpanningTreeChain spanning_tree_chain(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("spanning_tree_chain: graph is disconnected");
  const Graph tree = detail::dfs_tree(g);
  SpanningTreeChain chain;
  Graph cur = g;
  for (auto [u, v] : g.edges()) {
    if (tree.has_edge(u, v)) continue;
    chain.steps.push_back(delete_edge_check(cur, u, v));
    cur.remove_edge(u, v);
  }
  chain.tree = cur;
  return chain;
}

}  // namespace dissoc
