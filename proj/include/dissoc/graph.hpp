#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dissoc {

/// Hard cap on graph order; vertex sets are single 32-bit words.
inline constexpr int kMaxOrder = 32;

using Vertex = int;

/// A set of vertices over 0..31 stored as one machine word.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint32_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) bits_ |= bit(v);
  }

  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
  }
  static constexpr VertexSet single(Vertex v) { return VertexSet(bit(v)); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1u; }
  constexpr Vertex first() const { return std::countr_zero(bits_); }

  constexpr void insert(Vertex v) { bits_ |= bit(v); }
  constexpr void erase(Vertex v) { bits_ &= ~bit(v); }

  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  constexpr bool operator==(const VertexSet&) const = default;

  /// Ascending iteration over members.
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { iterator t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const = default;
   private:
    std::uint32_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

 private:
  static constexpr std::uint32_t bit(Vertex v) { return std::uint32_t{1} << v; }
  std::uint32_t bits_ = 0;
};

/// Finite simple undirected graph on vertices 0..n-1 with bitmask adjacency.
///
/// Every mutator keeps adjacency symmetric and loop-free, so a Graph value is
/// always a valid simple graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxOrder)
      throw std::invalid_argument("graph order " + std::to_string(n) + " outside 0.." +
                                  std::to_string(kMaxOrder));
  }
  Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }
  static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::full(n_); }
  VertexSet neighbors(Vertex v) const { return adj_[check(v)]; }
  int degree(Vertex v) const { return neighbors(v).size(); }
  bool has_edge(Vertex u, Vertex v) const { return adj_[check(u)].contains(check(v)); }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += adj_[v].size();
    return twice / 2;
  }

  /// Edges (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  void add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[u].insert(v);
    adj_[v].insert(u);
  }
  void remove_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    adj_[u].erase(v);
    adj_[v].erase(u);
  }

  Graph with_edge(Vertex u, Vertex v) const { Graph g = *this; g.add_edge(u, v); return g; }
  Graph without_edge(Vertex u, Vertex v) const { Graph g = *this; g.remove_edge(u, v); return g; }

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && std::equal(adj_.begin(), adj_.begin() + n_, o.adj_.begin());
  }

  /// Raw adjacency word for hot loops; no range check.
  std::uint32_t adj_bits(Vertex v) const { return adj_[v].bits(); }

 private:
  Vertex check(Vertex v) const {
    if (v < 0 || v >= n_)
      throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of order " +
                              std::to_string(n_));
    return v;
  }

  int n_ = 0;
  std::array<VertexSet, kMaxOrder> adj_{};
};

// ---------------------------------------------------------------------------
// Neighborhoods

inline VertexSet open_neighborhood(const Graph& g, Vertex v) { return g.neighbors(v); }

inline VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  return g.neighbors(v) | VertexSet::single(v);
}

/// N[S]: union of closed neighborhoods of members of S.
inline VertexSet closed_neighborhood(const Graph& g, VertexSet s) {
  VertexSet out = s;
  for (Vertex v : s) out |= g.neighbors(v);
  return out;
}

/// N(S) = N[S] \ S.
inline VertexSet open_neighborhood(const Graph& g, VertexSet s) {
  return closed_neighborhood(g, s) - s;
}

// ---------------------------------------------------------------------------
// Subgraphs

/// G[S], with members of S relabeled 0..|S|-1 in ascending original order.
inline Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw std::out_of_range("vertex set exceeds graph order");
  std::array<int, kMaxOrder> index{};
  int k = 0;
  for (Vertex v : s) index[v] = k++;
  Graph h(k);
  for (Vertex u : s)
    for (Vertex w : g.neighbors(u) & s)
      if (u < w) h.add_edge(index[u], index[w]);
  return h;
}

/// G - S.
inline Graph delete_vertices(const Graph& g, VertexSet s) {
  return induced_subgraph(g, g.vertices() - s);
}

/// Vertex set of the component of `within` (restricted to `within`) containing v.
inline VertexSet component_of(const Graph& g, Vertex v, VertexSet within) {
  VertexSet seen = VertexSet::single(v);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex u : frontier) next |= g.neighbors(u);
    next &= within;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

/// Vertex sets of the components, ordered by smallest member.
inline std::vector<VertexSet> component_sets(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet rest = g.vertices();
  while (!rest.empty()) {
    VertexSet c = component_of(g, rest.first(), rest);
    out.push_back(c);
    rest -= c;
  }
  return out;
}

inline std::vector<Graph> components(const Graph& g) {
  std::vector<Graph> out;
  for (VertexSet c : component_sets(g)) out.push_back(induced_subgraph(g, c));
  return out;
}

inline bool is_connected(const Graph& g) {
  return g.order() == 0 || component_of(g, 0, g.vertices()) == g.vertices();
}

/// |E| - |V| + (number of components); c(G) for connected G.
inline int cycle_space_dim(const Graph& g) {
  return g.edge_count() - g.order() + static_cast<int>(component_sets(g).size());
}

inline bool is_tree(const Graph& g) {
  return g.order() >= 1 && is_connected(g) && g.edge_count() == g.order() - 1;
}

inline bool is_unicyclic(const Graph& g) {
  return g.order() >= 3 && is_connected(g) && g.edge_count() == g.order();
}

/// Disjoint union; vertices of `b` follow those of `a`.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(u + a.order(), v + a.order());
  return g;
}

/// Relabel: vertex v of g becomes perm[v].
inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw std::invalid_argument("permutation size does not match graph order");
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

// ---------------------------------------------------------------------------
// Twins

enum class TwinStatus { kTrueTwin, kFalseTwin, kNeither };

inline const char* to_string(TwinStatus t) {
  switch (t) {
    case TwinStatus::kTrueTwin: return "true-twin";
    case TwinStatus::kFalseTwin: return "false-twin";
    case TwinStatus::kNeither: return "neither";
  }
  return "?";
}

/// True twins share N[.], false twins share N(.).
inline TwinStatus twin_status(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("twin_status needs two distinct vertices");
  if (closed_neighborhood(g, u) == closed_neighborhood(g, v)) return TwinStatus::kTrueTwin;
  if (g.neighbors(u) == g.neighbors(v)) return TwinStatus::kFalseTwin;
  return TwinStatus::kNeither;
}

/// All unordered pairs {u < v} with the requested twin status.
inline std::vector<std::pair<Vertex, Vertex>> twin_pairs(const Graph& g, TwinStatus kind) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (twin_status(g, u, v) == kind) out.emplace_back(u, v);
  return out;
}

}  // namespace dissoc
