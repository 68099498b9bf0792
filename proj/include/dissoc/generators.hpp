#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <istream>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "dissoc/canonical.hpp"
#include "dissoc/graph.hpp"
#include "dissoc/graph6.hpp"

namespace dissoc {

enum class Family { kTrees, kUnicyclic, kConnected, kAll };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::kTrees: return "trees";
    case Family::kUnicyclic: return "unicyclic";
    case Family::kConnected: return "connected";
    case Family::kAll: return "all";
  }
  return "?";
}

inline Family parse_family(const std::string& s) {
  if (s == "trees" || s == "tree") return Family::kTrees;
  if (s == "unicyclic") return Family::kUnicyclic;
  if (s == "connected") return Family::kConnected;
  if (s == "all") return Family::kAll;
  throw std::invalid_argument("unknown family '" + s + "'");
}

struct FamilyRange {
  int min_order;
  int max_order;
};

/// Orders each in-repo generator accepts.
inline FamilyRange family_range(Family f) {
  switch (f) {
    case Family::kTrees: return {1, 18};
    case Family::kUnicyclic: return {3, 18};
    case Family::kConnected: return {1, 9};
    case Family::kAll: return {0, 8};
  }
  return {0, -1};
}

struct FamilySpec {
  Family family = Family::kTrees;
  int order = 1;
};

inline void check_family_order(Family f, int n) {
  FamilyRange r = family_range(f);
  if (n < r.min_order || n > r.max_order)
    throw std::out_of_range(std::string(to_string(f)) + " generator supports orders " +
                            std::to_string(r.min_order) + ".." + std::to_string(r.max_order) +
                            ", got " + std::to_string(n));
}

using GraphVisitor = std::function<void(const Graph&)>;

// ---------------------------------------------------------------------------
// Free trees from level sequences.
//
// Rooted level sequences are advanced in reverse lexicographic order by the
// Beyer-Hedetniemi successor; candidates that are not the canonical
// center-rooted form of their free tree are skipped in one jump, so each free
// tree is produced once. Starts at the path rooted at its center.

namespace detail {

inline Graph tree_from_levels(const std::vector<int>& levels) {
  const int n = static_cast<int>(levels.size());
  Graph g(n);
  std::vector<Vertex> last_at(static_cast<std::size_t>(n) + 1, -1);
  for (Vertex v = 0; v < n; ++v) {
    int lv = levels[static_cast<std::size_t>(v)];
    if (lv > 0) g.add_edge(last_at[static_cast<std::size_t>(lv - 1)], v);
    last_at[static_cast<std::size_t>(lv)] = v;
  }
  return g;
}

// Successor of a rooted level sequence from position p; empty when exhausted.
inline std::vector<int> next_rooted(const std::vector<int>& pred, int p = -1) {
  if (p < 0) {
    p = static_cast<int>(pred.size()) - 1;
    while (pred[static_cast<std::size_t>(p)] == 1) --p;
  }
  if (p == 0) return {};
  int q = p - 1;
  while (pred[static_cast<std::size_t>(q)] != pred[static_cast<std::size_t>(p)] - 1) --q;
  std::vector<int> out = pred;
  for (std::size_t i = static_cast<std::size_t>(p); i < out.size(); ++i)
    out[i] = out[i - static_cast<std::size_t>(p - q)];
  return out;
}

// Left subtree of the root (levels shifted down) and the rest of the tree.
inline void split_tree(const std::vector<int>& layout, std::vector<int>& left,
                       std::vector<int>& rest) {
  std::size_t m = layout.size();
  bool one_found = false;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] != 1) continue;
    if (one_found) { m = i; break; }
    one_found = true;
  }
  left.clear();
  rest.assign(1, 0);
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
}

// Returns the candidate if it is a valid free-tree layout, otherwise the next
// layout worth testing.
inline std::vector<int> next_tree(const std::vector<int>& candidate, bool& valid) {
  std::vector<int> left, rest;
  split_tree(candidate, left, rest);
  const int left_h = *std::max_element(left.begin(), left.end());
  const int rest_h = *std::max_element(rest.begin(), rest.end());
  valid = rest_h >= left_h;
  if (valid && rest_h == left_h) {
    if (left.size() > rest.size()) valid = false;
    else if (left.size() == rest.size() && left > rest) valid = false;
  }
  if (valid) return candidate;

  const int p = static_cast<int>(left.size());
  std::vector<int> next = next_rooted(candidate, p);
  if (!next.empty() && candidate[static_cast<std::size_t>(p)] > 2) {
    std::vector<int> nl, nr;
    split_tree(next, nl, nr);
    const int nlh = *std::max_element(nl.begin(), nl.end());
    for (int k = 0; k <= nlh; ++k)
      next[next.size() - static_cast<std::size_t>(nlh + 1) + static_cast<std::size_t>(k)] = k + 1;
  }
  return next;
}

}  // namespace detail

/// Visits one representative of every free tree of order n.
inline void for_each_tree(int n, const GraphVisitor& visit) {
  check_family_order(Family::kTrees, n);
  if (n <= 2) {
    visit(detail::tree_from_levels(n == 1 ? std::vector<int>{0} : std::vector<int>{0, 1}));
    return;
  }
  std::vector<int> layout;
  for (int i = 0; i <= n / 2; ++i) layout.push_back(i);
  for (int i = 1; i < (n + 1) / 2; ++i) layout.push_back(i);
  while (!layout.empty()) {
    bool valid = false;
    layout = detail::next_tree(layout, valid);
    if (layout.empty()) break;
    if (!valid) continue;
    visit(detail::tree_from_levels(layout));
    layout = detail::next_rooted(layout);
  }
}

inline std::vector<Graph> all_trees(int n) {
  std::vector<Graph> out;
  for_each_tree(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

// ---------------------------------------------------------------------------
// Unicyclic graphs: every tree plus every non-edge, deduplicated.

inline std::vector<Graph> all_unicyclic(int n) {
  check_family_order(Family::kUnicyclic, n);
  std::vector<Graph> out;
  std::unordered_set<std::string> seen;
  for_each_tree(n, [&](const Graph& t) {
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        if (t.has_edge(u, v)) continue;
        Graph g = t.with_edge(u, v);
        if (seen.insert(unicyclic_canonical_form(g)).second) out.push_back(std::move(g));
      }
  });
  return out;
}

// ---------------------------------------------------------------------------
// Orderly generation of all graphs on n vertices.
//
// Edges are indexed in graph6 bit order. A graph is canonical when its
// identity adjacency string is maximal over all relabelings; deleting the
// last edge of a canonical graph leaves a canonical graph, so extending each
// canonical graph by edges after its last one and keeping the canonical
// results visits every isomorphism class exactly once.

namespace detail {

inline void orderly_extend(Graph& g, int next_slot, const std::vector<std::pair<Vertex, Vertex>>& slots,
                           const GraphVisitor& visit) {
  for (std::size_t k = static_cast<std::size_t>(next_slot); k < slots.size(); ++k) {
    auto [i, j] = slots[k];
    g.add_edge(i, j);
    if (is_max_string(g)) {
      visit(g);
      orderly_extend(g, static_cast<int>(k) + 1, slots, visit);
    }
    g.remove_edge(i, j);
  }
}

inline void orderly_graphs(int n, const GraphVisitor& visit) {
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) slots.emplace_back(i, j);
  Graph g(n);
  visit(g);
  orderly_extend(g, 0, slots, visit);
}

}  // namespace detail

inline void for_each_graph(int n, const GraphVisitor& visit) {
  check_family_order(Family::kAll, n);
  detail::orderly_graphs(n, visit);
}

inline std::vector<Graph> all_graphs(int n) {
  std::vector<Graph> out;
  for_each_graph(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

inline void for_each_connected(int n, const GraphVisitor& visit) {
  check_family_order(Family::kConnected, n);
  detail::orderly_graphs(n, [&](const Graph& g) {
    if (is_connected(g)) visit(g);
  });
}

inline std::vector<Graph> all_connected(int n) {
  std::vector<Graph> out;
  for_each_connected(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

inline std::vector<Graph> generate_family(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kTrees: return all_trees(spec.order);
    case Family::kUnicyclic: return all_unicyclic(spec.order);
    case Family::kConnected: return all_connected(spec.order);
    case Family::kAll: return all_graphs(spec.order);
  }
  return {};
}

// ---------------------------------------------------------------------------
// External streams

inline Graph6ReadResult ingest_graph6(std::istream& in, ReadMode mode = ReadMode::kStrict) {
  return read_graph6_stream(in, mode);
}

}  // namespace dissoc
