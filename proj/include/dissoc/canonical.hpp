#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "dissoc/graph.hpp"
#include "dissoc/graph6.hpp"

namespace dissoc {

// ---------------------------------------------------------------------------
// Adjacency strings.
//
// A labeling's adjacency string is the graph6 bit order: column j holds the
// bits x(0,j), ..., x(j-1,j). Column j is packed into one word with x(i,j) at
// bit 31-i, so comparing the column words in order is the same as comparing
// the bit strings lexicographically.

using AdjacencyString = std::vector<std::uint32_t>;

namespace detail {

inline std::uint32_t column_word(const Graph& g, const std::vector<Vertex>& at, int j) {
  std::uint32_t w = 0;
  const std::uint32_t row = g.adj_bits(at[j]);
  for (int i = 0; i < j; ++i)
    if ((row >> at[i]) & 1u) w |= std::uint32_t{1} << (31 - i);
  return w;
}

/// at[p] = vertex placed at position p.
inline AdjacencyString adjacency_string(const Graph& g, const std::vector<Vertex>& at) {
  AdjacencyString s(g.order());
  for (int j = 0; j < g.order(); ++j) s[j] = column_word(g, at, j);
  return s;
}

inline std::vector<Vertex> invert(const std::vector<Vertex>& p) {
  std::vector<Vertex> q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<Vertex>(i);
  return q;
}

// Depth-first search over position assignments, pruning any prefix whose
// columns already compare below the incumbent.
class MaxStringSearch {
 public:
  explicit MaxStringSearch(const Graph& g) : g_(g), n_(g.order()), at_(n_), best_at_(n_) {}

  std::vector<Vertex> run() {
    best_.assign(n_, 0);
    have_best_ = false;
    place(0, VertexSet::full(n_), false);
    return best_at_;
  }

 private:
  // `above`: the current prefix is already strictly greater than best_.
  void place(int p, VertexSet unused, bool above) {
    if (p == n_) {
      best_at_ = at_;
      for (int j = 0; j < n_; ++j) best_[j] = column_word(g_, at_, j);
      have_best_ = true;
      ++updates_;
      return;
    }
    for (Vertex v : unused) {
      at_[p] = v;
      std::uint32_t w = column_word(g_, at_, p);
      bool next_above = above || !have_best_;
      if (!next_above) {
        if (w < best_[p]) continue;
        if (w > best_[p]) next_above = true;
      }
      const std::size_t before = updates_;
      place(p + 1, unused - VertexSet::single(v), next_above);
      // A new incumbent found below shares this prefix.
      if (updates_ != before) above = false;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> at_;
  std::vector<Vertex> best_at_;
  AdjacencyString best_;
  bool have_best_ = false;
  std::size_t updates_ = 0;
};

}  // namespace detail

/// The adjacency string of g under the identity labeling.
inline AdjacencyString adjacency_string(const Graph& g) {
  std::vector<Vertex> id(g.order());
  std::iota(id.begin(), id.end(), 0);
  return detail::adjacency_string(g, id);
}

/// Labeling (vertex -> position) maximizing the adjacency string, found by
/// search over all n! orderings with prefix pruning. Practical for n <= 9.
inline std::vector<Vertex> max_string_labeling(const Graph& g) {
  if (g.order() == 0) return {};
  return detail::invert(detail::MaxStringSearch(g).run());
}

/// True iff no relabeling of g has a lexicographically larger adjacency
/// string than the identity labeling.
inline bool is_max_string(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  const AdjacencyString id = adjacency_string(g);
  std::vector<Vertex> at(n);
  // Returns false as soon as some prefix beats the identity.
  auto rec = [&](auto&& self, int p, VertexSet unused) -> bool {
    if (p == n) return true;
    for (Vertex v : unused) {
      at[p] = v;
      std::uint32_t w = detail::column_word(g, at, p);
      if (w > id[p]) return false;
      if (w < id[p]) continue;
      if (!self(self, p + 1, unused - VertexSet::single(v))) return false;
    }
    return true;
  };
  return rec(rec, 0, VertexSet::full(n));
}

// ---------------------------------------------------------------------------
// Individualization-refinement canonical labeling.

namespace detail {

using Partition = std::vector<std::vector<Vertex>>;

/// Refines to the coarsest equitable partition finer than `cells`. Splits are
/// ordered by neighbor count so the result commutes with relabeling.
inline void refine(const Graph& g, Partition& cells) {
  const int n = g.order();
  std::vector<int> cell_of(n);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (Vertex v : cells[c]) cell_of[v] = static_cast<int>(c);
    for (std::size_t w = 0; w < cells.size() && !changed; ++w) {
      std::uint32_t wmask = 0;
      for (Vertex v : cells[w]) wmask |= std::uint32_t{1} << v;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].size() == 1) continue;
        auto hits = [&](Vertex v) { return std::popcount(g.adj_bits(v) & wmask); };
        const int h0 = hits(cells[c].front());
        bool uniform = std::all_of(cells[c].begin(), cells[c].end(),
                                   [&](Vertex v) { return hits(v) == h0; });
        if (uniform) continue;
        std::vector<Vertex> cell = cells[c];
        std::stable_sort(cell.begin(), cell.end(),
                         [&](Vertex a, Vertex b) { return hits(a) < hits(b); });
        std::vector<std::vector<Vertex>> parts;
        for (Vertex v : cell) {
          if (parts.empty() || hits(parts.back().front()) != hits(v)) parts.emplace_back();
          parts.back().push_back(v);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), parts.begin(), parts.end());
        changed = true;
        break;
      }
    }
  }
  for (auto& cell : cells) std::sort(cell.begin(), cell.end());
}

inline Partition degree_partition(const Graph& g) {
  Partition cells;
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  for (Vertex v : order) {
    if (cells.empty() || g.degree(cells.back().front()) != g.degree(v)) cells.emplace_back();
    cells.back().push_back(v);
  }
  return cells;
}

class RefinementSearch {
 public:
  explicit RefinementSearch(const Graph& g) : g_(g), n_(g.order()) {}

  std::vector<Vertex> run() {
    Partition root = degree_partition(g_);
    refine(g_, root);
    std::vector<Vertex> path;
    search(root, path);
    return invert(best_at_);
  }

  std::size_t leaves_visited() const { return leaves_; }
  const std::vector<std::vector<Vertex>>& automorphisms() const { return autos_; }

 private:
  static constexpr int kNoJump = -1;

  // Returns the depth to unwind to, or kNoJump to continue normally.
  int search(const Partition& part, std::vector<Vertex>& path) {
    auto target = std::find_if(part.begin(), part.end(),
                               [](const auto& c) { return c.size() > 1; });
    if (target == part.end()) return leaf(part, path);

    const std::size_t tcell = static_cast<std::size_t>(target - part.begin());
    const int depth = static_cast<int>(path.size());
    std::vector<Vertex> explored;
    for (Vertex v : *target) {
      if (!explored.empty() && equivalent_to_explored(path, explored, v)) continue;
      explored.push_back(v);

      Partition child;
      child.reserve(part.size() + 1);
      for (std::size_t c = 0; c < part.size(); ++c) {
        if (c != tcell) { child.push_back(part[c]); continue; }
        child.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex w : part[c]) if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      refine(g_, child);
      path.push_back(v);
      int jump = search(child, path);
      path.pop_back();
      if (jump != kNoJump && jump < depth) return jump;
    }
    return kNoJump;
  }

  int leaf(const Partition& part, const std::vector<Vertex>& path) {
    ++leaves_;
    std::vector<Vertex> at(n_);
    for (int i = 0; i < n_; ++i) at[i] = part[i].front();
    AdjacencyString cert = adjacency_string(g_, at);
    if (first_at_.empty()) {
      first_at_ = best_at_ = at;
      first_cert_ = best_cert_ = cert;
      first_path_ = best_path_ = path;
      return kNoJump;
    }
    if (cert == first_cert_) return record_automorphism(first_at_, at, first_path_, path);
    if (cert == best_cert_) return record_automorphism(best_at_, at, best_path_, path);
    if (cert > best_cert_) {
      best_cert_ = std::move(cert);
      best_at_ = at;
      best_path_ = path;
    }
    return kNoJump;
  }

  // Maps the vertex at position i of `from` to the vertex at position i of `to`,
  // then unwinds to the node where the two search paths diverge.
  int record_automorphism(const std::vector<Vertex>& from, const std::vector<Vertex>& to,
                          const std::vector<Vertex>& from_path, const std::vector<Vertex>& path) {
    std::vector<Vertex> gamma(n_);
    for (int i = 0; i < n_; ++i) gamma[from[i]] = to[i];
    autos_.push_back(std::move(gamma));
    std::size_t k = 0;
    while (k < from_path.size() && k < path.size() && from_path[k] == path[k]) ++k;
    return static_cast<int>(k);
  }

  // Is v in the orbit of an explored sibling under the stored automorphisms
  // that fix the current path pointwise?
  bool equivalent_to_explored(const std::vector<Vertex>& path,
                              const std::vector<Vertex>& explored, Vertex v) const {
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& gamma : autos_) {
      if (!std::all_of(path.begin(), path.end(), [&](Vertex p) { return gamma[p] == p; }))
        continue;
      any = true;
      for (Vertex x = 0; x < n_; ++x) parent[find(x)] = find(gamma[x]);
    }
    if (!any) return false;
    const Vertex rv = find(v);
    return std::any_of(explored.begin(), explored.end(),
                       [&](Vertex e) { return find(e) == rv; });
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> first_at_, best_at_;
  AdjacencyString first_cert_, best_cert_;
  std::vector<Vertex> first_path_, best_path_;
  std::vector<std::vector<Vertex>> autos_;
  std::size_t leaves_ = 0;
};

}  // namespace detail

/// Canonical labeling (vertex -> position) by degree-partition refinement and
/// individualization, with automorphism pruning.
inline std::vector<Vertex> refinement_labeling(const Graph& g) {
  if (g.order() == 0) return {};
  return detail::RefinementSearch(g).run();
}

// ---------------------------------------------------------------------------
// Trees and unicyclic graphs: rooted-tree codes.

namespace detail {

/// Parenthesis code of the subtree at `root`, never entering `blocked`.
inline std::string rooted_code(const Graph& g, Vertex root, VertexSet blocked) {
  std::vector<std::string> kids;
  VertexSet stop = blocked | VertexSet::single(root);
  for (Vertex c : g.neighbors(root) - blocked) kids.push_back(rooted_code(g, c, stop));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (auto& k : kids) out += k;
  out += ')';
  return out;
}

/// Repeatedly strips degree <= 1 vertices; returns what survives the last round
/// (tree centers) or the non-peelable core (the cycle of a unicyclic graph).
inline VertexSet peel_leaves(const Graph& g, bool keep_last_round) {
  VertexSet alive = g.vertices();
  while (true) {
    VertexSet leaves;
    for (Vertex v : alive)
      if ((g.neighbors(v) & alive).size() <= 1) leaves.insert(v);
    if (leaves.empty()) return alive;
    if (keep_last_round && leaves == alive) return alive;
    alive -= leaves;
    if (alive.empty()) return leaves;
  }
}

}  // namespace detail

/// Center-rooted code; equal for two trees iff they are isomorphic.
inline std::string tree_canonical_form(const Graph& g) {
  VertexSet centers = detail::peel_leaves(g, true);
  if (centers.size() == 1) return "T1" + detail::rooted_code(g, centers.first(), {});
  auto cv = centers.to_vector();
  std::string a = detail::rooted_code(g, cv[0], VertexSet::single(cv[1]));
  std::string b = detail::rooted_code(g, cv[1], VertexSet::single(cv[0]));
  if (b < a) std::swap(a, b);
  return "T2" + a + b;
}

/// Cycle length plus the hanging-tree codes around the cycle, minimized over
/// rotations and reflections.
inline std::string unicyclic_canonical_form(const Graph& g) {
  VertexSet cycle = detail::peel_leaves(g, false);
  std::vector<Vertex> ring;
  Vertex prev = -1, cur = cycle.first();
  do {
    ring.push_back(cur);
    VertexSet next = (g.neighbors(cur) & cycle) - VertexSet::single(prev < 0 ? cur : prev);
    Vertex nxt = next.first();
    prev = cur;
    cur = nxt;
  } while (cur != ring.front());

  const std::size_t r = ring.size();
  std::vector<std::string> codes(r);
  for (std::size_t i = 0; i < r; ++i) codes[i] = detail::rooted_code(g, ring[i], cycle);

  std::vector<std::string> best;
  for (int dir : {1, -1}) {
    for (std::size_t s = 0; s < r; ++s) {
      std::vector<std::string> seq(r);
      for (std::size_t i = 0; i < r; ++i) {
        const auto rr = static_cast<std::ptrdiff_t>(r);
        const auto idx = ((static_cast<std::ptrdiff_t>(s) + dir * static_cast<std::ptrdiff_t>(i)) % rr + rr) % rr;
        seq[i] = codes[static_cast<std::size_t>(idx)];
      }
      if (best.empty() || seq < best) best = std::move(seq);
    }
  }
  std::string out = "U" + std::to_string(r) + ":";
  for (auto& c : best) out += c;
  return out;
}

/// Isomorphism-invariant byte string: equal iff the graphs are isomorphic.
/// Trees and connected unicyclic graphs use rooted-tree codes; other graphs
/// use the graph6 text of a canonical relabeling (exhaustive search for
/// n <= 8, refinement search above).
inline std::string canonical_form(const Graph& g) {
  if (is_tree(g)) return tree_canonical_form(g);
  if (is_unicyclic(g)) return unicyclic_canonical_form(g);
  if (g.order() <= 8) return "X" + to_graph6(relabel(g, max_string_labeling(g)));
  return "R" + to_graph6(relabel(g, refinement_labeling(g)));
}

}  // namespace dissoc
