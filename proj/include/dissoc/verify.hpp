#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "dissoc/constructions.hpp"
#include "dissoc/count.hpp"
#include "dissoc/generators.hpp"
#include "dissoc/graph6.hpp"
#include "dissoc/scan.hpp"
#include "dissoc/transforms.hpp"

namespace dissoc {

/// Claims that can be checked exhaustively over a finite family.
enum class Theorem {
  kBounds,          // (n^2+n+2)/2 <= d <= 2^n with both equality characterizations
  kEdgeDeletion,    // d(G) <= d(G-uv), equality iff true twins
  kQuasiPendant,    // the quasi-pendant transform strictly increases d
  kTreeMax,         // max over trees is f(n), attained only by the extremal trees
  kConnectedMax,    // max over connected graphs is f(n), attained only by the extremal trees
  kUnicyclicMax,    // max over unicyclic graphs is h(n), attained only by U_n
  kPathCycle,       // d(C_n) < d(P_n), d(C_n) < h(n), and d(P_n) < h(n) from n = 9
};

struct TheoremInfo {
  Theorem theorem;
  const char* id;
  const char* claim;
  int min_order;
  int max_order;
};

inline const std::vector<TheoremInfo>& theorem_table() {
  static const std::vector<TheoremInfo> table = {
      {Theorem::kBounds, "bounds-2.1",
       "(n^2+n+2)/2 <= d(G) <= 2^n; lower equality iff complete multipartite with parts <= 2, "
       "upper equality iff sK1 u tK2",
       0, 8},
      {Theorem::kEdgeDeletion, "lemma-2.5", "d(G) <= d(G-uv), equality iff N[u] = N[v]", 2, 8},
      {Theorem::kQuasiPendant, "lemma-2.8",
       "rewiring s >= 2 pendants of a quasi-pendant vertex into K1*(floor(s/2)K2 u (s mod 2)K1) "
       "strictly increases d",
       3, 8},
      {Theorem::kTreeMax, "tree-max-3.1", "max d over trees of order n is f(n), only at F_n", 1, 18},
      {Theorem::kConnectedMax, "connected-max-3.2",
       "max d over connected graphs of order n is f(n), only at F_n", 1, 9},
      {Theorem::kUnicyclicMax, "unicyclic-max-4.3",
       "max d over unicyclic graphs of order n is h(n), only at U_n", 3, 18},
      {Theorem::kPathCycle, "path-cycle-4.1",
       "d(C_n) < d(P_n) and d(C_n) < h(n) for n >= 4; d(P_n) < h(n) for n >= 9", 3, 32},
  };
  return table;
}

inline const TheoremInfo& theorem_info(Theorem t) {
  for (const auto& info : theorem_table())
    if (info.theorem == t) return info;
  throw std::logic_error("theorem missing from table");
}

inline Theorem parse_theorem(const std::string& id) {
  for (const auto& info : theorem_table())
    if (id == info.id) return info.theorem;
  throw std::invalid_argument("unknown theorem '" + id + "'");
}

struct OrderVerdict {
  int order = 0;
  bool verified = true;
  std::size_t checked = 0;
  std::vector<std::string> counterexamples;  // graph6
  std::string detail;
  bool operator==(const OrderVerdict&) const = default;
};

struct TheoremVerdict {
  std::string theorem;
  int from = 0;
  int to = 0;
  std::vector<OrderVerdict> orders;

  bool verified() const {
    return std::all_of(orders.begin(), orders.end(), [](const auto& o) { return o.verified; });
  }
  bool operator==(const TheoremVerdict&) const = default;
};

/// Supplies the graphs a check quantifies over at a given order. The default
/// source uses the in-repo generators.
using GraphSource = std::function<std::vector<Graph>(Family, int)>;

inline std::vector<Graph> generated_source(Family f, int n) { return generate_family({f, n}); }

/// Source backed by an external stream: graphs of the requested order,
/// filtered to the requested family.
inline GraphSource stream_source(std::vector<Graph> graphs) {
  return [graphs = std::move(graphs)](Family f, int n) {
    std::vector<Graph> out;
    for (const auto& g : graphs) {
      if (g.order() != n) continue;
      bool keep = f == Family::kAll || (f == Family::kConnected && is_connected(g)) ||
                  (f == Family::kTrees && is_tree(g)) || (f == Family::kUnicyclic && is_unicyclic(g));
      if (keep) out.push_back(g);
    }
    return out;
  };
}

struct VerifyOptions {
  unsigned jobs = 1;
  std::ostream* progress = nullptr;
  GraphSource source = generated_source;
  bool external = false;  // source is a stream; skip in-repo order caps
};

namespace detail {

inline constexpr std::size_t kMaxCounterexamples = 20;

inline void fail(OrderVerdict& v, const Graph& g) {
  v.verified = false;
  if (v.counterexamples.size() < kMaxCounterexamples) v.counterexamples.push_back(to_graph6(g));
}

inline int max_degree(const Graph& g) {
  int m = 0;
  for (Vertex v = 0; v < g.order(); ++v) m = std::max(m, g.degree(v));
  return m;
}

/// Complete multipartite with all parts of size <= 2, i.e. the complement
/// has maximum degree <= 1.
inline bool is_multipartite_parts_le2(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.order() - 1 - g.degree(v) > 1) return false;
  return true;
}

inline OrderVerdict check_bounds(const std::vector<Graph>& graphs, int n, const VerifyOptions& opt) {
  OrderVerdict v{n, true, graphs.size(), {}, {}};
  auto counts = count_all(graphs, {2, opt.jobs, opt.progress});
  const Count lo = lower_bound(n), hi = g_bound(n);
  std::size_t lower_eq = 0, upper_eq = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Count& c = counts[i];
    const bool at_lo = c == lo, at_hi = c == hi;
    lower_eq += at_lo;
    upper_eq += at_hi;
    if (c < lo || c > hi || at_lo != is_multipartite_parts_le2(graphs[i]) ||
        at_hi != (max_degree(graphs[i]) <= 1))
      fail(v, graphs[i]);
  }
  v.detail = std::to_string(lower_eq) + " classes at the lower bound, " + std::to_string(upper_eq) +
             " at the upper bound";
  return v;
}

inline OrderVerdict check_edge_deletion(const std::vector<Graph>& graphs, int n,
                                        const VerifyOptions& opt) {
  OrderVerdict v{n, true, 0, {}, {}};
  auto bad = parallel_map(graphs, opt.jobs, [](const Graph& g) {
    std::size_t edges = 0;
    bool ok = true;
    std::size_t equal = 0;
    for (auto [a, b] : g.edges()) {
      ++edges;
      auto rec = delete_edge_check(g, a, b);
      ok = ok && rec.consistent();
      equal += rec.relation == Relation::kEqual;
    }
    return std::tuple{ok, edges, equal};
  });
  std::size_t equal = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    auto [ok, edges, eq] = bad[i];
    v.checked += edges;
    equal += eq;
    if (!ok) fail(v, graphs[i]);
  }
  v.detail = std::to_string(v.checked) + " edges over " + std::to_string(graphs.size()) +
             " classes; " + std::to_string(equal) + " equalities, all at true twins";
  if (!v.verified) v.detail = "equality/twin mismatch or decrease found";
  return v;
}

inline OrderVerdict check_quasi_pendant(const std::vector<Graph>& graphs, int n,
                                        const VerifyOptions& opt) {
  OrderVerdict v{n, true, 0, {}, {}};
  auto results = parallel_map(graphs, opt.jobs, [](const Graph& g) {
    std::size_t sites = 0, fixed_points = 0;
    bool ok = true;
    for (const auto& q : find_quasi_pendants(g)) {
      const int s = q.pendants.size();
      if (s < 2) continue;
      if (s == 2 && g.degree(q.vertex) == 2) {
        ++fixed_points;  // P_3 component: the transform returns the same graph
        continue;
      }
      ++sites;
      ok = ok && count(quasi_pendant_transform(g, q.vertex)) > count(g);
    }
    return std::tuple{ok, sites, fixed_points};
  });
  std::size_t fixed = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    auto [ok, sites, fp] = results[i];
    v.checked += sites;
    fixed += fp;
    if (!ok) fail(v, graphs[i]);
  }
  v.detail = std::to_string(v.checked) + " transform sites; " + std::to_string(fixed) +
             " P3-component sites skipped (transform is the identity there)";
  return v;
}

inline OrderVerdict check_maximum(const std::vector<Graph>& graphs, int n, const Count& bound,
                                  const std::vector<Graph>& expected, const std::string& family,
                                  const VerifyOptions& opt) {
  OrderVerdict v{n, true, graphs.size(), {}, {}};
  if (graphs.empty()) {
    v.verified = false;
    v.detail = "no graphs supplied";
    return v;
  }
  ScanReport r = scan_graphs(family, n, graphs, {1, opt.jobs, opt.progress});
  const bool value_ok = r.max_count() == bound;
  const auto want = canonical_set(expected);
  std::size_t missing = want.size();
  for (const auto& g6 : r.extremal()) {
    const bool listed = std::binary_search(want.begin(), want.end(), canonical_form(from_graph6(g6)));
    if (listed) --missing;
    if ((!listed || !value_ok) && v.counterexamples.size() < kMaxCounterexamples)
      v.counterexamples.push_back(g6);
  }
  if (!value_ok || missing > 0 || !v.counterexamples.empty()) v.verified = false;
  v.detail = "max " + r.max_count().str() + " (bound " + bound.str() + "), " +
             std::to_string(r.extremal().size()) + " extremal class(es)";
  if (missing > 0) v.detail += ", " + std::to_string(missing) + " expected class(es) not extremal";
  if (!value_ok) v.detail += ", maximum differs from bound";
  return v;
}

inline OrderVerdict check_path_cycle(int n) {
  OrderVerdict v{n, true, 0, {}, {}};
  std::vector<std::string> notes;
  auto check = [&](bool ok, const std::string& what, const Graph* witness) {
    ++v.checked;
    if (ok) return;
    v.verified = false;
    notes.push_back("violated: " + what);
    if (witness) v.counterexamples.push_back(to_graph6(*witness));
  };
  const Count p = count_path(n), c = count_cycle(n), h = h_bound(n);
  std::optional<Graph> pg, cg;
  if (n <= kMaxOrder) {
    pg = path_graph(n);
    cg = cycle_graph(n);
    check(count(*pg) == p, "path recurrence matches direct count", &*pg);
    check(count(*cg) == c, "cycle recurrence matches direct count", &*cg);
  }
  if (n >= 4) {
    check(c < p, "d(C_n) < d(P_n)", cg ? &*cg : nullptr);
    check(c < h, "d(C_n) < h(n)", cg ? &*cg : nullptr);
  }
  if (n >= 9) check(p < h, "d(P_n) < h(n)", pg ? &*pg : nullptr);
  v.detail = "d(P_n)=" + p.str() + " d(C_n)=" + c.str() + " h(n)=" + h.str();
  for (const auto& s : notes) v.detail += "; " + s;
  return v;
}

}  // namespace detail

inline OrderVerdict verify_order(Theorem t, int n, const VerifyOptions& opt = {}) {
  const TheoremInfo& info = theorem_info(t);
  if (n < info.min_order || (!opt.external && n > info.max_order))
    throw std::out_of_range(std::string(info.id) + " supports orders " +
                            std::to_string(info.min_order) + ".." + std::to_string(info.max_order) +
                            ", got " + std::to_string(n));
  switch (t) {
    case Theorem::kBounds:
      return detail::check_bounds(opt.source(Family::kAll, n), n, opt);
    case Theorem::kEdgeDeletion:
      return detail::check_edge_deletion(opt.source(Family::kAll, n), n, opt);
    case Theorem::kQuasiPendant:
      return detail::check_quasi_pendant(opt.source(Family::kAll, n), n, opt);
    case Theorem::kTreeMax:
      return detail::check_maximum(opt.source(Family::kTrees, n), n, f_bound(n), extremal_tree(n),
                                   "trees", opt);
    case Theorem::kConnectedMax:
      return detail::check_maximum(opt.source(Family::kConnected, n), n, f_bound(n),
                                   extremal_tree(n), "connected", opt);
    case Theorem::kUnicyclicMax:
      return detail::check_maximum(opt.source(Family::kUnicyclic, n), n, h_bound(n),
                                   {extremal_unicyclic(n)}, "unicyclic", opt);
    case Theorem::kPathCycle:
      return detail::check_path_cycle(n);
  }
  throw std::logic_error("unhandled theorem");
}

inline TheoremVerdict verify(Theorem t, int from, int to, const VerifyOptions& opt = {}) {
  if (from > to) throw std::invalid_argument("empty order range");
  TheoremVerdict out{theorem_info(t).id, from, to, {}};
  for (int n = from; n <= to; ++n) {
    if (opt.progress) *opt.progress << theorem_info(t).id << ": order " << n << "\n";
    out.orders.push_back(verify_order(t, n, opt));
  }
  return out;
}

}  // namespace dissoc
