#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dissoc/constructions.hpp"
#include "dissoc/graph.hpp"

namespace dissoc {

/// Exact, unbounded nonnegative count.
using Count = boost::multiprecision::cpp_int;

/// Largest order the subset-enumeration routines accept.
inline constexpr int kBruteForceMaxOrder = 24;

inline Count pow2(unsigned k) { return Count(1) << k; }

/// Every vertex of G[S] has at most one neighbor in S.
inline bool is_dissociation(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw std::out_of_range("vertex set exceeds graph order");
  for (Vertex v : s)
    if (std::popcount(g.adj_bits(v) & s.bits()) > 1) return false;
  return true;
}

namespace detail {

inline void require_brute_scale(const Graph& g, const char* what) {
  if (g.order() > kBruteForceMaxOrder)
    throw std::invalid_argument(std::string(what) + ": order " + std::to_string(g.order()) +
                                " exceeds subset-enumeration cap " +
                                std::to_string(kBruteForceMaxOrder));
}

template <class Fn>
void for_each_dissociation_set(const Graph& g, Fn&& fn) {
  const int n = g.order();
  const std::uint32_t limit = n == 32 ? 0 : (std::uint32_t{1} << n);
  std::uint32_t s = 0;
  do {
    bool ok = true;
    for (std::uint32_t rest = s; rest && ok; rest &= rest - 1)
      ok = std::popcount(g.adj_bits(std::countr_zero(rest)) & s) <= 1;
    if (ok) fn(s);
  } while (++s != limit);
}

}  // namespace detail

/// d(G) by enumerating all 2^n subsets. Oracle only.
inline Count count_brute(const Graph& g) {
  detail::require_brute_scale(g, "count_brute");
  std::uint64_t total = 0;
  detail::for_each_dissociation_set(g, [&](std::uint32_t) { ++total; });
  return Count(total);
}

/// Coefficients d(G,0), ..., d(G,n).
struct DissociationPolynomial {
  std::vector<Count> coeffs;

  Count total() const {
    Count t = 0;
    for (const auto& c : coeffs) t += c;
    return t;
  }
  bool operator==(const DissociationPolynomial&) const = default;
};

inline DissociationPolynomial dissociation_polynomial(const Graph& g) {
  detail::require_brute_scale(g, "dissociation_polynomial");
  std::vector<std::uint64_t> by_size(static_cast<std::size_t>(g.order()) + 1, 0);
  detail::for_each_dissociation_set(g, [&](std::uint32_t s) { ++by_size[std::popcount(s)]; });
  DissociationPolynomial p;
  for (auto c : by_size) p.coeffs.emplace_back(c);
  return p;
}

// ---------------------------------------------------------------------------
// Memoized branching count.
//
// d(G) = d(G-v) + d(G-N[v]) + sum over u in N(v) of d(G - (N[u] ∪ N[v])),
// applied per component with a maximum-degree pivot. Subproblems are keyed by
// the surviving vertex mask of the root graph. Every subresult is at most
// 2^32, so 64-bit arithmetic is exact here.

class DissociationCounter {
 public:
  explicit DissociationCounter(const Graph& g) : g_(g) {
    if (g.order() > kMaxOrder)
      throw std::invalid_argument("count: order exceeds engine cap");
  }

  std::uint64_t count(VertexSet alive) { return solve(alive.bits()); }
  std::uint64_t count() { return solve(g_.vertices().bits()); }
  std::size_t memo_size() const { return memo_.size(); }

 private:
  std::uint32_t closed(int v) const { return g_.adj_bits(v) | (std::uint32_t{1} << v); }

  std::uint32_t component(std::uint32_t mask) const {
    std::uint32_t seen = mask & (~mask + 1);
    std::uint32_t frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= g_.adj_bits(std::countr_zero(f));
      next &= mask & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  std::uint64_t solve(std::uint32_t mask) {
    const int k = std::popcount(mask);
    if (k <= 2) return std::uint64_t{1} << k;
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;

    std::uint64_t result;
    const std::uint32_t comp = component(mask);
    if (comp != mask) {
      result = solve(comp) * solve(mask & ~comp);
    } else {
      int pivot = -1, best = -1;
      for (std::uint32_t m = mask; m; m &= m - 1) {
        int v = std::countr_zero(m);
        int deg = std::popcount(g_.adj_bits(v) & mask);
        if (deg > best) { best = deg; pivot = v; }
      }
      const std::uint32_t nv = closed(pivot);
      result = solve(mask & ~(std::uint32_t{1} << pivot)) + solve(mask & ~nv);
      for (std::uint32_t nb = g_.adj_bits(pivot) & mask; nb; nb &= nb - 1)
        result += solve(mask & ~(nv | closed(std::countr_zero(nb))));
    }
    memo_.emplace(mask, result);
    return result;
  }

  Graph g_;
  std::unordered_map<std::uint32_t, std::uint64_t> memo_;
};

/// d(G), the number of dissociation sets including the empty set.
inline Count count(const Graph& g) { return Count(DissociationCounter(g).count()); }

/// Sizes of D(G, v̄), D(G, v⁰), D(G, v¹): sets avoiding v, containing v
/// isolated, and containing v matched to one neighbor.
struct BranchPartition {
  Count excluded;
  Count isolated;
  Count matched;
  Count total() const { return excluded + isolated + matched; }
};

inline BranchPartition branch_partition(const Graph& g, Vertex v) {
  const VertexSet nv = closed_neighborhood(g, v);
  DissociationCounter c(g);
  const VertexSet all = g.vertices();
  BranchPartition p;
  p.excluded = c.count(all - VertexSet::single(v));
  p.isolated = c.count(all - nv);
  p.matched = 0;
  for (Vertex u : g.neighbors(v)) p.matched += c.count(all - (nv | closed_neighborhood(g, u)));
  return p;
}

// ---------------------------------------------------------------------------
// Named families.

/// d(P_n) = d(P_{n-1}) + d(P_{n-2}) + d(P_{n-3}), d(P_0)=1, d(P_1)=2, d(P_2)=4.
inline Count count_path(int n) {
  if (n < 0) throw std::invalid_argument("count_path: negative order");
  Count a = 1, b = 2, c = 4;  // P_0, P_1, P_2
  if (n == 0) return a;
  if (n == 1) return b;
  for (int i = 3; i <= n; ++i) {
    Count next = a + b + c;
    a = std::move(b);
    b = std::move(c);
    c = std::move(next);
  }
  return c;
}

/// d(S_n) = n + 2^{n-1}, S_n = K_{1,n-1}.
inline Count count_star(int n) {
  if (n < 1) throw std::invalid_argument("count_star: order must be >= 1");
  return Count(n) + pow2(static_cast<unsigned>(n - 1));
}

/// d(C_n) = d(P_{n-1}) + d(P_{n-3}) + 2 d(P_{n-4}) for n >= 4; d(C_3) = 7.
inline Count count_cycle(int n) {
  if (n < 3) throw std::invalid_argument("count_cycle: order must be >= 3");
  if (n == 3) return 7;
  return count_path(n - 1) + count_path(n - 3) + 2 * count_path(n - 4);
}

/// d of star_join(spec) without building it, so orders past kMaxOrder work.
/// Only hub 0 touches the parts: split on whether 0 is out, alone, paired
/// with another hub vertex, or paired with an attachment vertex.
inline Count count_star_join(const StarJoinSpec& spec) {
  if (spec.r < 1) throw std::invalid_argument("count_star_join: hub clique needs r >= 1");
  Count all = 1, without_attach = 1;
  std::vector<Count> full, cut, closed;
  for (const auto& p : spec.parts) {
    const Graph& g = p.graph;
    full.push_back(count(g));
    cut.push_back(count(delete_vertices(g, VertexSet::single(p.attach))));
    closed.push_back(count(delete_vertices(g, closed_neighborhood(g, p.attach))));
    all *= full.back();
    without_attach *= cut.back();
  }
  const int rest = spec.r - 1;
  Count total = count(complete_graph(rest)) * all;   // hub 0 out
  total += without_attach;                            // hub 0 alone
  total += Count(rest) * without_attach;              // paired inside the clique
  for (std::size_t i = 0; i < spec.parts.size(); ++i)  // paired with an attachment vertex
    total += without_attach / cut[i] * closed[i];
  return total;
}

/// Upper bound over all graphs of order n.
inline Count g_bound(int n) {
  if (n < 0) throw std::invalid_argument("g: negative order");
  return pow2(static_cast<unsigned>(n));
}

namespace detail {

// 2^{n-1} + (n + c) * 2^{(n - shift)/2}, valid once the exponent is >= 0.
inline Count half_power_form(int n, int c, int shift) {
  return pow2(static_cast<unsigned>(n - 1)) + Count(n + c) * pow2(static_cast<unsigned>((n - shift) / 2));
}

}  // namespace detail

/// Maximum of d over trees (and connected graphs) of order n. Orders below
/// the closed form's integer range (n < 5 odd, n < 6 even) are evaluated as
/// d of the extremal tree.
inline Count f_bound(int n) {
  if (n < 1) throw std::invalid_argument("f: order must be >= 1");
  if (n % 2 == 1 && n >= 5) return detail::half_power_form(n, 3, 5);
  if (n % 2 == 0 && n >= 6) return detail::half_power_form(n, 6, 6);
  return count(extremal_tree(n).front());
}

/// Maximum of d over unicyclic graphs of order n; 42 at n = 6, and d of the
/// extremal unicyclic graph for n in {3, 4, 5}.
inline Count h_bound(int n) {
  if (n < 3) throw std::invalid_argument("h: order must be >= 3");
  if (n == 6) return 42;
  if (n % 2 == 1 && n >= 7) return detail::half_power_form(n, 9, 7);
  if (n % 2 == 0 && n >= 8) return detail::half_power_form(n, 12, 8);
  return count(extremal_unicyclic(n));
}

/// Lower bound (n^2 + n + 2) / 2 over all graphs of order n.
inline Count lower_bound(int n) {
  if (n < 0) throw std::invalid_argument("lower bound: negative order");
  return Count((n * n + n + 2) / 2);
}

}  // namespace dissoc
