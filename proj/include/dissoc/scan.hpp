#pragma once

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "dissoc/canonical.hpp"
#include "dissoc/count.hpp"
#include "dissoc/generators.hpp"
#include "dissoc/graph6.hpp"
#include "dissoc/parallel.hpp"

namespace dissoc {

/// Graphs sharing one value of d, ordered by canonical form.
struct Tier {
  Count count;
  std::vector<std::string> graphs;  // graph6
  bool operator==(const Tier&) const = default;
};

/// Result of counting every graph of a family at one order. tiers[0] holds
/// the maximum; tiers[1], when present, the runner-up.
struct ScanReport {
  std::string family;  // family name, or "stream" for external input
  int order = 0;
  std::size_t total_graphs_scanned = 0;
  std::vector<Tier> tiers;
  double elapsed_seconds = 0.0;  // not part of equality or default output

  const Count& max_count() const { return tiers.at(0).count; }
  const std::vector<std::string>& extremal() const { return tiers.at(0).graphs; }
  std::optional<Count> runner_up_count() const {
    if (tiers.size() < 2) return std::nullopt;
    return tiers[1].count;
  }
  std::vector<std::string> runner_up_graphs() const {
    return tiers.size() < 2 ? std::vector<std::string>{} : tiers[1].graphs;
  }

  bool operator==(const ScanReport& o) const {
    return family == o.family && order == o.order &&
           total_graphs_scanned == o.total_graphs_scanned && tiers == o.tiers;
  }
};

struct ScanOptions {
  std::size_t top = 2;
  unsigned jobs = 1;
  std::ostream* progress = nullptr;  // a line every 10,000 graphs
};

inline constexpr std::size_t kProgressInterval = 10000;

/// d for every graph, in input order.
inline std::vector<Count> count_all(const std::vector<Graph>& graphs, const ScanOptions& opt) {
  std::vector<Count> out;
  out.reserve(graphs.size());
  for (std::size_t start = 0; start < graphs.size(); start += kProgressInterval) {
    std::size_t stop = std::min(graphs.size(), start + kProgressInterval);
    std::vector<Graph> chunk(graphs.begin() + static_cast<std::ptrdiff_t>(start),
                             graphs.begin() + static_cast<std::ptrdiff_t>(stop));
    auto counts = parallel_map(chunk, opt.jobs, [](const Graph& g) { return count(g); });
    for (auto& c : counts) out.push_back(std::move(c));
    if (opt.progress && stop < graphs.size())
      *opt.progress << "  counted " << stop << " / " << graphs.size() << " graphs\n";
  }
  return out;
}

/// Groups graphs by d and keeps the `top` largest tiers.
inline std::vector<Tier> top_tiers(const std::vector<Graph>& graphs, const std::vector<Count>& counts,
                                   std::size_t top) {
  std::map<Count, std::vector<std::size_t>, std::greater<>> by_count;
  for (std::size_t i = 0; i < graphs.size(); ++i) by_count[counts[i]].push_back(i);
  std::vector<Tier> tiers;
  for (auto& [c, idx] : by_count) {
    if (tiers.size() >= top) break;
    std::vector<std::pair<std::string, std::string>> keyed;
    for (std::size_t i : idx) keyed.emplace_back(canonical_form(graphs[i]), to_graph6(graphs[i]));
    std::sort(keyed.begin(), keyed.end());
    Tier t{c, {}};
    for (auto& [key, g6] : keyed) t.graphs.push_back(g6);
    tiers.push_back(std::move(t));
  }
  return tiers;
}

inline ScanReport scan_graphs(const std::string& family, int order, const std::vector<Graph>& graphs,
                              const ScanOptions& opt = {}) {
  auto t0 = std::chrono::steady_clock::now();
  ScanReport r;
  r.family = family;
  r.order = order;
  r.total_graphs_scanned = graphs.size();
  r.tiers = top_tiers(graphs, count_all(graphs, opt), std::max<std::size_t>(opt.top, 1));
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline ScanReport scan_family(const FamilySpec& spec, const ScanOptions& opt = {}) {
  auto t0 = std::chrono::steady_clock::now();
  ScanReport r = scan_graphs(to_string(spec.family), spec.order, generate_family(spec), opt);
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

/// Canonical forms of the graph6 strings in a tier.
inline std::vector<std::string> canonical_set(const std::vector<std::string>& graph6s) {
  std::vector<std::string> out;
  for (const auto& s : graph6s) out.push_back(canonical_form(from_graph6(s)));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> canonical_set(const std::vector<Graph>& graphs) {
  std::vector<std::string> out;
  for (const auto& g : graphs) out.push_back(canonical_form(g));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dissoc
