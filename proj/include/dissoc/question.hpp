#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dissoc/constructions.hpp"
#include "dissoc/count.hpp"
#include "dissoc/generators.hpp"
#include "dissoc/scan.hpp"

namespace dissoc {

inline constexpr const char* kQuestionBanner =
    "exploratory evidence, not a theorem: the runner-up among connected graphs is an open problem";

/// Runner-up tier at one order. The tree and unicyclic families are scanned
/// at every order; all connected graphs only where the generator reaches.
struct QuestionRow {
  int order = 0;
  Count max_count;
  Count second_count;
  std::vector<std::string> second_graphs;  // graph6, canonical order
  Count h;
  bool second_equals_h = false;
  bool second_within_candidates = false;  // every runner-up graph is a listed candidate
  std::vector<std::string> candidates_present;  // names of candidates in the runner-up tier
  std::optional<Count> connected_second_count;
  std::optional<bool> connected_agrees;  // same value and same classes

  bool operator==(const QuestionRow&) const = default;
};

struct QuestionReport {
  std::string banner = kQuestionBanner;
  std::vector<QuestionRow> rows;
  bool operator==(const QuestionReport&) const = default;
};

struct QuestionOptions {
  unsigned jobs = 1;
  std::ostream* progress = nullptr;
  int connected_max_order = 9;  // cross-check against all connected graphs up to here
};

inline QuestionRow question_row(int n, const QuestionOptions& opt = {}) {
  if (n < 4 || n > family_range(Family::kTrees).max_order)
    throw std::out_of_range("question: order must be in 4.." +
                            std::to_string(family_range(Family::kTrees).max_order));
  std::vector<Graph> pool = all_trees(n);
  for (auto& g : all_unicyclic(n)) pool.push_back(std::move(g));
  ScanReport r = scan_graphs("trees+unicyclic", n, pool, {2, opt.jobs, opt.progress});

  QuestionRow row;
  row.order = n;
  row.max_count = r.max_count();
  row.second_count = r.runner_up_count().value_or(Count(0));
  row.second_graphs = r.runner_up_graphs();
  row.h = h_bound(n);
  row.second_equals_h = row.second_count == row.h;

  const std::vector<std::pair<std::string, Graph>> candidates = {
      {"U_n", extremal_unicyclic(n)},
      {"U_n minus its true-twin edge", runner_up_tree_candidate(n)},
  };
  const auto tier = canonical_set(row.second_graphs);
  std::vector<std::string> candidate_forms;
  for (const auto& [name, g] : candidates) {
    const std::string form = canonical_form(g);
    candidate_forms.push_back(form);
    if (std::binary_search(tier.begin(), tier.end(), form)) row.candidates_present.push_back(name);
  }
  row.second_within_candidates = !tier.empty() && std::all_of(tier.begin(), tier.end(), [&](const auto& f) {
    return std::find(candidate_forms.begin(), candidate_forms.end(), f) != candidate_forms.end();
  });

  if (n <= opt.connected_max_order && n <= family_range(Family::kConnected).max_order) {
    ScanReport c = scan_family({Family::kConnected, n}, {2, opt.jobs, opt.progress});
    row.connected_second_count = c.runner_up_count().value_or(Count(0));
    row.connected_agrees = c.max_count() == r.max_count() &&
                           *row.connected_second_count == row.second_count &&
                           canonical_set(c.runner_up_graphs()) == tier;
  }
  return row;
}

inline QuestionReport question(int from, int to, const QuestionOptions& opt = {}) {
  if (from > to) throw std::invalid_argument("empty order range");
  QuestionReport rep;
  for (int n = from; n <= to; ++n) {
    if (opt.progress) *opt.progress << "question: order " << n << "\n";
    rep.rows.push_back(question_row(n, opt));
  }
  return rep;
}

}  // namespace dissoc
