// dissoc: count dissociation sets, build the extremal families, and run the
// exhaustive verification sweeps from the command line.
//
// Exit codes: 0 success / verified, 1 usage or I/O error, 2 violation found.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "dissoc/dissoc.hpp"

namespace {

using namespace dissoc;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OrderRange {
  int from = 0;
  int to = -1;
};

// "A..B" or "A".
OrderRange parse_orders(const std::string& s) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      int n = std::stoi(s);
      return {n, n};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("bad order range '" + s + "', expected A..B");
  }
}

std::vector<Graph> named_family(const std::string& name, int n) {
  if (name == "path") return {path_graph(n)};
  if (name == "cycle") return {cycle_graph(n)};
  if (name == "star") return {star_graph(n)};
  if (name == "complete") return {complete_graph(n)};
  if (name == "empty") return {empty_graph(n)};
  if (name == "extremal-tree") return extremal_tree(n);
  if (name == "extremal-unicyclic") return {extremal_unicyclic(n)};
  if (name == "runner-up-candidate") return {runner_up_tree_candidate(n)};
  throw UsageError("unknown named family '" + name +
                   "' (path, cycle, star, complete, empty, extremal-tree, extremal-unicyclic, "
                   "runner-up-candidate)");
}

struct Common {
  std::string format = "table";
  unsigned jobs = 1;
  bool lenient = false;
  bool timing = false;
  bool quiet = false;

  OutputFormat fmt() const { return parse_format(format); }
  ReadMode mode() const { return lenient ? ReadMode::kLenient : ReadMode::kStrict; }
  std::ostream* progress() const { return quiet ? nullptr : &std::cerr; }
};

std::vector<Graph> read_graphs(const std::string& path, const Common& c) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw UsageError("cannot open '" + path + "'");
    in = &file;
  }
  Graph6ReadResult res = ingest_graph6(*in, c.mode());
  for (const auto& s : res.skipped) std::cerr << "skipped line " << s.line << ": " << s.message << "\n";
  std::vector<Graph> out;
  for (auto& r : res.graphs) out.push_back(std::move(r.graph));
  return out;
}

// Graphs from --g6 / --file / --family+--order, in that precedence.
struct GraphInput {
  std::vector<std::string> g6;
  std::string file;
  std::string family;
  std::optional<int> order;

  std::vector<Graph> load(const Common& c) const {
    std::vector<Graph> out;
    for (const auto& s : g6) out.push_back(from_graph6(s));
    if (!file.empty())
      for (auto& g : read_graphs(file, c)) out.push_back(std::move(g));
    if (!family.empty()) {
      if (!order) throw UsageError("--family needs --order");
      for (auto& g : named_family(family, *order)) out.push_back(std::move(g));
    }
    if (out.empty()) throw UsageError("no input graph: give --g6, --file or --family/--order");
    return out;
  }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  sub->add_option("--jobs", c.jobs, "worker threads for counting sweeps")->check(CLI::PositiveNumber);
  sub->add_flag("--lenient,!--strict", c.lenient, "skip malformed graph6 lines instead of failing");
  sub->add_flag("--timing", c.timing, "include elapsed time in scan output");
  sub->add_flag("--quiet", c.quiet, "suppress progress on stderr");
}

void add_graph_input(CLI::App* sub, GraphInput& in) {
  sub->add_option("--g6", in.g6, "graph6 string (repeatable)");
  sub->add_option("--file", in.file, "newline-delimited graph6 file, '-' for stdin");
  sub->add_option("--family", in.family, "named construction: path, cycle, star, complete, empty, "
                                         "extremal-tree, extremal-unicyclic, runner-up-candidate");
  sub->add_option("--order", in.order, "order for --family");
}

// ---------------------------------------------------------------------------

int cmd_count(const GraphInput& in, bool poly, const Common& c) {
  auto graphs = in.load(c);
  const auto fmt = c.fmt();
  Json arr = Json::array();
  if (fmt == OutputFormat::kCsv) std::cout << "graph6,count" << (poly ? ",polynomial" : "") << "\n";
  for (const auto& g : graphs) {
    const Count d = count(g);
    std::optional<DissociationPolynomial> p;
    if (poly) p = dissociation_polynomial(g);
    switch (fmt) {
      case OutputFormat::kJson: {
        Json j{{"graph6", to_graph6(g)}, {"order", g.order()}, {"count", count_json(d)}};
        if (p) {
          Json cs = Json::array();
          for (const auto& k : p->coeffs) cs.push_back(count_json(k));
          j["polynomial"] = cs;
        }
        arr.push_back(j);
        break;
      }
      case OutputFormat::kCsv:
        std::cout << to_graph6(g) << "," << d;
        if (p) {
          std::cout << ",";
          for (std::size_t k = 0; k < p->coeffs.size(); ++k) std::cout << (k ? " " : "") << p->coeffs[k];
        }
        std::cout << "\n";
        break;
      case OutputFormat::kTable:
        std::cout << d;
        if (graphs.size() > 1 || poly) std::cout << "\t" << to_graph6(g);
        if (p) {
          std::cout << "\td(G,k) =";
          for (const auto& k : p->coeffs) std::cout << " " << k;
        }
        std::cout << "\n";
        break;
    }
  }
  if (fmt == OutputFormat::kJson) std::cout << arr.dump(2) << "\n";
  return kExitOk;
}

int cmd_scan(const std::string& family, std::optional<int> order, const std::string& file, std::size_t top,
             const Common& c) {
  ScanOptions opt{top, c.jobs, c.progress()};
  ScanReport r;
  if (!file.empty()) {
    auto graphs = read_graphs(file, c);
    if (graphs.empty()) throw UsageError("input stream holds no graphs");
    int n = graphs.front().order();
    for (const auto& g : graphs)
      if (g.order() != n) throw UsageError("scan input mixes orders " + std::to_string(n) + " and " +
                                           std::to_string(g.order()));
    r = scan_graphs(family.empty() ? "stream" : family, n, graphs, opt);
  } else {
    if (family.empty() || !order) throw UsageError("scan needs --family and --order, or --file");
    FamilySpec spec{parse_family(family), *order};
    try {
      check_family_order(spec.family, spec.order);
    } catch (const std::out_of_range& e) {
      throw UsageError(std::string(e.what()) + "; supply an external stream with --file");
    }
    r = scan_family(spec, opt);
  }
  write_scan(std::cout, r, c.fmt(), c.timing);
  return kExitOk;
}

int cmd_verify(const std::string& theorem, const std::string& orders, const std::string& file,
               const Common& c) {
  Theorem t;
  try {
    t = parse_theorem(theorem);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  OrderRange range = parse_orders(orders);
  VerifyOptions opt;
  opt.jobs = c.jobs;
  opt.progress = c.progress();
  if (!file.empty()) {
    opt.source = stream_source(read_graphs(file, c));
    opt.external = true;
  }
  TheoremVerdict v;
  try {
    v = verify(t, range.from, range.to, opt);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  write_verdict(std::cout, v, c.fmt());
  return v.verified() ? kExitOk : kExitViolation;
}

int cmd_question(const std::string& orders, int connected_max, const Common& c) {
  OrderRange range = parse_orders(orders);
  QuestionReport q;
  try {
    q = question(range.from, range.to, {c.jobs, c.progress(), connected_max});
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  write_question(std::cout, q, c.fmt());
  return kExitOk;
}

int cmd_chain(const GraphInput& in, const Common& c) {
  for (const auto& g : in.load(c)) {
    if (!is_connected(g)) throw UsageError("chain needs a connected graph, got " + to_graph6(g));
    write_chain(std::cout, g, spanning_tree_chain(g), c.fmt());
  }
  return kExitOk;
}

int cmd_construct(const std::string& family, int order) {
  for (const auto& g : named_family(family, order)) std::cout << to_graph6(g) << "\n";
  return kExitOk;
}

int cmd_gen(const std::string& family, int order) {
  FamilySpec spec{parse_family(family), order};
  try {
    check_family_order(spec.family, spec.order);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  auto emit = [](const Graph& g) { std::cout << to_graph6(g) << "\n"; };
  switch (spec.family) {
    case Family::kTrees: for_each_tree(order, emit); break;
    case Family::kConnected: for_each_connected(order, emit); break;
    case Family::kAll: for_each_graph(order, emit); break;
    case Family::kUnicyclic:
      for (const auto& g : all_unicyclic(order)) emit(g);
      break;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact dissociation-set counting and extremal verification"};
  app.require_subcommand(1);

  Common common;

  GraphInput count_in;
  bool poly = false;
  auto* count_cmd = app.add_subcommand("count", "print d(G) for each input graph");
  add_graph_input(count_cmd, count_in);
  count_cmd->add_flag("--poly", poly, "also print d(G,k) for k = 0..n (n <= 24)");
  add_common(count_cmd, common);

  std::string scan_family_name, scan_file;
  std::optional<int> scan_order;
  std::size_t top = 2;
  auto* scan_cmd = app.add_subcommand("scan", "rank every graph of a family by d(G)");
  scan_cmd->add_option("--family", scan_family_name, "trees, unicyclic, connected or all");
  scan_cmd->add_option("--order", scan_order, "graph order");
  scan_cmd->add_option("--file", scan_file, "scan a graph6 stream instead of generating");
  scan_cmd->add_option("--top", top, "number of count tiers to report")->check(CLI::PositiveNumber);
  add_common(scan_cmd, common);

  std::string theorem, verify_orders = "", verify_file;
  auto* verify_cmd = app.add_subcommand("verify", "exhaustively check one extremal claim");
  verify_cmd->add_option("--theorem", theorem,
                         "bounds-2.1, lemma-2.5, lemma-2.8, tree-max-3.1, connected-max-3.2, "
                         "unicyclic-max-4.3, path-cycle-4.1")
      ->required();
  verify_cmd->add_option("--orders,--order", verify_orders, "order range A..B")->required();
  verify_cmd->add_option("--file", verify_file, "check graphs from a graph6 stream");
  add_common(verify_cmd, common);

  std::string question_orders;
  int connected_max = 9;
  auto* question_cmd = app.add_subcommand("question", "runner-up tier among trees and unicyclic graphs");
  question_cmd->add_option("--orders,--order", question_orders, "order range A..B")->required();
  question_cmd->add_option("--connected-max", connected_max,
                           "cross-check against all connected graphs up to this order (<= 9)");
  add_common(question_cmd, common);

  GraphInput chain_in;
  auto* chain_cmd = app.add_subcommand("chain", "spanning-tree edge-deletion trace");
  add_graph_input(chain_cmd, chain_in);
  add_common(chain_cmd, common);

  std::string construct_family;
  int construct_order = 0;
  auto* construct_cmd = app.add_subcommand("construct", "emit a named construction as graph6");
  construct_cmd->add_option("--family", construct_family, "named construction")->required();
  construct_cmd->add_option("--order", construct_order, "order")->required();

  std::string gen_family;
  int gen_order = 0;
  auto* gen_cmd = app.add_subcommand("gen", "emit a generated family as graph6");
  gen_cmd->add_option("--family", gen_family, "trees, unicyclic, connected or all")->required();
  gen_cmd->add_option("--order", gen_order, "order")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*count_cmd) return cmd_count(count_in, poly, common);
    if (*scan_cmd) return cmd_scan(scan_family_name, scan_order, scan_file, top, common);
    if (*verify_cmd) return cmd_verify(theorem, verify_orders, verify_file, common);
    if (*question_cmd) return cmd_question(question_orders, connected_max, common);
    if (*chain_cmd) return cmd_chain(chain_in, common);
    if (*construct_cmd) return cmd_construct(construct_family, construct_order);
    if (*gen_cmd) return cmd_gen(gen_family, gen_order);
  } catch (const Graph6StreamError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Graph6Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
