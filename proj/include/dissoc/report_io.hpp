#pragma once

#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <json.hpp>

#include "dissoc/count.hpp"
#include "dissoc/question.hpp"
#include "dissoc/scan.hpp"
#include "dissoc/transforms.hpp"
#include "dissoc/verify.hpp"

namespace dissoc {

enum class OutputFormat { kTable, kJson, kCsv };

inline OutputFormat parse_format(const std::string& s) {
  if (s == "table") return OutputFormat::kTable;
  if (s == "json") return OutputFormat::kJson;
  if (s == "csv") return OutputFormat::kCsv;
  throw std::invalid_argument("unknown format '" + s + "'");
}

using Json = nlohmann::ordered_json;

// Counts travel as decimal strings; they outgrow every JSON number type.
inline Json count_json(const Count& c) { return c.str(); }
inline Count count_from_json(const Json& j) { return Count(j.get<std::string>()); }

// ---------------------------------------------------------------------------
// ScanReport

inline Json to_json(const ScanReport& r, bool with_timing = false) {
  Json j;
  j["family"] = r.family;
  j["order"] = r.order;
  j["total_graphs_scanned"] = r.total_graphs_scanned;
  j["max_count"] = count_json(r.max_count());
  Json ext = Json::array();
  for (const auto& g : r.extremal()) ext.push_back({{"graph6", g}, {"count", count_json(r.max_count())}});
  j["extremal"] = ext;
  auto ru = r.runner_up_count();
  j["runner_up_count"] = ru ? count_json(*ru) : Json(nullptr);
  j["runner_up_graphs"] = r.runner_up_graphs();
  Json tiers = Json::array();
  for (const auto& t : r.tiers) tiers.push_back({{"count", count_json(t.count)}, {"graphs", t.graphs}});
  j["tiers"] = tiers;
  if (with_timing) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

inline ScanReport scan_report_from_json(const Json& j) {
  ScanReport r;
  r.family = j.at("family").get<std::string>();
  r.order = j.at("order").get<int>();
  r.total_graphs_scanned = j.at("total_graphs_scanned").get<std::size_t>();
  for (const auto& t : j.at("tiers"))
    r.tiers.push_back({count_from_json(t.at("count")), t.at("graphs").get<std::vector<std::string>>()});
  if (j.contains("elapsed_seconds")) r.elapsed_seconds = j["elapsed_seconds"].get<double>();
  if (r.tiers.empty() || count_from_json(j.at("max_count")) != r.max_count())
    throw std::invalid_argument("scan report: max_count disagrees with tiers");
  return r;
}

inline void write_scan(std::ostream& os, const ScanReport& r, OutputFormat fmt, bool timing = false) {
  switch (fmt) {
    case OutputFormat::kJson:
      os << to_json(r, timing).dump(2) << "\n";
      return;
    case OutputFormat::kCsv:
      os << "tier,count,graph6\n";
      for (std::size_t i = 0; i < r.tiers.size(); ++i)
        for (const auto& g : r.tiers[i].graphs) os << i + 1 << "," << r.tiers[i].count << "," << g << "\n";
      return;
    case OutputFormat::kTable:
      os << "family " << r.family << ", order " << r.order << ": " << r.total_graphs_scanned
         << " graphs scanned\n";
      for (std::size_t i = 0; i < r.tiers.size(); ++i) {
        const char* label = i == 0 ? "max" : i == 1 ? "runner-up" : "tier";
        os << "  " << std::left << std::setw(10) << label << std::right << " d = " << r.tiers[i].count
           << "  (" << r.tiers[i].graphs.size() << " graph" << (r.tiers[i].graphs.size() == 1 ? "" : "s")
           << ")\n";
        for (const auto& g : r.tiers[i].graphs) os << "      " << g << "\n";
      }
      if (timing) os << "  elapsed " << r.elapsed_seconds << " s\n";
      return;
  }
}

// ---------------------------------------------------------------------------
// TheoremVerdict

inline Json to_json(const TheoremVerdict& v) {
  Json j;
  j["theorem"] = v.theorem;
  j["from"] = v.from;
  j["to"] = v.to;
  j["status"] = v.verified() ? "verified" : "violated";
  Json orders = Json::array();
  for (const auto& o : v.orders)
    orders.push_back({{"order", o.order},
                      {"status", o.verified ? "verified" : "violated"},
                      {"checked", o.checked},
                      {"counterexamples", o.counterexamples},
                      {"detail", o.detail}});
  j["orders"] = orders;
  return j;
}

inline TheoremVerdict theorem_verdict_from_json(const Json& j) {
  TheoremVerdict v{j.at("theorem").get<std::string>(), j.at("from").get<int>(), j.at("to").get<int>(), {}};
  for (const auto& o : j.at("orders"))
    v.orders.push_back({o.at("order").get<int>(), o.at("status").get<std::string>() == "verified",
                        o.at("checked").get<std::size_t>(),
                        o.at("counterexamples").get<std::vector<std::string>>(),
                        o.at("detail").get<std::string>()});
  return v;
}

inline void write_verdict(std::ostream& os, const TheoremVerdict& v, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::kJson:
      os << to_json(v).dump(2) << "\n";
      return;
    case OutputFormat::kCsv:
      os << "theorem,order,status,checked,counterexamples\n";
      for (const auto& o : v.orders) {
        os << v.theorem << "," << o.order << "," << (o.verified ? "verified" : "violated") << ","
           << o.checked << ",";
        for (std::size_t i = 0; i < o.counterexamples.size(); ++i)
          os << (i ? " " : "") << o.counterexamples[i];
        os << "\n";
      }
      return;
    case OutputFormat::kTable:
      os << v.theorem << " over orders " << v.from << ".." << v.to << ": "
         << (v.verified() ? "VERIFIED" : "VIOLATED") << "\n";
      for (const auto& o : v.orders) {
        os << "  n=" << std::setw(2) << o.order << "  " << (o.verified ? "verified" : "VIOLATED")
           << "  checked " << o.checked << "  " << o.detail << "\n";
        for (const auto& g : o.counterexamples) os << "      counterexample " << g << "\n";
      }
      return;
  }
}

// ---------------------------------------------------------------------------
// QuestionReport

inline Json to_json(const QuestionReport& q) {
  Json j;
  j["banner"] = q.banner;
  Json rows = Json::array();
  for (const auto& r : q.rows) {
    Json row;
    row["order"] = r.order;
    row["max_count"] = count_json(r.max_count);
    row["second_count"] = count_json(r.second_count);
    row["second_graphs"] = r.second_graphs;
    row["h"] = count_json(r.h);
    row["second_equals_h"] = r.second_equals_h;
    row["second_within_candidates"] = r.second_within_candidates;
    row["candidates_present"] = r.candidates_present;
    row["connected_second_count"] =
        r.connected_second_count ? count_json(*r.connected_second_count) : Json(nullptr);
    row["connected_agrees"] = r.connected_agrees ? Json(*r.connected_agrees) : Json(nullptr);
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

inline QuestionReport question_report_from_json(const Json& j) {
  QuestionReport q;
  q.banner = j.at("banner").get<std::string>();
  for (const auto& row : j.at("rows")) {
    QuestionRow r;
    r.order = row.at("order").get<int>();
    r.max_count = count_from_json(row.at("max_count"));
    r.second_count = count_from_json(row.at("second_count"));
    r.second_graphs = row.at("second_graphs").get<std::vector<std::string>>();
    r.h = count_from_json(row.at("h"));
    r.second_equals_h = row.at("second_equals_h").get<bool>();
    r.second_within_candidates = row.at("second_within_candidates").get<bool>();
    r.candidates_present = row.at("candidates_present").get<std::vector<std::string>>();
    if (!row.at("connected_second_count").is_null())
      r.connected_second_count = count_from_json(row["connected_second_count"]);
    if (!row.at("connected_agrees").is_null()) r.connected_agrees = row["connected_agrees"].get<bool>();
    q.rows.push_back(std::move(r));
  }
  return q;
}

inline void write_question(std::ostream& os, const QuestionReport& q, OutputFormat fmt) {
  auto opt_str = [](const auto& o) -> std::string {
    if (!o) return "-";
    std::ostringstream s;
    if constexpr (std::is_same_v<std::decay_t<decltype(*o)>, bool>) s << (*o ? "yes" : "no");
    else s << *o;
    return s.str();
  };
  switch (fmt) {
    case OutputFormat::kJson:
      os << to_json(q).dump(2) << "\n";
      return;
    case OutputFormat::kCsv:
      os << "order,max,second,h,second_equals_h,within_candidates,connected_second,connected_agrees,"
            "second_graphs\n";
      for (const auto& r : q.rows) {
        os << r.order << "," << r.max_count << "," << r.second_count << "," << r.h << ","
           << r.second_equals_h << "," << r.second_within_candidates << ","
           << opt_str(r.connected_second_count) << "," << opt_str(r.connected_agrees) << ",";
        for (std::size_t i = 0; i < r.second_graphs.size(); ++i)
          os << (i ? " " : "") << r.second_graphs[i];
        os << "\n";
      }
      return;
    case OutputFormat::kTable:
      os << "NOTE: " << q.banner << "\n";
      os << "   n          max       second            h  =h?  candidates  connected-2nd  agrees\n";
      for (const auto& r : q.rows) {
        os << std::setw(4) << r.order << std::setw(13) << r.max_count << std::setw(13) << r.second_count
           << std::setw(13) << r.h << std::setw(5) << (r.second_equals_h ? "yes" : "no")
           << std::setw(12) << (r.second_within_candidates ? "yes" : "no") << std::setw(15)
           << opt_str(r.connected_second_count) << std::setw(8) << opt_str(r.connected_agrees) << "\n";
        for (const auto& g : r.second_graphs) os << "        " << g << "\n";
      }
      return;
  }
}

// ---------------------------------------------------------------------------
// Spanning-tree chain

inline Json to_json(const SpanningTreeChain& c) {
  Json steps = Json::array();
  for (const auto& s : c.steps)
    steps.push_back({{"edge", {s.u, s.v}},
                     {"before", count_json(s.before)},
                     {"after", count_json(s.after)},
                     {"relation", to_string(s.relation)},
                     {"witness", to_string(s.witness)}});
  return {{"steps", steps}, {"tree", to_graph6(c.tree)}};
}

inline void write_chain(std::ostream& os, const Graph& g, const SpanningTreeChain& c, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::kJson: {
      Json j = to_json(c);
      j["graph"] = to_graph6(g);
      os << j.dump(2) << "\n";
      return;
    }
    case OutputFormat::kCsv:
      os << "step,u,v,before,after,relation,witness\n";
      for (std::size_t i = 0; i < c.steps.size(); ++i) {
        const auto& s = c.steps[i];
        os << i + 1 << "," << s.u << "," << s.v << "," << s.before << "," << s.after << ","
           << to_string(s.relation) << "," << to_string(s.witness) << "\n";
      }
      return;
    case OutputFormat::kTable:
      os << "graph " << to_graph6(g) << ": " << c.steps.size() << " deletion step"
         << (c.steps.size() == 1 ? "" : "s") << "\n";
      for (std::size_t i = 0; i < c.steps.size(); ++i) {
        const auto& s = c.steps[i];
        os << "  " << i + 1 << ". delete " << s.u << "-" << s.v << ": " << s.before << " -> " << s.after
           << "  " << to_string(s.relation) << " (" << to_string(s.witness) << ")\n";
      }
      os << "  spanning tree " << to_graph6(c.tree) << ", d = " << count(c.tree) << "\n";
      return;
  }
}

}  // namespace dissoc
