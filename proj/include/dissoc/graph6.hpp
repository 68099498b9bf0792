#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dissoc/graph.hpp"

namespace dissoc {

/// graph6: N(n) then the upper triangle read column by column
/// (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits per byte,
/// big-endian, each byte offset by 63. Orders above kMaxOrder are rejected.
enum class Graph6ErrorKind {
  kEmpty,
  kUnsupportedFormat,  // sparse6 / digraph6
  kMalformedHeader,
  kOrderTooLarge,
  kInvalidCharacter,
  kTruncated,
  kTrailingGarbage,
};

inline const char* to_string(Graph6ErrorKind k) {
  switch (k) {
    case Graph6ErrorKind::kEmpty: return "empty input";
    case Graph6ErrorKind::kUnsupportedFormat: return "unsupported format";
    case Graph6ErrorKind::kMalformedHeader: return "malformed header";
    case Graph6ErrorKind::kOrderTooLarge: return "order too large";
    case Graph6ErrorKind::kInvalidCharacter: return "invalid character";
    case Graph6ErrorKind::kTruncated: return "truncated bit vector";
    case Graph6ErrorKind::kTrailingGarbage: return "trailing garbage";
  }
  return "?";
}

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(Graph6ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string("graph6: ") + dissoc::to_string(kind) + ": " + detail),
        kind_(kind) {}
  Graph6ErrorKind kind() const { return kind_; }

 private:
  Graph6ErrorKind kind_;
};

namespace detail {
inline constexpr std::string_view kGraph6Header = ">>graph6<<";
}  // namespace detail

inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int nbits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

inline Graph from_graph6(std::string_view text) {
  using K = Graph6ErrorKind;
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(detail::kGraph6Header)) text.remove_prefix(detail::kGraph6Header.size());
  if (text.empty()) throw Graph6Error(K::kEmpty, "no data");
  if (text.starts_with(">>sparse6<<") || text.front() == ':')
    throw Graph6Error(K::kUnsupportedFormat, "sparse6 is not supported");
  if (text.starts_with(">>digraph6<<") || text.front() == '&')
    throw Graph6Error(K::kUnsupportedFormat, "digraph6 is not supported");

  const unsigned char head = static_cast<unsigned char>(text.front());
  if (head == 126)
    throw Graph6Error(K::kOrderTooLarge, "multi-byte order field (n >= 63) exceeds cap " +
                                             std::to_string(kMaxOrder));
  if (head < 63 || head > 126)
    throw Graph6Error(K::kMalformedHeader,
                      "byte " + std::to_string(static_cast<int>(head)) + " is not an order field");
  const int n = head - 63;
  if (n > kMaxOrder)
    throw Graph6Error(K::kOrderTooLarge,
                      "order " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxOrder));

  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  std::string_view body = text.substr(1);
  for (std::size_t i = 0; i < body.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(body[i]);
    if (c < 63 || c > 126)
      throw Graph6Error(K::kInvalidCharacter, "byte " + std::to_string(static_cast<int>(c)) +
                                                  " at offset " + std::to_string(i + 1));
  }
  if (body.size() < nbytes)
    throw Graph6Error(K::kTruncated, "expected " + std::to_string(nbytes) + " data bytes, got " +
                                         std::to_string(body.size()));
  if (body.size() > nbytes)
    throw Graph6Error(K::kTrailingGarbage, std::to_string(body.size() - nbytes) +
                                               " extra byte(s) after order-" + std::to_string(n) +
                                               " graph");

  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = static_cast<unsigned char>(body[k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (nbits % 6 != 0) {
    int last = static_cast<unsigned char>(body[nbytes - 1]) - 63;
    if (last & ((1 << (6 - nbits % 6)) - 1))
      throw Graph6Error(K::kTrailingGarbage, "nonzero padding bits in final byte");
  }
  return g;
}

/// One decoded line of a graph6 stream, or the error it produced.
struct Graph6Record {
  std::size_t line = 0;
  Graph graph;
};

struct Graph6Skip {
  std::size_t line = 0;
  std::string message;
};

struct Graph6ReadResult {
  std::vector<Graph6Record> graphs;
  std::vector<Graph6Skip> skipped;
};

class Graph6StreamError : public std::runtime_error {
 public:
  Graph6StreamError(std::size_t line, const Graph6Error& cause)
      : std::runtime_error("line " + std::to_string(line) + ": " + cause.what()),
        line_(line),
        kind_(cause.kind()) {}
  std::size_t line() const { return line_; }
  Graph6ErrorKind kind() const { return kind_; }

 private:
  std::size_t line_;
  Graph6ErrorKind kind_;
};

enum class ReadMode { kStrict, kLenient };

/// Newline-delimited graph6. Blank lines are ignored. Strict mode throws
/// Graph6StreamError on the first bad line; lenient mode records it and moves on.
inline Graph6ReadResult read_graph6_stream(std::istream& in, ReadMode mode = ReadMode::kStrict) {
  Graph6ReadResult out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.graphs.push_back({lineno, from_graph6(line)});
    } catch (const Graph6Error& e) {
      if (mode == ReadMode::kStrict) throw Graph6StreamError(lineno, e);
      out.skipped.push_back({lineno, e.what()});
    }
  }
  return out;
}

}  // namespace dissoc
