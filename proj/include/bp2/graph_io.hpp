#pragma once

// Serialization, named constructions, seeded random graphs and exhaustive
// enumeration of labeled graphs.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bp2/errors.hpp"
#include "bp2/graph.hpp"

namespace bp2 {

inline constexpr int kGraph6MaxOrder = 62;
inline constexpr int kEnumerationCap = 8;

namespace detail {

/// Labels of g in ascending order; position i is the i-th vertex of any
/// relabeled output.
inline std::vector<Vertex> ordered_labels(const Graph& g) { return g.vertices().to_vector(); }

}  // namespace detail

/// graph6 text for g. Vertices are written in ascending label order, so a
/// graph with gaps in its labels comes back relabeled 0..n-1.
inline std::string g6_encode(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) {
    throw CapacityError("graph6: order " + std::to_string(n) + " exceeds " +
                        std::to_string(kGraph6MaxOrder));
  }
  const auto label = detail::ordered_labels(g);
  std::string out(1, static_cast<char>(n + 63));
  int group = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(label[i], label[j]) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

/// Parses one graph6 line; an optional ">>graph6<<" header is skipped.
inline Graph g6_decode(std::string_view text) {
  text = detail::trim(text);
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  if (text.empty()) throw InputError("graph6: empty input");
  for (char ch : text) {
    if (ch < 63 || ch > 126) throw InputError("graph6: byte out of range in \"" + std::string(text) + "\"");
  }
  if (text.front() == 126) throw CapacityError("graph6: orders above 62 are not supported");
  const int n = text.front() - 63;
  const int pairs = n * (n - 1) / 2;
  const std::size_t expected = 1 + static_cast<std::size_t>((pairs + 5) / 6);
  if (text.size() != expected) {
    throw InputError("graph6: expected " + std::to_string(expected) + " bytes for order " +
                     std::to_string(n) + ", got " + std::to_string(text.size()));
  }
  std::vector<Edge> edges;
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (pairs % 6 != 0) {
    const int byte = text.back() - 63;
    if ((byte & ((1 << (6 - pairs % 6)) - 1)) != 0) throw InputError("graph6: nonzero padding bits");
  }
  return make_graph(n, edges);
}

/// "n <count>" then one "u v" pair per line, pairs sorted. Labels are
/// rewritten to 0..n-1 in ascending order.
inline std::string edgelist_emit(const Graph& g) {
  const auto label = detail::ordered_labels(g);
  std::vector<int> pos(kMaxVertices, -1);
  for (std::size_t i = 0; i < label.size(); ++i) pos[label[i]] = static_cast<int>(i);
  std::string out = "n " + std::to_string(g.order());
  for (auto [u, v] : g.edges()) {
    out += "\n" + std::to_string(pos[u]) + " " + std::to_string(pos[v]);
  }
  return out;
}

inline Graph edgelist_parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<int> n;
  std::vector<Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = detail::trim(line);
    if (body.empty()) continue;
    std::istringstream fields{std::string(body)};
    const std::string where = "edge list line " + std::to_string(lineno) + ": ";
    if (!n) {
      std::string key;
      int count = -1;
      std::string extra;
      if (!(fields >> key >> count) || key != "n" || (fields >> extra)) {
        throw InputError(where + "expected \"n <count>\"");
      }
      if (count < 0) throw InputError(where + "negative vertex count");
      if (count > kMaxVertices) throw CapacityError(where + "order exceeds the 64-vertex cap");
      n = count;
      continue;
    }
    long long u = -1, v = -1;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra)) throw InputError(where + "expected \"u v\"");
    if (u < 0 || v < 0 || u >= *n || v >= *n) throw InputError(where + "label out of range");
    if (u == v) throw InputError(where + "self-loop at vertex " + std::to_string(u));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!n) throw InputError("edge list: missing \"n <count>\" header");
  return make_graph(*n, edges);
}

/// Standard constructions, labels ascending:
///   empty n | complete n | path n | cycle n | complete_bipartite a b |
///   star k (K_{1,k}, center 0) | disjoint_union-of-cycles l1 l2 ...
inline Graph named(std::string_view name, const std::vector<int>& params) {
  auto arity = [&](std::size_t want) {
    if (params.size() != want) {
      throw InputError(std::string(name) + " takes " + std::to_string(want) + " parameter(s)");
    }
    for (int p : params) {
      if (p < 0) throw InputError(std::string(name) + ": negative parameter");
    }
  };
  auto cycle_edges = [](int offset, int len, std::vector<Edge>& edges) {
    for (int i = 0; i < len; ++i) edges.emplace_back(offset + i, offset + (i + 1) % len);
  };
  std::vector<Edge> edges;
  if (name == "empty") {
    arity(1);
    return make_graph(params[0], {});
  }
  if (name == "complete") {
    arity(1);
    for (int j = 1; j < params[0]; ++j)
      for (int i = 0; i < j; ++i) edges.emplace_back(i, j);
    return make_graph(params[0], edges);
  }
  if (name == "path") {
    arity(1);
    for (int i = 0; i + 1 < params[0]; ++i) edges.emplace_back(i, i + 1);
    return make_graph(params[0], edges);
  }
  if (name == "cycle") {
    arity(1);
    if (params[0] < 3) throw InputError("cycle needs at least 3 vertices");
    cycle_edges(0, params[0], edges);
    return make_graph(params[0], edges);
  }
  if (name == "complete_bipartite") {
    arity(2);
    const int a = params[0], b = params[1];
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return make_graph(a + b, edges);
  }
  if (name == "star") {
    arity(1);
    for (int i = 1; i <= params[0]; ++i) edges.emplace_back(0, i);
    return make_graph(params[0] + 1, edges);
  }
  if (name == "disjoint_union-of-cycles" || name == "cycles") {
    if (params.empty()) throw InputError("disjoint_union-of-cycles needs at least one length");
    int offset = 0;
    for (int len : params) {
      if (len < 3) throw InputError("cycle lengths must be at least 3");
      if (offset + len > kMaxVertices) throw CapacityError("cycle union exceeds 64 vertices");
      cycle_edges(offset, len, edges);
      offset += len;
    }
    return make_graph(offset, edges);
  }
  throw InputError("unknown graph name \"" + std::string(name) + "\"");
}

/// G(n, p) from a seeded mt19937_64. Pairs are drawn in graph6 order and an
/// edge is kept when the top 53 bits, read as a fraction of 1, fall below p;
/// the result depends only on (n, p, seed).
inline Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 0 || n > kMaxVertices) throw CapacityError("random_graph: order out of range");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("random_graph: p must lie in [0, 1]");
  std::mt19937_64 gen(seed);
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
      if (u < p) edges.emplace_back(i, j);
    }
  }
  return make_graph(n, edges);
}

/// Number of labeled graphs on n vertices, 2^(n(n-1)/2).
inline std::uint64_t labeled_graph_count(int n) {
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

/// The labeled graph at `index`: the upper triangle, read in graph6 pair
/// order (0,1), (0,2), (1,2), (0,3), ..., is the binary expansion of index,
/// most significant bit first.
inline Graph labeled_graph(int n, std::uint64_t index) {
  const int pairs = n * (n - 1) / 2;
  std::array<std::uint64_t, kMaxVertices> rows{};
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if ((index >> (pairs - 1 - k)) & 1) {
        rows[i] |= VertexSet::bit(j);
        rows[j] |= VertexSet::bit(i);
      }
    }
  }
  return graph_from_rows(VertexSet::range(n), rows);
}

/// Every labeled graph of one order, or a contiguous index range of them.
class GraphStream {
 public:
  explicit GraphStream(int n) : GraphStream(n, 0, checked_count(n)) {}
  GraphStream(int n, std::uint64_t begin, std::uint64_t end)
      : order_(n), cursor_(begin), end_(std::min(end, checked_count(n))) {}

  int order() const { return order_; }
  std::uint64_t cursor() const { return cursor_; }
  std::uint64_t end() const { return end_; }

  std::optional<Graph> next() {
    if (cursor_ >= end_) return std::nullopt;
    return labeled_graph(order_, cursor_++);
  }

  /// Splits [cursor, end) into `parts` contiguous streams.
  std::vector<GraphStream> split(int parts) const {
    std::vector<GraphStream> out;
    const std::uint64_t total = end_ - cursor_;
    for (int p = 0; p < parts; ++p) {
      out.emplace_back(order_, cursor_ + total * p / parts, cursor_ + total * (p + 1) / parts);
    }
    return out;
  }

 private:
  static std::uint64_t checked_count(int n) {
    if (n < 1 || n > kEnumerationCap) {
      throw CapacityError("enumeration supports orders 1.." + std::to_string(kEnumerationCap));
    }
    return labeled_graph_count(n);
  }

  int order_;
  std::uint64_t cursor_;
  std::uint64_t end_;
};

inline GraphStream enumerate_labeled(int n) { return GraphStream(n); }

/// Smallest graph6 string over all relabelings (orders up to 7).
inline std::string canonical_g6(const Graph& g) {
  const int n = g.order();
  if (n > 7) throw CapacityError("canonical_g6: orders above 7 are not supported");
  const auto label = detail::ordered_labels(g);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
      const auto pu = std::find(label.begin(), label.end(), u) - label.begin();
      const auto pv = std::find(label.begin(), label.end(), v) - label.begin();
      edges.emplace_back(perm[pu], perm[pv]);
    }
    std::string code = g6_encode(make_graph(n, edges));
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Graphs from text: an edge list when the first token is "n", otherwise
/// one graph6 string per nonblank line.
inline std::vector<Graph> read_graphs(std::string_view text) {
  std::istringstream probe{std::string(text)};
  std::string first;
  probe >> first;
  if (first == "n") return {edgelist_parse(text)};
  std::vector<Graph> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (detail::trim(line).empty()) continue;
    out.push_back(g6_decode(line));
  }
  return out;
}

}  // namespace bp2
