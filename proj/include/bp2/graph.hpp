#pragma once

// Labeled simple undirected graphs on at most 64 vertices.
//
// A Graph remembers the original labels of its vertices: deleting vertices or
// taking induced subgraphs never renumbers the survivors. Each adjacency row
// is one 64-bit word indexed by original label.

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bp2/errors.hpp"

namespace bp2 {

using Vertex = int;

inline constexpr int kMaxVertices = 64;

/// Set of original vertex labels, stored as a 64-bit mask.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members) {
    for (Vertex v : members) insert(v);
  }
  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }
  /// {0, 1, ..., n-1}
  static constexpr VertexSet range(int n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(Vertex v) { return from_bits(bit(v)); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Vertex v) const {
    return v >= 0 && v < kMaxVertices && (bits_ & bit(v)) != 0;
  }
  /// Smallest member; the set must be nonempty.
  constexpr Vertex min() const { return std::countr_zero(bits_); }

  void insert(Vertex v) {
    check_label(v);
    bits_ |= bit(v);
  }
  void erase(Vertex v) {
    if (v >= 0 && v < kMaxVertices) bits_ &= ~bit(v);
  }

  constexpr bool is_subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return from_bits(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return from_bits(a.bits_ & b.bits_);
  }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return from_bits(a.bits_ & ~b.bits_);
  }
  VertexSet& operator|=(VertexSet o) { return *this = *this | o; }
  VertexSet& operator&=(VertexSet o) { return *this = *this & o; }
  VertexSet& operator-=(VertexSet o) { return *this = *this - o; }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  /// Binary-encoding order (the canonical subset order used everywhere).
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) {
    return a.bits_ <=> b.bits_;
  }

  static constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

  static void check_label(Vertex v) {
    if (v < 0 || v >= kMaxVertices) {
      throw InputError("vertex label " + std::to_string(v) + " out of range");
    }
  }

 private:
  std::uint64_t bits_ = 0;
};

/// "{0, 2, 5}"
inline std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ", ";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

/// Space-separated labels, "0 2 5".
inline std::string join_labels(VertexSet s, const char* sep = " ") {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out += sep;
    out += std::to_string(v);
  }
  return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace detail

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple graph value. Vertices carry their original labels.
class Graph {
 public:
  Graph() = default;

  VertexSet vertices() const { return vertices_; }
  int order() const { return vertices_.size(); }
  bool contains(Vertex v) const { return vertices_.contains(v); }

  /// Open neighbourhood of a present vertex (no bounds check).
  VertexSet neighbors(Vertex v) const { return VertexSet::from_bits(adj_[v]); }
  bool adjacent(Vertex u, Vertex v) const {
    return contains(u) && (adj_[u] & VertexSet::bit(v)) != 0;
  }
  int degree(Vertex v) const { return std::popcount(adj_[v]); }

  int edge_count() const {
    int twice = 0;
    for (Vertex v : vertices_) twice += std::popcount(adj_[v]);
    return twice / 2;
  }

  /// Edges (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u : vertices_) {
      for (Vertex v : VertexSet::from_bits(adj_[u] & ~((VertexSet::bit(u) << 1) - 1))) {
        out.emplace_back(u, v);
      }
    }
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.vertices_ != b.vertices_) return false;
    for (Vertex v : a.vertices_) {
      if (a.adj_[v] != b.adj_[v]) return false;
    }
    return true;
  }

  // Construction goes through the free functions below; these keep the
  // symmetric/no-loop invariant.
  friend Graph make_graph(int n, const std::vector<Edge>& edges);
  friend Graph make_graph_on(VertexSet vertices, const std::vector<Edge>& edges);
  friend Graph complement(const Graph& g);
  friend Graph induced(const Graph& g, VertexSet a);
  friend Graph graph_from_rows(VertexSet vertices, const std::array<std::uint64_t, kMaxVertices>& rows);

 private:
  VertexSet vertices_;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

inline Graph make_graph_on(VertexSet vertices, const std::vector<Edge>& edges) {
  Graph g;
  g.vertices_ = vertices;
  for (auto [u, v] : edges) {
    if (!vertices.contains(u) || !vertices.contains(v)) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has a label outside the vertex set");
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    g.adj_[u] |= VertexSet::bit(v);
    g.adj_[v] |= VertexSet::bit(u);
  }
  return g;
}

/// Graph on labels 0..n-1. Duplicate edges collapse; (u,v) and (v,u) are the same edge.
inline Graph make_graph(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw InputError("negative vertex count");
  if (n > kMaxVertices) {
    throw CapacityError("graph order " + std::to_string(n) + " exceeds the 64-vertex cap");
  }
  return make_graph_on(VertexSet::range(n), edges);
}

/// Rows are masked to `vertices` and loops dropped; callers pass symmetric rows.
inline Graph graph_from_rows(VertexSet vertices,
                             const std::array<std::uint64_t, kMaxVertices>& rows) {
  Graph g;
  g.vertices_ = vertices;
  for (Vertex v : vertices) g.adj_[v] = rows[v] & vertices.bits() & ~VertexSet::bit(v);
  return g;
}

inline Graph complement(const Graph& g) {
  Graph out;
  out.vertices_ = g.vertices_;
  for (Vertex v : g.vertices_) {
    out.adj_[v] = g.vertices_.bits() & ~g.adj_[v] & ~VertexSet::bit(v);
  }
  return out;
}

/// G[A]. Throws InputError if A names a vertex not in g.
inline Graph induced(const Graph& g, VertexSet a) {
  if (!a.is_subset_of(g.vertices_)) {
    throw InputError("induced: labels " + to_string(a - g.vertices_) + " not in graph");
  }
  Graph out;
  out.vertices_ = a;
  for (Vertex v : a) out.adj_[v] = g.adj_[v] & a.bits();
  return out;
}

/// G - A.
inline Graph remove_vertices(const Graph& g, VertexSet a) {
  if (!a.is_subset_of(g.vertices())) {
    throw InputError("delete: labels " + to_string(a - g.vertices()) + " not in graph");
  }
  return induced(g, g.vertices() - a);
}

/// G - v.
inline Graph remove_vertex(const Graph& g, Vertex v) {
  VertexSet::check_label(v);
  return remove_vertices(g, VertexSet::single(v));
}

/// N(v), or N[v] when `closed`.
inline VertexSet neighborhood(const Graph& g, Vertex v, bool closed) {
  if (!g.contains(v)) throw InputError("unknown vertex " + std::to_string(v));
  VertexSet n = g.neighbors(v);
  if (closed) n.insert(v);
  return n;
}

/// Vertices reachable from `start` inside `within` (start must be in `within`).
inline VertexSet reachable_within(const Graph& g, Vertex start, VertexSet within) {
  std::uint64_t seen = VertexSet::bit(start);
  std::uint64_t frontier = seen;
  const std::uint64_t allowed = within.bits();
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (Vertex v : VertexSet::from_bits(frontier)) next |= g.neighbors(v).bits();
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return VertexSet::from_bits(seen);
}

/// Connected components, sorted by smallest member.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet rest = g.vertices();
  while (!rest.empty()) {
    VertexSet c = reachable_within(g, rest.min(), rest);
    out.push_back(c);
    rest -= c;
  }
  return out;
}

/// The empty graph counts as connected; so does K1.
inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  return reachable_within(g, g.vertices().min(), g.vertices()) == g.vertices();
}

/// Whether G[within] is connected, without materializing the subgraph.
inline bool is_connected_within(const Graph& g, VertexSet within) {
  if (within.size() <= 1) return true;
  return reachable_within(g, within.min(), within) == within;
}

namespace detail {

struct LowlinkState {
  const Graph* g;
  std::array<int, kMaxVertices> disc{};
  std::array<int, kMaxVertices> low{};
  int clock = 0;
  VertexSet cut;
};

inline void lowlink_dfs(LowlinkState& st, Vertex v, Vertex parent) {
  st.disc[v] = st.low[v] = ++st.clock;
  int children = 0;
  for (Vertex w : st.g->neighbors(v)) {
    if (st.disc[w] == 0) {
      ++children;
      lowlink_dfs(st, w, v);
      st.low[v] = std::min(st.low[v], st.low[w]);
      if (parent >= 0 && st.low[w] >= st.disc[v]) st.cut.insert(v);
    } else if (w != parent) {
      st.low[v] = std::min(st.low[v], st.disc[w]);
    }
  }
  if (parent < 0 && children > 1) st.cut.insert(v);
}

}  // namespace detail

/// Cut vertices, via the lowlink DFS. On a disconnected graph this returns the
/// vertices whose removal splits their own component.
inline VertexSet articulation_points(const Graph& g) {
  detail::LowlinkState st;
  st.g = &g;
  for (Vertex root : g.vertices()) {
    if (st.disc[root] == 0) detail::lowlink_dfs(st, root, -1);
  }
  return st.cut;
}

/// Edgeless graph on exactly three vertices.
inline bool is_three_k1(const Graph& g) { return g.order() == 3 && g.edge_count() == 0; }

}  // namespace bp2
