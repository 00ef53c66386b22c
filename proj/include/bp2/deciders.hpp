#pragma once

// Polynomial-time decision procedures for one- and two-biclique partitions.
//
// A set of at least two vertices carries a spanning biclique exactly when the
// complement of the graph it induces is disconnected; every test below is
// built on that equivalence and on plain connectivity.

#include <optional>
#include <stdexcept>
#include <string>

#include "bp2/graph.hpp"
#include "bp2/oracle.hpp"
#include "bp2/partition.hpp"

namespace bp2 {

namespace detail {

inline void require_part(const Graph& g, VertexSet p, const char* what) {
  if (p.empty()) throw InputError(std::string(what) + ": empty part");
  if (!p.is_subset_of(g.vertices())) {
    throw InputError(std::string(what) + ": labels " + to_string(p - g.vertices()) +
                     " not in graph");
  }
}

}  // namespace detail

/// Sides of a spanning biclique of G[p], or absent. The left side is the
/// complement component holding the smallest label of p.
inline std::optional<Bipartition> part_is_biclique(const Graph& g, VertexSet p) {
  detail::require_part(g, p, "part_is_biclique");
  if (p.size() == 1) return Bipartition{p, {}};
  const Graph co = complement(induced(g, p));
  const VertexSet left = reachable_within(co, p.min(), p);
  if (left == p) return std::nullopt;
  return Bipartition{left, p - left};
}

/// Smallest label of p adjacent to every other member of p.
inline std::optional<Vertex> part_is_star(const Graph& g, VertexSet p) {
  detail::require_part(g, p, "part_is_star");
  for (Vertex c : p) {
    if ((p - VertexSet::single(c)).is_subset_of(g.neighbors(c))) return c;
  }
  return std::nullopt;
}

/// One biclique covers V: n = 1 or the complement is disconnected.
inline bool is_bp1(const Graph& g) {
  if (g.order() == 0) throw InputError("is_bp1: empty graph");
  return g.order() == 1 || !is_connected(complement(g));
}

/// Which clause placed a graph in BP2.
enum class Bp2Clause {
  none,               // not in BP2
  small,              // K1, K2 or 2K1
  complement_disconnected,
  complement_cut_vertex,
  disconnected_vertex_cut,
};

inline const char* clause_name(Bp2Clause c) {
  switch (c) {
    case Bp2Clause::none: return "none";
    case Bp2Clause::small: return "small";
    case Bp2Clause::complement_disconnected: return "complement-disconnected";
    case Bp2Clause::complement_cut_vertex: return "complement-cut-vertex";
    case Bp2Clause::disconnected_vertex_cut: return "disconnected-vertex-cut";
  }
  return "?";
}

struct Bp2Evidence {
  Bp2Clause clause = Bp2Clause::none;
  /// Cut vertex or disconnected vertex cut of the complement, when that clause fired.
  VertexSet cut;

  bool member() const { return clause != Bp2Clause::none; }
};

/// BP2 via the complement characterization. The last clause (a disconnected
/// vertex cut of the complement) has no known polynomial test and falls back
/// to exhaustive cut search, capped at `cut_search_cap` vertices.
inline Bp2Evidence classify_bp2(const Graph& g, int cut_search_cap = kOracleCap) {
  if (g.order() == 0) throw InputError("decide_bp2: empty graph");
  if (g.order() <= 2) return {Bp2Clause::small, {}};
  const Graph co = complement(g);
  if (!is_connected(co)) return {Bp2Clause::complement_disconnected, {}};
  const VertexSet cut_vertices = articulation_points(co);
  if (!cut_vertices.empty()) {
    return {Bp2Clause::complement_cut_vertex, VertexSet::single(cut_vertices.min())};
  }
  const auto cuts = disconnected_vertex_cuts(co, CutSearch::first_only, cut_search_cap);
  if (!cuts.empty()) return {Bp2Clause::disconnected_vertex_cut, cuts.front()};
  return {};
}

inline bool decide_bp2(const Graph& g, int cut_search_cap = kOracleCap) {
  return classify_bp2(g, cut_search_cap).member();
}

/// Star-biclique partition by the per-center case analysis.
///
/// For each candidate center v (ascending): a disconnected graph must have
/// exactly two components, v's being a star at v and the other a biclique;
/// otherwise try star {v}, then star N[v], then star {v} ∪ S where S holds
/// the neighbours of v with a non-neighbour outside N[v]. The analysis is
/// complete for graphs in BP2 \ BP1; every witness returned is valid for any
/// input.
inline std::optional<StarBicliqueWitness> star_biclique_poly(const Graph& g) {
  if (g.order() < 2) throw PreconditionError("star_biclique_poly: needs at least 2 vertices");
  const VertexSet all = g.vertices();

  if (!is_connected(g)) {
    // Each nontrivial part of such a partition induces a connected graph.
    const auto comps = components(g);
    if (comps.size() != 2) return std::nullopt;
    for (Vertex v : all) {
      const VertexSet own = comps[0].contains(v) ? comps[0] : comps[1];
      const VertexSet other = all - own;
      if (!(own - VertexSet::single(v)).is_subset_of(g.neighbors(v))) continue;
      if (auto sides = part_is_biclique(g, other)) {
        return StarBicliqueWitness{own, v, other, *sides};
      }
    }
    return std::nullopt;
  }

  for (Vertex v : all) {
    const VertexSet single = VertexSet::single(v);
    const VertexSet rest = all - single;
    if (is_bp1(induced(g, rest))) {
      return StarBicliqueWitness{single, v, rest, *part_is_biclique(g, rest)};
    }

    const VertexSet a = g.neighbors(v);
    const VertexSet b = rest - a;
    if (b.empty()) continue;  // v is universal, so g is in BP1
    if (is_bp1(induced(g, b))) {
      return StarBicliqueWitness{a | single, v, b, *part_is_biclique(g, b)};
    }

    VertexSet s;
    for (Vertex x : a) {
      if (!b.is_subset_of(g.neighbors(x))) s.insert(x);
    }
    if (s == a) continue;
    if (s.empty()) {
      // No complement edge between A and B would make complement(g - v) disconnected.
      throw std::logic_error("star_biclique_poly: empty S after G - v failed the BP1 test");
    }
    const VertexSet star = s | single;
    return StarBicliqueWitness{star, v, all - star, Bipartition{a - s, b}};
  }
  return std::nullopt;
}

/// Necessary conditions for being outside BP2, read off the complement:
/// every open neighbourhood induces a connected graph on at least two
/// vertices, every eccentricity is at most two, and every nonadjacent pair
/// has a common neighbour.
inline bool nbp2_necessary(const Graph& g) {
  if (g.order() < 3) throw PreconditionError("nbp2_necessary: needs at least 3 vertices");
  const Graph co = complement(g);
  const VertexSet all = co.vertices();
  for (Vertex x : all) {
    const VertexSet nx = co.neighbors(x);
    if (nx.size() < 2 || !is_connected_within(co, nx)) return false;

    VertexSet two_step = nx | VertexSet::single(x);
    for (Vertex y : nx) two_step |= co.neighbors(y);
    if (two_step != all) return false;

    for (Vertex y : all - nx - VertexSet::single(x)) {
      if (!nx.intersects(co.neighbors(y))) return false;
    }
  }
  return true;
}

}  // namespace bp2
