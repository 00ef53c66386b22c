#pragma once

// Witness types shared by the polynomial deciders, the oracles and the
// certificate checker.

#include <optional>

#include "bp2/graph.hpp"

namespace bp2 {

/// Two sides of a spanning complete bipartite subgraph. A singleton part is
/// recorded as ({v}, {}).
struct Bipartition {
  VertexSet left;
  VertexSet right;

  VertexSet members() const { return left | right; }
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// Whether `sides` witness that G[members] contains a spanning biclique.
inline bool sides_witness_biclique(const Graph& g, const Bipartition& sides) {
  if (sides.left.intersects(sides.right)) return false;
  const VertexSet all = sides.members();
  if (all.empty() || !all.is_subset_of(g.vertices())) return false;
  if (all.size() == 1) return true;
  if (sides.left.empty() || sides.right.empty()) return false;
  for (Vertex x : sides.left) {
    if (!sides.right.is_subset_of(g.neighbors(x))) return false;
  }
  return true;
}

/// A partition of V into a star part (spanning star centered at `center`)
/// and a biclique part.
struct StarBicliqueWitness {
  VertexSet star;
  Vertex center = -1;
  VertexSet biclique;
  Bipartition biclique_sides;

  friend bool operator==(const StarBicliqueWitness&, const StarBicliqueWitness&) = default;
};

/// Checks every structural invariant of a star-biclique witness against g.
inline bool is_valid_witness(const Graph& g, const StarBicliqueWitness& w) {
  if (w.star.empty() || w.biclique.empty()) return false;
  if (w.star.intersects(w.biclique)) return false;
  if ((w.star | w.biclique) != g.vertices()) return false;
  if (!w.star.contains(w.center)) return false;
  if (!(w.star - VertexSet::single(w.center)).is_subset_of(g.neighbors(w.center))) return false;
  if (w.biclique_sides.members() != w.biclique) return false;
  return sides_witness_biclique(g, w.biclique_sides);
}

/// One or two parts covering V, each carrying its biclique sides.
struct TwoBicliquePartition {
  struct Part {
    VertexSet members;
    Bipartition sides;
    friend bool operator==(const Part&, const Part&) = default;
  };

  Part first;
  std::optional<Part> second;  // absent: a one-part (BP1) partition

  friend bool operator==(const TwoBicliquePartition&, const TwoBicliquePartition&) = default;
};

}  // namespace bp2
