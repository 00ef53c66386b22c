#pragma once

// Exponential-time ground truth.
//
// Everything here decides membership straight from the definitions (search
// over bipartitions of the vertex set) and never calls the polynomial
// deciders. Subsets are visited in binary-encoding order: a subset's
// encoding is the bit mask of its labels, and the first hit in increasing
// encoding order wins. That fixes every witness these functions return.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bp2/errors.hpp"
#include "bp2/graph.hpp"
#include "bp2/partition.hpp"

namespace bp2 {

/// Default largest order the oracles accept.
inline constexpr int kOracleCap = 16;

inline void check_oracle_cap(const Graph& g, int max_order, const char* what) {
  if (g.order() > max_order) {
    throw CapacityError(std::string(what) + ": order " + std::to_string(g.order()) +
                        " exceeds oracle cap " + std::to_string(max_order));
  }
}

namespace detail {

using Mask = std::uint64_t;

/// Next nonempty submask of `m` after `s` in increasing order; 0 once exhausted.
constexpr Mask next_submask(Mask s, Mask m) { return (s - m) & m; }

/// g projected onto positions 0..k-1, position i holding the i-th smallest label.
class Compact {
 public:
  explicit Compact(const Graph& g) : n_(g.order()) {
    int i = 0;
    for (Vertex v : g.vertices()) label_[i++] = v;
    for (int a = 0; a < n_; ++a) {
      Mask row = 0;
      for (int b = 0; b < n_; ++b) {
        if (g.adjacent(label_[a], label_[b])) row |= Mask{1} << b;
      }
      adj_[a] = row;
    }
  }

  int order() const { return n_; }
  Mask full() const { return n_ >= 64 ? ~Mask{0} : (Mask{1} << n_) - 1; }
  Mask row(int i) const { return adj_[i]; }
  Vertex label(int i) const { return label_[i]; }

  VertexSet labels_of(Mask m) const {
    VertexSet out;
    for (; m != 0; m &= m - 1) out.insert(label_[std::countr_zero(m)]);
    return out;
  }
  /// Labels absent from the graph are silently dropped.
  Mask mask_of(VertexSet s) const {
    Mask out = 0;
    for (int i = 0; i < n_; ++i) {
      if (s.contains(label_[i])) out |= Mask{1} << i;
    }
    return out;
  }

  /// Smallest c in m adjacent to every other member of m, or -1.
  int star_center(Mask m) const {
    for (Mask r = m; r != 0; r &= r - 1) {
      const int c = std::countr_zero(r);
      if ((m & ~adj_[c] & ~(Mask{1} << c)) == 0) return c;
    }
    return -1;
  }

 private:
  int n_ = 0;
  std::array<Vertex, kMaxVertices> label_{};
  std::array<Mask, kMaxVertices> adj_{};
};

/// common[S] = positions adjacent to every member of S; common[0] = everything.
inline std::vector<Mask> common_neighbors(const Compact& c) {
  std::vector<Mask> common(std::size_t{1} << c.order());
  common[0] = c.full();
  for (Mask s = 1; s < common.size(); ++s) {
    common[s] = common[s & (s - 1)] & c.row(std::countr_zero(s));
  }
  return common;
}

/// First proper nonempty A ⊂ m (increasing order) with every A × (m∖A) pair an edge.
inline std::optional<Mask> first_complete_split(const std::vector<Mask>& common, Mask m) {
  for (Mask a = next_submask(0, m); a != m && a != 0; a = next_submask(a, m)) {
    if (((m & ~a) & ~common[a]) == 0) return a;
  }
  return std::nullopt;
}

/// Sides of a biclique part, or absent. Singletons give ({v}, {}).
inline std::optional<Bipartition> biclique_sides(const Compact& c, const std::vector<Mask>& common,
                                                 Mask m) {
  if (std::popcount(m) == 1) return Bipartition{c.labels_of(m), {}};
  if (auto a = first_complete_split(common, m)) {
    return Bipartition{c.labels_of(*a), c.labels_of(m & ~*a)};
  }
  return std::nullopt;
}

}  // namespace detail

/// Membership tables over every vertex subset of one graph.
///
/// Built once in O(3^n); afterwards BP1, BP2, star and star-biclique
/// membership of any induced subgraph is a lookup. Indexed by compact masks
/// (bit i = i-th smallest label); VertexSet overloads translate.
class SubsetTables {
 public:
  using Mask = detail::Mask;

  explicit SubsetTables(const Graph& g, int max_order = kOracleCap)
      : compact_((check_oracle_cap(g, max_order, "subset tables"), g)),
        common_(detail::common_neighbors(compact_)),
        flags_(common_.size(), 0) {
    const Mask full = compact_.full();
    // Membership in BP1 only depends on proper subsets, so increasing order works.
    for (Mask m = 0; m <= full; ++m) {
      std::uint8_t f = 0;
      const int size = std::popcount(m);
      if (size <= 1 || has_complete_split(m)) f |= kBp1;
      if (size >= 1 && compact_.star_center(m) >= 0) f |= kStar;
      if ((f & kBp1) || has_two_part_cover(m)) f |= kBp2;
      if (size >= 2 && has_star_biclique(m)) f |= kStarBiclique;
      flags_[m] = f;
      if (m == full) break;
    }
  }

  const detail::Compact& compact() const { return compact_; }
  const std::vector<Mask>& common() const { return common_; }
  int order() const { return compact_.order(); }
  Mask full() const { return compact_.full(); }

  // The empty set counts as BP1 and BP2: zero bicliques cover it.
  bool bp1(Mask m) const { return (flags_[m] & kBp1) != 0; }
  bool bp2(Mask m) const { return (flags_[m] & kBp2) != 0; }
  bool star(Mask m) const { return (flags_[m] & kStar) != 0; }
  bool star_biclique(Mask m) const { return (flags_[m] & kStarBiclique) != 0; }

  bool bp2_not_bp1(Mask m) const { return bp2(m) && !bp1(m); }
  /// Outside BP2 (only possible with three or more vertices).
  bool not_bp2(Mask m) const { return !bp2(m); }

  Mask mask_of(VertexSet s) const { return compact_.mask_of(s); }
  VertexSet labels_of(Mask m) const { return compact_.labels_of(m); }

 private:
  static constexpr std::uint8_t kBp1 = 1, kBp2 = 2, kStar = 4, kStarBiclique = 8;

  // Bipartitions are unordered, so pin the lowest member to side A.
  bool has_complete_split(Mask m) const {
    const Mask low = m & (~m + 1);
    const Mask rest = m & ~low;
    for (Mask s = 0;; s = detail::next_submask(s, rest)) {
      const Mask a = low | s;
      if (a != m && ((m & ~a) & ~common_[a]) == 0) return true;
      if (s == rest) break;
    }
    return false;
  }

  bool has_two_part_cover(Mask m) const {
    const Mask low = m & (~m + 1);
    const Mask rest = m & ~low;
    for (Mask s = 0;; s = detail::next_submask(s, rest)) {
      const Mask p = low | s;
      if (p != m && bp1(p) && bp1(m & ~p)) return true;
      if (s == rest) break;
    }
    return false;
  }

  bool has_star_biclique(Mask m) const {
    for (Mask p = detail::next_submask(0, m); p != m && p != 0; p = detail::next_submask(p, m)) {
      if (star(p) && bp1(m & ~p)) return true;
    }
    return false;
  }

  detail::Compact compact_;
  std::vector<Mask> common_;
  std::vector<std::uint8_t> flags_;
};

/// BP1 by definition: a bipartition [A, B] with every A–B pair an edge.
/// K1 gives the singleton witness.
inline std::optional<Bipartition> bp1_oracle(const Graph& g, int max_order = kOracleCap) {
  if (g.order() == 0) throw InputError("bp1_oracle: empty graph");
  check_oracle_cap(g, max_order, "bp1_oracle");
  const detail::Compact c(g);
  return detail::biclique_sides(c, detail::common_neighbors(c), c.full());
}

/// BP2 by definition: a one-part cover, else the first bipartition [P1, P2]
/// with both parts BP1.
inline std::optional<TwoBicliquePartition> bp2_oracle(const Graph& g,
                                                      int max_order = kOracleCap) {
  if (g.order() == 0) throw InputError("bp2_oracle: empty graph");
  check_oracle_cap(g, max_order, "bp2_oracle");
  const detail::Compact c(g);
  const auto common = detail::common_neighbors(c);
  const detail::Mask full = c.full();
  if (auto sides = detail::biclique_sides(c, common, full)) {
    return TwoBicliquePartition{{g.vertices(), *sides}, std::nullopt};
  }
  for (auto p = detail::next_submask(0, full); p != full && p != 0;
       p = detail::next_submask(p, full)) {
    auto first = detail::biclique_sides(c, common, p);
    if (!first) continue;
    auto second = detail::biclique_sides(c, common, full & ~p);
    if (!second) continue;
    return TwoBicliquePartition{{c.labels_of(p), *first},
                                TwoBicliquePartition::Part{c.labels_of(full & ~p), *second}};
  }
  return std::nullopt;
}

/// Exhaustive star-biclique search over ordered bipartitions [star, biclique].
inline std::optional<StarBicliqueWitness> star_biclique_oracle(const Graph& g,
                                                               int max_order = kOracleCap) {
  if (g.order() < 2) throw PreconditionError("star_biclique_oracle: needs at least 2 vertices");
  check_oracle_cap(g, max_order, "star_biclique_oracle");
  const detail::Compact c(g);
  const auto common = detail::common_neighbors(c);
  const detail::Mask full = c.full();
  for (auto p = detail::next_submask(0, full); p != full && p != 0;
       p = detail::next_submask(p, full)) {
    const int center = c.star_center(p);
    if (center < 0) continue;
    auto sides = detail::biclique_sides(c, common, full & ~p);
    if (!sides) continue;
    return StarBicliqueWitness{c.labels_of(p), c.label(center), c.labels_of(full & ~p), *sides};
  }
  return std::nullopt;
}

enum class CutSearch { all, first_only };

/// Vertex cuts X (2 <= |X| <= n-2) with both G - X and G[X] disconnected,
/// in increasing encoding order.
inline std::vector<VertexSet> disconnected_vertex_cuts(const Graph& g,
                                                       CutSearch mode = CutSearch::all,
                                                       int max_order = kOracleCap) {
  if (!is_connected(g)) throw PreconditionError("disconnected_vertex_cuts: graph is disconnected");
  check_oracle_cap(g, max_order, "disconnected_vertex_cuts");
  std::vector<VertexSet> out;
  const int n = g.order();
  const std::uint64_t all = g.vertices().bits();
  for (std::uint64_t x = detail::next_submask(0, all); x != 0; x = detail::next_submask(x, all)) {
    const VertexSet cut = VertexSet::from_bits(x);
    const int size = cut.size();
    if (size < 2 || size > n - 2) continue;
    if (is_connected_within(g, cut)) continue;
    if (is_connected_within(g, g.vertices() - cut)) continue;
    out.push_back(cut);
    if (mode == CutSearch::first_only) break;
  }
  return out;
}

/// Largest A with G[A] in BP2: decreasing size, increasing encoding within a size.
inline VertexSet max_bp2_subset(const SubsetTables& t) {
  if (t.order() < 2) throw PreconditionError("max_bp2_subset: needs at least 2 vertices");
  const detail::Mask full = t.full();
  for (int k = t.order(); k >= 1; --k) {
    for (detail::Mask m = 0;; ++m) {
      if (std::popcount(m) == k && t.bp2(m)) return t.labels_of(m);
      if (m == full) break;
    }
  }
  throw std::logic_error("max_bp2_subset: no BP2 subset (unreachable)");
}

inline VertexSet max_bp2_subset(const Graph& g, int max_order = kOracleCap) {
  if (g.order() < 2) throw PreconditionError("max_bp2_subset: needs at least 2 vertices");
  return max_bp2_subset(SubsetTables(g, max_order));
}

/// B ⊆ A of largest size such that G[B] and G[A∖B] are both BP1, C = A∖B nonempty.
struct BicliqueSplit {
  VertexSet b;
  VertexSet c;
  friend bool operator==(const BicliqueSplit&, const BicliqueSplit&) = default;
};

inline BicliqueSplit max_bp1_split(const SubsetTables& t, VertexSet a) {
  const detail::Mask am = t.mask_of(a);
  if (t.labels_of(am) != a) throw InputError("max_bp1_split: labels outside the graph");
  if (!t.bp2_not_bp1(am)) {
    throw PreconditionError("max_bp1_split: G[A] is not in BP2 \\ BP1");
  }
  std::optional<detail::Mask> best;
  for (auto b = detail::next_submask(0, am); b != am && b != 0; b = detail::next_submask(b, am)) {
    if (best && std::popcount(b) <= std::popcount(*best)) continue;
    if (t.bp1(b) && t.bp1(am & ~b)) best = b;
  }
  // G[A] in BP2 \ BP1 guarantees a two-part split.
  return {t.labels_of(*best), t.labels_of(am & ~*best)};
}

inline BicliqueSplit max_bp1_split(const Graph& g, VertexSet a, int max_order = kOracleCap) {
  if (!a.is_subset_of(g.vertices())) throw InputError("max_bp1_split: labels outside the graph");
  return max_bp1_split(SubsetTables(g, max_order), a);
}

/// The two families a deletion sequence can be safe for.
enum class Family { bp2_not_bp1, not_bp2 };

inline const char* family_name(Family f) {
  return f == Family::bp2_not_bp1 ? "BP2\\BP1" : "not-BP2";
}

/// Throws InputError unless `seq` lists distinct labels of g.
inline void check_sequence_labels(const Graph& g, const std::vector<Vertex>& seq) {
  VertexSet seen;
  for (Vertex v : seq) {
    if (!g.contains(v)) throw InputError("sequence label " + std::to_string(v) + " not in graph");
    if (seen.contains(v)) throw InputError("sequence repeats label " + std::to_string(v));
    seen.insert(v);
  }
}

/// Length of the longest prefix whose deletion keeps the graph in `family`
/// at every step, counting G itself as prefix 0. Returns |seq| + 1 when the
/// whole sequence is safe, 0 when G itself is outside the family.
inline std::size_t safe_prefix_count(const SubsetTables& t, const std::vector<Vertex>& seq,
                                     Family family) {
  auto member = [&](detail::Mask m) {
    return family == Family::bp2_not_bp1 ? t.bp2_not_bp1(m) : t.not_bp2(m);
  };
  detail::Mask m = t.full();
  if (!member(m)) return 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    m &= ~t.mask_of(VertexSet::single(seq[i]));
    if (!member(m)) return i + 1;
  }
  return seq.size() + 1;
}

/// Every prefix deletion G_0..G_k stays in `family` (decided by oracle).
inline bool safe_check(const SubsetTables& t, const std::vector<Vertex>& seq, Family family) {
  return safe_prefix_count(t, seq, family) == seq.size() + 1;
}

inline bool safe_check(const Graph& g, const std::vector<Vertex>& seq, Family family,
                       int max_order = kOracleCap) {
  check_sequence_labels(g, seq);
  return safe_check(SubsetTables(g, max_order), seq, family);
}

/// Depth of the first star-biclique graph reached by deleting vertices, over
/// every deletion order.
struct DeletionDepthReport {
  int min_depth = 0;
  int max_depth = 0;
  bool uniform = true;
  friend bool operator==(const DeletionDepthReport&, const DeletionDepthReport&) = default;
};

inline DeletionDepthReport deletion_depths(const SubsetTables& t) {
  const detail::Mask full = t.full();
  if (!t.bp2_not_bp1(full)) throw PreconditionError("deletion_depths: graph is not in BP2 \\ BP1");
  // Every 2-vertex graph splits into two singletons, so the recursion bottoms out.
  std::vector<std::pair<std::int8_t, std::int8_t>> depth(std::size_t{full} + 1, {-1, -1});
  for (detail::Mask m = 0;; ++m) {
    if (std::popcount(m) >= 2) {
      if (t.star_biclique(m)) {
        depth[m] = {0, 0};
      } else {
        std::int8_t lo = 127, hi = -1;
        for (detail::Mask r = m; r != 0; r &= r - 1) {
          const auto& sub = depth[m & ~(r & (~r + 1))];
          lo = std::min<std::int8_t>(lo, sub.first + 1);
          hi = std::max<std::int8_t>(hi, sub.second + 1);
        }
        depth[m] = {lo, hi};
      }
    }
    if (m == full) break;
  }
  const auto [lo, hi] = depth[full];
  return {lo, hi, lo == hi};
}

inline DeletionDepthReport deletion_depths(const Graph& g, int max_order = kOracleCap) {
  return deletion_depths(SubsetTables(g, max_order));
}

}  // namespace bp2
