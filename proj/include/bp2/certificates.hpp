#pragma once

// Certificates for both sides of the two-biclique question.
//
// Membership is certified by an explicit partition (checked in polynomial
// time). Non-membership is certified by a deletion sequence of n-3 vertices,
// checked by the star-biclique verifier: delete the sequence one vertex at a
// time, reject as soon as a star-biclique partition appears, accept when the
// edgeless 3-vertex graph is reached.

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bp2/deciders.hpp"
#include "bp2/errors.hpp"
#include "bp2/graph.hpp"
#include "bp2/oracle.hpp"
#include "bp2/partition.hpp"

namespace bp2 {

/// Vertex deletion order, by original label.
struct SafeSequence {
  std::vector<Vertex> order;
  friend bool operator==(const SafeSequence&, const SafeSequence&) = default;
};

struct Uncertifiable {
  std::string reason;
  friend bool operator==(const Uncertifiable&, const Uncertifiable&) = default;
};

using Certificate = std::variant<TwoBicliquePartition, SafeSequence, Uncertifiable>;

/// Accept/reject with a human-readable reason on rejection.
struct Verdict {
  bool accepted = false;
  std::string reason;

  static Verdict accept() { return {true, {}}; }
  static Verdict reject(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return accepted; }
};

/// Checks a membership certificate: the parts partition V and each part's
/// recorded sides span a complete bipartite subgraph (or a single vertex).
inline Verdict check_bp2_cert(const Graph& g, const TwoBicliquePartition& cert) {
  std::vector<const TwoBicliquePartition::Part*> parts{&cert.first};
  if (cert.second) parts.push_back(&*cert.second);

  VertexSet covered;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& part = *parts[i];
    const std::string which = "part " + std::to_string(i + 1);
    if (part.members.empty()) return Verdict::reject(which + " is empty");
    if (!part.members.is_subset_of(g.vertices())) {
      return Verdict::reject(which + " has labels outside the graph: " +
                             to_string(part.members - g.vertices()));
    }
    if (part.members.intersects(covered)) return Verdict::reject(which + " overlaps an earlier part");
    covered |= part.members;
    if (part.sides.left.intersects(part.sides.right)) {
      return Verdict::reject(which + " has overlapping sides");
    }
    if (part.sides.members() != part.members) {
      return Verdict::reject(which + " sides do not match its members");
    }
    if (!sides_witness_biclique(g, part.sides)) {
      return Verdict::reject(which + " sides are not a complete bipartite subgraph");
    }
  }
  if (covered != g.vertices()) {
    return Verdict::reject("parts do not cover vertices " + to_string(g.vertices() - covered));
  }
  return Verdict::accept();
}

/// Why the safe-sequence construction gave up.
struct SequenceFailure {
  std::string step;
  std::string detail;
  /// The constructed sequence, when construction got that far.
  std::vector<Vertex> candidate;
  /// Length of the first prefix whose deletion leaves the family.
  std::optional<std::size_t> first_unsafe_prefix;
};

using SequenceResult = std::variant<SafeSequence, SequenceFailure>;

namespace detail {

inline void append_ascending(std::vector<Vertex>& out, VertexSet s) {
  for (Vertex v : s) out.push_back(v);
}

}  // namespace detail

/// Builds a deletion sequence for a graph outside BP2 from extremal subsets:
///   A    largest vertex set inducing a BP2 graph, v the smallest label outside it;
///   pi1  the rest of V \ (A ∪ {v});
///   B, C the largest-B split of A into two BP1 parts;
///   pi2  C's neighbours of v, then C's other vertices except the smallest
///        non-neighbour u;
///   pi3  B's neighbours of v or u, then B's other vertices except the
///        smallest remaining one w.
/// Ties go to the smallest label. The result is checked against the oracle
/// and returned only if every prefix deletion stays outside BP2.
inline SequenceResult gen_safe_sequence(const SubsetTables& t) {
  const auto fail = [](std::string step, std::string detail, std::vector<Vertex> candidate = {},
                       std::optional<std::size_t> prefix = std::nullopt) {
    return SequenceResult{SequenceFailure{std::move(step), std::move(detail),
                                          std::move(candidate), prefix}};
  };
  if (t.order() < 3) throw PreconditionError("gen_safe_sequence: needs at least 3 vertices");
  if (t.bp2(t.full())) throw PreconditionError("gen_safe_sequence: graph is in BP2");

  const detail::Compact& c = t.compact();
  const VertexSet all = t.labels_of(t.full());
  auto neighbors = [&](Vertex x) {
    const detail::Mask row = c.row(std::countr_zero(t.mask_of(VertexSet::single(x))));
    return t.labels_of(row);
  };

  const VertexSet a = max_bp2_subset(t);
  const Vertex v = (all - a).min();
  std::vector<Vertex> seq;
  detail::append_ascending(seq, all - a - VertexSet::single(v));

  if (!t.bp2_not_bp1(t.mask_of(a))) {
    return fail("split A", "G[A] = " + to_string(a) + " is not in BP2\\BP1");
  }
  const BicliqueSplit split = max_bp1_split(t, a);

  const VertexSet nv = neighbors(v);
  detail::append_ascending(seq, split.c & nv);
  const VertexSet c_far = split.c - nv;
  if (c_far.empty()) {
    return fail("choose u", "every vertex of C = " + to_string(split.c) + " is adjacent to v = " +
                                std::to_string(v));
  }
  const Vertex u = c_far.min();
  detail::append_ascending(seq, c_far - VertexSet::single(u));

  const VertexSet near_vu = split.b & (nv | neighbors(u));
  detail::append_ascending(seq, near_vu);
  const VertexSet b_far = split.b - near_vu;
  if (b_far.empty()) {
    return fail("choose w", "every vertex of B = " + to_string(split.b) +
                                " is adjacent to v or u");
  }
  const Vertex w = b_far.min();
  detail::append_ascending(seq, b_far - VertexSet::single(w));

  if (static_cast<int>(seq.size()) != t.order() - 3) {
    return fail("length", "sequence has " + std::to_string(seq.size()) + " vertices, expected " +
                              std::to_string(t.order() - 3), seq);
  }
  const std::size_t safe = safe_prefix_count(t, seq, Family::not_bp2);
  if (safe != seq.size() + 1) {
    return fail("validate", "deleting the first " + std::to_string(safe) +
                                " vertices leaves a graph in BP2", seq, safe);
  }
  return SafeSequence{std::move(seq)};
}

inline SequenceResult gen_safe_sequence(const Graph& g, int max_order = kOracleCap) {
  if (g.order() < 3) throw PreconditionError("gen_safe_sequence: needs at least 3 vertices");
  return gen_safe_sequence(SubsetTables(g, max_order));
}

inline std::string describe(const SequenceFailure& f) {
  return "safe-sequence construction failed at step '" + f.step + "': " + f.detail;
}

/// Polynomial verifier for non-membership. Total: malformed input is a
/// rejection, never an exception. Runs at most n-2 rounds, each one
/// star-biclique test plus one vertex deletion.
inline Verdict verify_nbp2(const Graph& g, const SafeSequence& seq) {
  const int n = g.order();
  if (n < 3) return Verdict::reject("graph has fewer than 3 vertices");
  VertexSet seen;
  for (Vertex v : seq.order) {
    if (!g.contains(v)) return Verdict::reject("sequence label " + std::to_string(v) + " not in graph");
    if (seen.contains(v)) return Verdict::reject("sequence repeats label " + std::to_string(v));
    seen.insert(v);
  }
  if (static_cast<int>(seq.order.size()) != n - 3) {
    return Verdict::reject("sequence has length " + std::to_string(seq.order.size()) +
                           ", expected n-3 = " + std::to_string(n - 3));
  }
  if (is_bp1(g)) return Verdict::reject("graph is in BP1");

  Graph current = g;
  std::size_t next = 0;
  for (int round = 0; round <= n - 3; ++round) {
    if (star_biclique_poly(current)) return Verdict::reject("star-biclique partition found");
    if (is_three_k1(current)) return Verdict::accept();
    if (next == seq.order.size()) return Verdict::reject("sequence exhausted before reaching 3K1");
    current = remove_vertex(current, seq.order[next++]);
  }
  return Verdict::reject("sequence exhausted before reaching 3K1");
}

/// Member (oracle partition), NonMember (constructed and verified sequence),
/// or Uncertifiable with the reason.
inline Certificate dual_certify(const Graph& g, int max_order = kOracleCap) {
  if (g.order() == 0) throw InputError("dual_certify: empty graph");
  check_oracle_cap(g, max_order, "dual_certify");
  if (auto partition = bp2_oracle(g, max_order)) return *partition;
  const SequenceResult built = gen_safe_sequence(g, max_order);
  if (const auto* failure = std::get_if<SequenceFailure>(&built)) {
    return Uncertifiable{describe(*failure)};
  }
  const auto& seq = std::get<SafeSequence>(built);
  if (Verdict verdict = verify_nbp2(g, seq); !verdict) {
    return Uncertifiable{"verifier rejected the constructed sequence: " + verdict.reason};
  }
  return seq;
}

// ---- text format ---------------------------------------------------------
//
//   kind: bp2                          kind: nbp2
//   part: 0 1 | sides: 0 / 1           sequence: 4 0 6 2
//   part: 2 3 4 | sides: 3 / 2 4

inline std::string format_certificate(const TwoBicliquePartition& p) {
  std::string out = "kind: bp2\n";
  auto part_line = [&](const TwoBicliquePartition::Part& part) {
    out += "part: " + join_labels(part.members) + " | sides: " + join_labels(part.sides.left) +
           " / " + join_labels(part.sides.right) + "\n";
  };
  part_line(p.first);
  if (p.second) part_line(*p.second);
  return out;
}

inline std::string format_certificate(const SafeSequence& s) {
  std::string out = "kind: nbp2\nsequence:";
  for (Vertex v : s.order) out += " " + std::to_string(v);
  return out + "\n";
}

inline std::string format_certificate(const Certificate& cert) {
  return std::visit(
      [](const auto& c) -> std::string {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Uncertifiable>) {
          return "uncertifiable: " + c.reason + "\n";
        } else {
          return format_certificate(c);
        }
      },
      cert);
}

using ParsedCertificate = std::variant<TwoBicliquePartition, SafeSequence>;

namespace detail {

inline std::vector<Vertex> parse_labels(std::string_view text, const std::string& where) {
  std::istringstream in{std::string(text)};
  std::vector<Vertex> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long value = -1;
    try {
      value = std::stol(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || value < 0 || value >= kMaxVertices) {
      throw InputError(where + ": bad vertex label \"" + tok + "\"");
    }
    out.push_back(static_cast<Vertex>(value));
  }
  return out;
}

inline VertexSet parse_label_set(std::string_view text, const std::string& where) {
  VertexSet out;
  for (Vertex v : parse_labels(text, where)) {
    if (out.contains(v)) throw InputError(where + ": label " + std::to_string(v) + " repeated");
    out.insert(v);
  }
  return out;
}

inline TwoBicliquePartition::Part parse_part(std::string_view value, const std::string& where) {
  const auto bar = value.find('|');
  if (bar == std::string_view::npos) throw InputError(where + ": expected \"<labels> | sides: ...\"");
  const VertexSet members = parse_label_set(value.substr(0, bar), where);
  std::string_view rest = trim(value.substr(bar + 1));
  constexpr std::string_view key = "sides:";
  if (rest.substr(0, key.size()) != key) throw InputError(where + ": expected \"sides:\"");
  rest.remove_prefix(key.size());
  const auto slash = rest.find('/');
  if (slash == std::string_view::npos) throw InputError(where + ": sides need \"/\"");
  const VertexSet left = parse_label_set(rest.substr(0, slash), where);
  const VertexSet right = parse_label_set(rest.substr(slash + 1), where);
  return {members, {left, right}};
}

}  // namespace detail

/// Parses the line-oriented certificate text. Whitespace-tolerant; unknown
/// keys, missing lines and duplicate labels are InputErrors.
inline ParsedCertificate parse_certificate(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::string> kind;
  std::vector<TwoBicliquePartition::Part> parts;
  std::optional<std::vector<Vertex>> sequence;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = detail::trim(line);
    if (body.empty()) continue;
    const std::string where = "certificate line " + std::to_string(lineno);
    const auto colon = body.find(':');
    if (colon == std::string_view::npos) throw InputError(where + ": expected \"key: value\"");
    const std::string key{detail::trim(body.substr(0, colon))};
    const std::string_view value = detail::trim(body.substr(colon + 1));
    if (key == "kind") {
      if (kind) throw InputError(where + ": duplicate kind");
      if (value != "bp2" && value != "nbp2") {
        throw InputError(where + ": unknown kind \"" + std::string(value) + "\"");
      }
      kind = std::string(value);
    } else if (!kind) {
      throw InputError(where + ": certificate must start with \"kind:\"");
    } else if (key == "part" && *kind == "bp2") {
      if (parts.size() == 2) throw InputError(where + ": at most two parts");
      parts.push_back(detail::parse_part(value, where));
    } else if (key == "sequence" && *kind == "nbp2") {
      if (sequence) throw InputError(where + ": duplicate sequence");
      sequence = detail::parse_labels(value, where);
    } else {
      throw InputError(where + ": unknown key \"" + key + "\" for kind " + *kind);
    }
  }
  if (!kind) throw InputError("certificate: missing \"kind:\" line");
  if (*kind == "bp2") {
    if (parts.empty()) throw InputError("certificate: bp2 needs at least one part");
    TwoBicliquePartition out{parts[0], std::nullopt};
    if (parts.size() == 2) out.second = parts[1];
    return out;
  }
  if (!sequence) throw InputError("certificate: nbp2 needs a sequence line");
  return SafeSequence{*sequence};
}

}  // namespace bp2
