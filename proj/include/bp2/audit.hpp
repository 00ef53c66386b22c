#pragma once

// Exhaustive small-graph audit: every labeled graph of each order is run
// through the polynomial procedures and the oracles, and each claim is
// tallied as agreement or counterexample (graph6).
//
// Asserted claims are expected to hold outright; reported claims are
// tallied without judgement.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "bp2/certificates.hpp"
#include "bp2/deciders.hpp"
#include "bp2/graph_io.hpp"
#include "bp2/oracle.hpp"

namespace bp2 {

/// Orders up to this value get an exhaustive sequence search in the
/// verifier claims; larger orders use sampled / constructed sequences.
inline constexpr int kExhaustiveSequenceOrder = 6;
/// Sequences sampled per BP2 graph for the soundness claim above that order.
inline constexpr int kSoundnessSamples = 3;

struct ClaimTally {
  std::string id;
  bool asserted = false;
  std::string description;
  std::uint64_t checked = 0;
  std::uint64_t agreements = 0;
  std::vector<std::string> counterexamples;

  void record(bool agrees, const std::string& g6) {
    ++checked;
    if (agrees) {
      ++agreements;
    } else {
      counterexamples.push_back(g6);
    }
  }
  bool holds() const { return counterexamples.empty(); }
};

struct AuditReport {
  int n_min = 0;
  int n_max = 0;
  std::vector<ClaimTally> claims;
  double wall_seconds = 0;

  const ClaimTally& claim(const std::string& id) const {
    for (const auto& c : claims) {
      if (c.id == id) return c;
    }
    throw InputError("no audit claim named " + id);
  }
  bool asserted_claims_hold() const {
    return std::all_of(claims.begin(), claims.end(),
                       [](const ClaimTally& c) { return !c.asserted || c.holds(); });
  }
};

namespace detail {

enum ClaimIndex {
  kL1,
  kL23,
  kL4C5,
  kLDel,
  kTStar,
  kTStarWitness,
  kTStarExt,
  kTDepth,
  kTSeq,
  kTVerifySound,
  kTVerifyComplete,
  kClaimCount
};

inline std::vector<ClaimTally> empty_claims() {
  return {
      {"L1", true, "is_bp1 agrees with the BP1 oracle", 0, 0, {}},
      {"L2/L3", true, "decide_bp2 agrees with the BP2 oracle", 0, 0, {}},
      {"L4/C5", true, "graphs outside BP2 pass nbp2_necessary", 0, 0, {}},
      {"L-del", true, "star-biclique-free BP2\\BP1 graphs stay in BP2\\BP1 after any deletion", 0, 0, {}},
      {"T-star", true, "star_biclique_poly agrees with the oracle on BP2\\BP1", 0, 0, {}},
      {"T-star-witness", true, "every star_biclique_poly witness is valid", 0, 0, {}},
      {"T-star-ext", false, "star_biclique_poly agrees with the oracle outside BP2\\BP1", 0, 0, {}},
      {"T-depth", false, "first star-biclique depth is the same for every deletion order", 0, 0, {}},
      {"T-seq", false, "gen_safe_sequence succeeds on every graph outside BP2", 0, 0, {}},
      {"T-verify-sound", true, "verify_nbp2 rejects every BP2 graph", 0, 0, {}},
      {"T-verify-complete", false, "every graph outside BP2 has an accepted sequence", 0, 0, {}},
  };
}

/// Calls fn(seq) for each ordered sequence of k distinct labels from `pool`
/// until fn returns false. Returns false if stopped early.
template <typename Fn>
bool for_each_sequence(VertexSet pool, int k, std::vector<Vertex>& seq, Fn&& fn) {
  if (static_cast<int>(seq.size()) == k) return fn(seq);
  for (Vertex v : pool) {
    seq.push_back(v);
    const bool go_on = for_each_sequence(pool - VertexSet::single(v), k, seq, fn);
    seq.pop_back();
    if (!go_on) return false;
  }
  return true;
}

/// Deterministic sample of k distinct labels (partial Fisher-Yates on mt19937_64).
inline std::vector<Vertex> sample_sequence(VertexSet pool, int k, std::mt19937_64& gen) {
  std::vector<Vertex> items = pool.to_vector();
  for (int i = 0; i < k; ++i) {
    const auto j = i + static_cast<int>(gen() % (items.size() - i));
    std::swap(items[i], items[j]);
  }
  items.resize(k);
  return items;
}

inline void audit_graph(const Graph& g, std::uint64_t index, std::vector<ClaimTally>& claims) {
  const int n = g.order();
  const std::string g6 = g6_encode(g);
  const SubsetTables t(g);
  const auto full = t.full();
  const bool in_bp1 = t.bp1(full);
  const bool in_bp2 = t.bp2(full);

  claims[kL1].record(is_bp1(g) == in_bp1, g6);
  claims[kL23].record(decide_bp2(g) == in_bp2, g6);
  if (n >= 3 && !in_bp2) claims[kL4C5].record(nbp2_necessary(g), g6);

  if (n >= 2) {
    const auto poly = star_biclique_poly(g);
    if (poly) claims[kTStarWitness].record(is_valid_witness(g, *poly), g6);
    const bool agree = poly.has_value() == t.star_biclique(full);
    claims[in_bp2 && !in_bp1 ? kTStar : kTStarExt].record(agree, g6);
  }

  if (in_bp2 && !in_bp1) {
    if (!t.star_biclique(full)) {
      bool closed = true;
      for (auto r = full; r != 0; r &= r - 1) {
        closed = closed && t.bp2_not_bp1(full & ~(r & (~r + 1)));
      }
      claims[kLDel].record(closed, g6);
    }
    claims[kTDepth].record(deletion_depths(t).uniform, g6);
  }

  if (n < 3) return;
  const VertexSet all = g.vertices();
  if (in_bp2) {
    bool all_rejected = true;
    if (n <= kExhaustiveSequenceOrder) {
      std::vector<Vertex> seq;
      for_each_sequence(all, n - 3, seq, [&](const std::vector<Vertex>& s) {
        all_rejected = !verify_nbp2(g, SafeSequence{s}).accepted;
        return all_rejected;
      });
    } else {
      std::mt19937_64 gen((std::uint64_t{static_cast<unsigned>(n)} << 56) ^ index);
      for (int i = 0; i < kSoundnessSamples && all_rejected; ++i) {
        all_rejected = !verify_nbp2(g, SafeSequence{sample_sequence(all, n - 3, gen)}).accepted;
      }
    }
    claims[kTVerifySound].record(all_rejected, g6);
    return;
  }

  const SequenceResult built = gen_safe_sequence(t);
  const auto* constructed = std::get_if<SafeSequence>(&built);
  claims[kTSeq].record(constructed != nullptr, g6);

  bool some_accepted = false;
  if (n <= kExhaustiveSequenceOrder) {
    std::vector<Vertex> seq;
    for_each_sequence(all, n - 3, seq, [&](const std::vector<Vertex>& s) {
      some_accepted = verify_nbp2(g, SafeSequence{s}).accepted;
      return !some_accepted;
    });
  } else {
    some_accepted = constructed != nullptr && verify_nbp2(g, *constructed).accepted;
  }
  claims[kTVerifyComplete].record(some_accepted, g6);
}

inline void merge_into(std::vector<ClaimTally>& into, std::vector<ClaimTally>&& from) {
  for (std::size_t i = 0; i < into.size(); ++i) {
    into[i].checked += from[i].checked;
    into[i].agreements += from[i].agreements;
    auto& dst = into[i].counterexamples;
    dst.insert(dst.end(), std::make_move_iterator(from[i].counterexamples.begin()),
               std::make_move_iterator(from[i].counterexamples.end()));
  }
}

}  // namespace detail

/// Runs every claim over all labeled graphs with n_min <= n <= n_max, split
/// across `parallelism` threads. Counterexample lists come back sorted, so
/// the report does not depend on the split.
inline AuditReport audit(int n_min, int n_max, int parallelism = 1) {
  if (n_min < 1 || n_min > n_max) throw InputError("audit: need 1 <= n_min <= n_max");
  if (n_max > kEnumerationCap) {
    throw CapacityError("audit: orders above " + std::to_string(kEnumerationCap) + " not supported");
  }
  parallelism = std::max(1, parallelism);
  const auto started = std::chrono::steady_clock::now();

  AuditReport report;
  report.n_min = n_min;
  report.n_max = n_max;
  report.claims = detail::empty_claims();

  for (int n = n_min; n <= n_max; ++n) {
    auto streams = GraphStream(n).split(parallelism);
    std::vector<std::vector<ClaimTally>> partial(streams.size(), detail::empty_claims());
    auto work = [&](std::size_t w) {
      GraphStream& s = streams[w];
      for (;;) {
        const std::uint64_t index = s.cursor();
        auto g = s.next();
        if (!g) break;
        detail::audit_graph(*g, index, partial[w]);
      }
    };
    if (parallelism == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (std::size_t w = 0; w < streams.size(); ++w) threads.emplace_back(work, w);
      for (auto& th : threads) th.join();
    }
    for (auto& p : partial) detail::merge_into(report.claims, std::move(p));
  }
  for (auto& c : report.claims) std::sort(c.counterexamples.begin(), c.counterexamples.end());

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

/// Summary table; wall time is left out so the text is reproducible.
inline std::string format_summary(const AuditReport& r) {
  std::ostringstream out;
  out << "audit n=" << r.n_min << ".." << r.n_max << "\n";
  char line[160];
  std::snprintf(line, sizeof line, "%-18s %-9s %12s %12s %10s\n", "claim", "mode", "checked",
                "agree", "counter");
  out << line;
  for (const auto& c : r.claims) {
    std::snprintf(line, sizeof line, "%-18s %-9s %12llu %12llu %10zu\n", c.id.c_str(),
                  c.asserted ? "asserted" : "reported",
                  static_cast<unsigned long long>(c.checked),
                  static_cast<unsigned long long>(c.agreements), c.counterexamples.size());
    out << line;
  }
  out << "asserted claims: " << (r.asserted_claims_hold() ? "hold" : "VIOLATED") << "\n";
  return out.str();
}

/// Summary plus one graph6 block per claim with counterexamples.
inline std::string format_report(const AuditReport& r) {
  std::string out = format_summary(r);
  for (const auto& c : r.claims) {
    if (c.counterexamples.empty()) continue;
    out += "\n# " + c.id + " counterexamples (" + std::to_string(c.counterexamples.size()) +
           "): " + c.description + "\n";
    for (const auto& g6 : c.counterexamples) out += g6 + "\n";
  }
  return out;
}

}  // namespace bp2
