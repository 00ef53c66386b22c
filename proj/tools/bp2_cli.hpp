#pragma once

// Command-line front end. Decision results go to stdout; exit codes only
// report whether the command ran: 0 ran, 1 audit found an asserted claim
// violated, 2 usage or input error, 3 capacity exceeded.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bp2/bp2.hpp"

namespace bp2::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertedViolation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct GraphInput {
  std::string g6;
  std::string file;

  void add_to(CLI::App& cmd) {
    auto* g6_opt = cmd.add_option("--g6", g6, "graph in graph6 format");
    auto* file_opt = cmd.add_option("--file", file, "file of graph6 lines, or an edge list");
    g6_opt->excludes(file_opt);
  }

  /// --g6, --file, or graph6 lines on stdin.
  std::vector<Graph> load(std::istream& in) const {
    if (!g6.empty()) return {g6_decode(g6)};
    const std::string text =
        file.empty() ? std::string(std::istreambuf_iterator<char>(in), {}) : read_file(file);
    auto graphs = read_graphs(text);
    if (graphs.empty()) throw InputError("no graphs in input");
    return graphs;
  }

  Graph load_one(std::istream& in) const {
    auto graphs = load(in);
    if (graphs.size() != 1) throw InputError("expected exactly one graph");
    return graphs.front();
  }
};

inline std::string comma_labels(VertexSet s) { return join_labels(s, ","); }

inline std::string sides_text(const Bipartition& b) {
  return comma_labels(b.left) + "/" + comma_labels(b.right);
}

inline std::string witness_text(const StarBicliqueWitness& w) {
  return "star:" + comma_labels(w.star) + " center:" + std::to_string(w.center) +
         " biclique:" + sides_text(w.biclique_sides);
}

inline std::string partition_text(const TwoBicliquePartition& p) {
  std::string out = sides_text(p.first.sides);
  if (p.second) out += ";" + sides_text(p.second->sides);
  return out;
}

inline std::string bool_text(bool b) { return b ? "true" : "false"; }

inline void warn_cap(int cap, std::ostream& err) {
  if (cap > kOracleCap) {
    err << "warning: oracle cap raised to " << cap << "; exhaustive searches grow as 3^n\n";
  }
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Two-biclique vertex partition: deciders, certificates, verifier, audit"};
  app.name("bp2");
  app.require_subcommand(1);

  // decide
  auto* decide = app.add_subcommand("decide", "decide BP1, BP2 or star-biclique membership");
  detail::GraphInput decide_in;
  decide_in.add_to(*decide);
  std::string problem;
  std::string method = "poly";
  int decide_cap = kOracleCap;
  decide->add_option("--problem", problem, "bp1 | bp2 | star-biclique")
      ->required()
      ->check(CLI::IsMember({"bp1", "bp2", "star-biclique"}));
  decide->add_option("--method", method, "poly | oracle")
      ->check(CLI::IsMember({"poly", "oracle"}));
  decide->add_option("--oracle-cap", decide_cap, "largest order for exhaustive searches");

  // certify
  auto* certify = app.add_subcommand("certify", "print a membership or non-membership certificate");
  detail::GraphInput certify_in;
  certify_in.add_to(*certify);
  int certify_cap = kOracleCap;
  certify->add_option("--oracle-cap", certify_cap, "largest order for exhaustive searches");

  // verify
  auto* verify = app.add_subcommand("verify", "check a certificate against a graph");
  detail::GraphInput verify_in;
  verify_in.add_to(*verify);
  std::string cert_path;
  verify->add_option("--cert", cert_path, "certificate file")->required();

  // audit
  auto* audit_cmd = app.add_subcommand("audit", "exhaustive audit over all labeled graphs");
  int n_min = 1, n_max = 1, parallel = 1;
  std::string report_path;
  audit_cmd->add_option("--n-min", n_min)->required();
  audit_cmd->add_option("--n-max", n_max)->required();
  audit_cmd->add_option("--parallel", parallel, "worker threads");
  audit_cmd->add_option("--report", report_path, "write summary and counterexamples here");

  // gen
  auto* gen = app.add_subcommand("gen", "emit graph6 for a named or random graph");
  std::string name;
  std::vector<int> params;
  std::vector<std::string> random_args;
  std::uint64_t seed = 0;
  auto* name_opt = gen->add_option("--name", name,
                                   "empty | complete | path | cycle | complete_bipartite | star | "
                                   "disjoint_union-of-cycles");
  auto* random_opt = gen->add_option("--random", random_args, "N P")->expected(2);
  gen->add_option("params", params, "parameters of the named graph");
  gen->add_option("--seed", seed, "seed for --random");
  name_opt->excludes(random_opt);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*decide) {
      detail::warn_cap(decide_cap, err);
      if (problem == "bp2" && method == "poly") {
        err << "warning: bp2 poly path searches disconnected vertex cuts of the complement "
               "exhaustively\n";
      }
      for (const Graph& g : decide_in.load(in)) {
        std::string line = g6_encode(g) + "\t" + problem + "=";
        std::string witness;
        bool answer = false;
        if (problem == "bp1") {
          const auto sides = method == "poly" ? (is_bp1(g) ? part_is_biclique(g, g.vertices())
                                                           : std::nullopt)
                                              : bp1_oracle(g, decide_cap);
          answer = sides.has_value();
          if (sides) witness = detail::sides_text(*sides);
        } else if (problem == "bp2") {
          if (method == "poly") {
            const Bp2Evidence ev = classify_bp2(g, decide_cap);
            answer = ev.member();
            if (answer) {
              witness = std::string("clause:") + clause_name(ev.clause);
              if (!ev.cut.empty()) witness += " cut:" + detail::comma_labels(ev.cut);
            }
          } else {
            const auto part = bp2_oracle(g, decide_cap);
            answer = part.has_value();
            if (part) witness = detail::partition_text(*part);
          }
        } else {
          if (g.order() < 2) throw InputError("star-biclique needs at least 2 vertices");
          const auto w = method == "poly" ? star_biclique_poly(g) : star_biclique_oracle(g, decide_cap);
          answer = w.has_value();
          if (w) witness = detail::witness_text(*w);
        }
        line += detail::bool_text(answer);
        if (!witness.empty()) line += "\twitness=" + witness;
        out << line << "\n";
      }
    } else if (*certify) {
      detail::warn_cap(certify_cap, err);
      out << format_certificate(dual_certify(certify_in.load_one(in), certify_cap));
    } else if (*verify) {
      const Graph g = verify_in.load_one(in);
      const ParsedCertificate cert = parse_certificate(detail::read_file(cert_path));
      if (const auto* seq = std::get_if<SafeSequence>(&cert)) {
        const Verdict v = verify_nbp2(g, *seq);
        out << (v.accepted ? std::string("accept") : "reject: " + v.reason) << "\n";
      } else {
        const Verdict v = check_bp2_cert(g, std::get<TwoBicliquePartition>(cert));
        out << (v.accepted ? std::string("valid") : "invalid: " + v.reason) << "\n";
      }
    } else if (*audit_cmd) {
      if (n_min < 1 || n_min > n_max) throw InputError("need 1 <= --n-min <= --n-max");
      const AuditReport report = audit(n_min, n_max, parallel);
      out << format_summary(report);
      err << "wall time: " << report.wall_seconds << " s\n";
      if (!report_path.empty()) {
        std::ofstream file(report_path, std::ios::binary);
        if (!file) throw InputError("cannot write " + report_path);
        file << format_report(report);
      }
      if (!report.asserted_claims_hold()) return kExitAssertedViolation;
    } else if (*gen) {
      if (!random_args.empty()) {
        std::size_t used = 0;
        const int n = std::stoi(random_args[0], &used);
        if (used != random_args[0].size()) throw InputError("--random: bad order");
        const double p = std::stod(random_args[1], &used);
        if (used != random_args[1].size()) throw InputError("--random: bad probability");
        out << g6_encode(random_graph(n, p, seed)) << "\n";
      } else if (!name.empty()) {
        out << g6_encode(named(name, params)) << "\n";
      } else {
        throw InputError("gen needs --name or --random");
      }
    }
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "input error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace bp2::cli
