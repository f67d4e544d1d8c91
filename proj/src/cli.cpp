#include "groupgraph/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "groupgraph/claims.hpp"

namespace groupgraph {

namespace {

struct GraphArgs {
  std::string group;
  std::string kind;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::size_t order_cap;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

GraphKind require_kind(const std::string& text) {
  if (auto k = parse_graph_kind(text)) return *k;
  throw UsageError("unknown graph kind '" + text +
                   "' (expected commuting, coprime, ordersum or noninverse)");
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw GroupError(GroupErrorKind::FileError, "cannot write '" + path + "'");
  f << body;
  if (!f) throw GroupError(GroupErrorKind::FileError, "write failed for '" + path + "'");
}

std::string join_vertices(const std::vector<Vertex>& vs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vs[i];
  return os.str();
}

// Malformed spec text on the command line is a usage error; problems with
// the group itself (or a file it names) are not.
FamilySpec spec_arg(const std::string& text) {
  try {
    return parse_family_spec(text);
  } catch (const GroupError& e) {
    if (e.kind() == GroupErrorKind::ParseError) throw UsageError(e.what());
    throw;
  }
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

int cmd_graph(Context& ctx, const GraphArgs& a, const std::string& dot_path,
              const std::string& csv_path) {
  const auto group = build_family(spec_arg(a.group), ctx.order_cap);
  const auto kind = require_kind(a.kind);
  const auto g = build_graph(group, kind);
  const std::string name = group.label() + " " + to_string(kind);
  if (!dot_path.empty()) write_file(dot_path, to_dot(g, group.element_orders(), name));
  if (!csv_path.empty()) write_file(csv_path, to_edge_csv(g));
  if (dot_path.empty() && csv_path.empty()) {
    ctx.out << to_edge_csv(g);
  } else {
    ctx.out << name << ": " << g.vertex_count() << " vertices, " << g.edge_count()
            << " edges\n";
  }
  return kExitOk;
}

int cmd_invariants(Context& ctx, const GraphArgs& a) {
  const auto group = build_family(spec_arg(a.group), ctx.order_cap);
  const auto kind = require_kind(a.kind);
  const auto g = build_graph(group, kind);
  const auto s = shape_profile(g);
  const auto c = connectivity_values(g);
  auto& o = ctx.out;
  o << "group: " << group.label() << "\n";
  o << "kind: " << to_string(kind) << "\n";
  o << "n: " << s.vertex_count << "\n";
  o << "edges: " << s.edge_count << "\n";
  o << "min_degree: " << s.min_degree << "\n";
  o << "max_degree: " << s.max_degree << "\n";
  o << "kappa: " << c.kappa_vertex << "\n";
  o << "kappa_edge: " << c.kappa_edge << "\n";
  o << "diameter: " << (s.diameter ? std::to_string(*s.diameter) : "inf") << "\n";
  o << "dominating: " << join_vertices(s.dominating_vertices) << "\n";
  o << "connected: " << yes_no(s.is_connected) << "\n";
  o << "regular: " << yes_no(s.is_regular) << "\n";
  o << "complete: " << yes_no(s.is_complete) << "\n";
  o << "star: " << yes_no(s.is_star);
  if (s.star_center) o << " (center " << *s.star_center << ")";
  o << "\n";
  return kExitOk;
}

void print_verdict(std::ostream& o, const MinimalityVerdict& v, bool per_edge) {
  const std::string p = v.measure == Measure::Edge ? "edge" : "vertex";
  o << p << ".applicable: " << yes_no(v.applicable) << "\n";
  o << p << ".base_value: " << v.base_value << "\n";
  o << p << ".holds: " << yes_no(v.holds) << "\n";
  o << p << ".violating_edges:";
  for (const auto& e : v.violating_edges) o << " " << e;
  o << "\n";
  if (per_edge) {
    for (const auto& ev : v.per_edge_values) {
      o << p << ".after_deleting " << ev.edge << ": " << ev.value << "\n";
    }
  }
}

int cmd_minimality(Context& ctx, const GraphArgs& a, const std::string& mode, bool per_edge) {
  const auto group = build_family(spec_arg(a.group), ctx.order_cap);
  const auto kind = require_kind(a.kind);
  const auto g = build_graph(group, kind);
  ctx.out << "group: " << group.label() << "\nkind: " << to_string(kind) << "\n";
  const SweepOptions opts{SweepMethod::LocalFlow, per_edge};
  if (mode == "edge" || mode == "both") print_verdict(ctx.out, is_minimally_edge_connected(g, opts), per_edge);
  if (mode == "vertex" || mode == "both") print_verdict(ctx.out, is_minimally_connected(g, opts), per_edge);
  if (auto c = dominating_vertex_criterion(g)) {
    ctx.out << "criterion: applies, answer " << yes_no(c->answer) << ", unique_dominating "
            << yes_no(c->unique_dominating) << ", rest_regular " << yes_no(c->rest_regular)
            << "\n";
  } else {
    ctx.out << "criterion: not applicable\n";
  }
  return kExitOk;
}

std::vector<ClaimId> parse_claim_list(const std::string& text) {
  if (text.empty()) return all_claims();
  std::vector<ClaimId> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto id = parse_claim_id(item);
    if (!id) throw UsageError("unknown claim '" + item + "'");
    out.push_back(*id);
  }
  return out;
}

int cmd_verify(Context& ctx, const std::string& corpus_path, const std::string& claims_text,
               const std::string& out_path, const std::string& format) {
  if (format != "json" && format != "csv") throw UsageError("format must be json or csv");
  const auto claims = parse_claim_list(claims_text);
  const auto corpus = corpus_path.empty() ? default_corpus() : read_corpus_file(corpus_path);
  CorpusConfig config;
  config.order_cap = ctx.order_cap;
  const auto report = run_corpus(corpus, claims, config);
  const std::string body = format == "json" ? report_to_json(report) : report_to_csv(report);
  if (out_path.empty() || out_path == "-") {
    ctx.out << body;
  } else {
    write_file(out_path, body);
    std::size_t inconsistent = 0;
    for (const auto& t : report.claims) inconsistent += t.inconsistent;
    ctx.out << "groups: " << report.corpus.size() << ", inconsistent verdicts: "
            << inconsistent << ", oracle disagreements: " << report.oracle_disagreements.size()
            << ", invariant failures: " << report.invariant_failures() << "\n";
  }
  if (report.has_artifact_errors()) {
    ctx.err << "verify: internal consistency failure (" << report.oracle_disagreements.size()
            << " oracle disagreements, " << report.invariant_failures()
            << " invariant failures)\n";
    return kExitArtifactBug;
  }
  return kExitOk;
}

SimpleGraph complete_minus_matching(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      // Drop {1,2}, {3,4}, ...; vertex 0 stays dominating.
      if (i % 2 == 1 && j == i + 1) continue;
      es.emplace_back(i, j);
    }
  }
  return SimpleGraph(n, es);
}

int cmd_oracle(Context& ctx, std::size_t trials, std::uint64_t seed, std::size_t max_n) {
  if (max_n < 1 || max_n > kEdgeOracleMaxVertices) {
    throw UsageError("--max-n must be in [1, " + std::to_string(kEdgeOracleMaxVertices) + "]");
  }
  std::vector<SimpleGraph> graphs;
  for (std::size_t n = 1; n <= max_n; ++n) {
    graphs.push_back(SimpleGraph::complete(n));
    graphs.push_back(SimpleGraph::star(n - 1));
    graphs.push_back(complete_minus_matching(n));
    if (n >= 3) graphs.push_back(SimpleGraph::cycle(n));
  }
  const std::size_t structured = graphs.size();

  std::mt19937_64 rng(seed);
  const double probabilities[] = {0.2, 0.5, 0.8};
  for (std::size_t t = 0; t < trials; ++t) {
    const auto n = static_cast<std::size_t>(rng() % max_n) + 1;
    const double p = probabilities[rng() % 3];
    std::vector<Edge> es;
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = i + 1; j < n; ++j) {
        // 53 random bits mapped to [0, 1).
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < p) es.emplace_back(i, j);
      }
    }
    graphs.emplace_back(n, es);
  }

  std::size_t disagreements = 0, vertex_checked = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& g = graphs[i];
    const auto flow_edge = edge_connectivity(g);
    const auto oracle_edge = edge_connectivity_oracle(g);
    bool ok = flow_edge == oracle_edge;
    std::string detail = "edge flow " + std::to_string(flow_edge) + " oracle " +
                         std::to_string(oracle_edge);
    if (g.vertex_count() <= kVertexOracleMaxVertices) {
      ++vertex_checked;
      const auto flow_vertex = vertex_connectivity(g);
      const auto oracle_vertex = vertex_connectivity_oracle(g);
      ok = ok && flow_vertex == oracle_vertex;
      detail += ", vertex flow " + std::to_string(flow_vertex) + " oracle " +
                std::to_string(oracle_vertex);
    }
    if (!ok) {
      ++disagreements;
      ctx.out << "DISAGREEMENT graph " << i << " (n=" << g.vertex_count() << "): " << detail
              << "\n  edges:";
      for (const auto& e : g.edges()) ctx.out << " " << e;
      ctx.out << "\n";
    }
  }
  ctx.out << "oracle: " << graphs.size() << " graphs (" << structured << " structured, "
          << trials << " random, seed " << seed << ", max n " << max_n << "), "
          << vertex_checked << " with vertex oracle, " << disagreements
          << " disagreements\n";
  return disagreements == 0 ? kExitOk : kExitArtifactBug;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Commuting, co-prime, order-sum and non-inverse graphs of finite groups"};
  app.name(args.empty() ? "groupgraph" : args.front());
  app.require_subcommand(1);

  std::size_t order_cap = 0;
  app.add_option("--order-cap", order_cap,
                 "Largest group order to build (default: $GROUPGRAPH_ORDER_CAP or 200)");

  GraphArgs graph_args;
  auto add_graph_opts = [&](CLI::App* sub) {
    sub->add_option("--group", graph_args.group, "Group spec, e.g. cyclic:6 or ea:2,3")->required();
    sub->add_option("--kind", graph_args.kind, "commuting|coprime|ordersum|noninverse")->required();
  };

  std::string dot_path, csv_path;
  auto* graph_cmd = app.add_subcommand("graph", "Build a graph and export it");
  add_graph_opts(graph_cmd);
  graph_cmd->add_option("--dot", dot_path, "Write Graphviz DOT here");
  graph_cmd->add_option("--csv", csv_path, "Write the edge list CSV here");

  auto* inv_cmd = app.add_subcommand("invariants", "Print degree and connectivity invariants");
  add_graph_opts(inv_cmd);

  std::string mode = "both";
  bool per_edge = false;
  auto* min_cmd = app.add_subcommand("minimality", "Run the per-edge deletion sweeps");
  add_graph_opts(min_cmd);
  min_cmd->add_option("--mode", mode, "edge|vertex|both")
      ->check(CLI::IsMember({"edge", "vertex", "both"}));
  min_cmd->add_flag("--per-edge", per_edge, "Print the value after each deletion");

  std::string corpus_path, claims_text, out_path, format = "json";
  auto* verify_cmd = app.add_subcommand("verify", "Evaluate every claim over a corpus of groups");
  verify_cmd->add_option("--corpus", corpus_path, "File with one group spec per line");
  verify_cmd->add_option("--claims", claims_text, "Comma-separated claim ids (default: all)");
  verify_cmd->add_option("--out", out_path, "Report destination (default: stdout)");
  verify_cmd->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

  std::size_t trials = 200;
  std::uint64_t seed = 1;
  std::size_t max_n = 9;
  auto* oracle_cmd = app.add_subcommand("oracle", "Compare flow connectivity with brute force");
  oracle_cmd->add_option("--trials", trials, "Random graphs to generate");
  oracle_cmd->add_option("--seed", seed, "Random seed");
  oracle_cmd->add_option("--max-n", max_n, "Largest random graph");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("groupgraph");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Context ctx{out, err, order_cap != 0 ? order_cap : order_cap_from_env()};
    if (*graph_cmd) return cmd_graph(ctx, graph_args, dot_path, csv_path);
    if (*inv_cmd) return cmd_invariants(ctx, graph_args);
    if (*min_cmd) return cmd_minimality(ctx, graph_args, mode, per_edge);
    if (*verify_cmd) return cmd_verify(ctx, corpus_path, claims_text, out_path, format);
    if (*oracle_cmd) return cmd_oracle(ctx, trials, seed, max_n);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GroupError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace groupgraph
