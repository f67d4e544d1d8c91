// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "groupgraph/claims.hpp"
#include "groupgraph/cli.hpp"
#include "test_util.hpp"

using namespace groupgraph;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (problems.size() < 10) problems.push_back(what);
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct CorpusGraph {
  const GroupAnalysis* analysis;
  GraphKind kind;
  std::string name;
};

// Every default-corpus group with its four graphs, built once.
class Corpus {
 public:
  Corpus() {
    for (const auto& spec : default_corpus()) groups_.emplace_back(build_family(spec));
    for (auto& a : groups_)
      for (GraphKind k : kAllGraphKinds)
        graphs_.push_back({&a, k, a.group().label() + "/" + to_string(k)});
  }
  std::vector<GroupAnalysis>& groups() { return groups_; }
  const std::vector<CorpusGraph>& graphs() const { return graphs_; }

 private:
  std::vector<GroupAnalysis> groups_;
  std::vector<CorpusGraph> graphs_;
};

std::string key(const std::string& group, GraphKind k) { return group + "/" + to_string(k); }

Outcome oracle_equivalence(Corpus& corpus) {
  Outcome o;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(20240917);
  const double densities[] = {0.2, 0.35, 0.5, 0.65, 0.8};
  std::size_t random_graphs = 0, corpus_graphs = 0;
  auto check = [&](const SimpleGraph& g, const std::string& name) {
    const auto ke = edge_connectivity(g);
    const auto kv = vertex_connectivity(g);
    o.require(ke == edge_connectivity_oracle(g), name + ": edge flow vs oracle");
    o.require(kv == vertex_connectivity_oracle(g), name + ": vertex flow vs oracle");
    // Second, independent brute force kept in the test tree.
    o.require(ke == testutil::brute_edge_connectivity(g), name + ": edge flow vs test oracle");
    o.require(kv == testutil::brute_vertex_connectivity(g), name + ": vertex flow vs test oracle");
  };
  for (int i = 0; i < 250; ++i) {
    const std::size_t n = 1 + rng() % 9;
    check(testutil::random_graph(rng, n, densities[i % 5]), "random#" + std::to_string(i));
    ++random_graphs;
  }
  for (const auto& cg : corpus.graphs()) {
    const auto& g = cg.analysis->graph(cg.kind);
    if (g.vertex_count() > kVertexOracleMaxVertices) continue;
    check(g, cg.name);
    ++corpus_graphs;
  }
  const double secs = seconds_since(t0);
  o.require(random_graphs >= 200, "fewer than 200 random graphs");
  o.require(secs < 60.0, "runtime over 60 s");
  std::ostringstream d;
  d << random_graphs << " random + " << corpus_graphs << " corpus graphs, " << secs << " s";
  o.detail = d.str();
  return o;
}

Outcome whitney(Corpus& corpus) {
  Outcome o;
  std::size_t n = 0;
  for (auto& a : corpus.groups()) {
    for (GraphKind k : kAllGraphKinds) {
      const auto& v = a.values(k);
      o.require(v.kappa_vertex <= v.kappa_edge && v.kappa_edge <= v.min_degree,
                key(a.group().label(), k));
      o.require(v.min_degree == testutil::min_degree(a.graph(k)), key(a.group().label(), k) + " degree");
      ++n;
    }
  }
  o.detail = std::to_string(n) + " graphs";
  return o;
}

Outcome diameter_two(Corpus& corpus) {
  Outcome o;
  std::size_t n = 0;
  for (auto& a : corpus.groups()) {
    for (GraphKind k : kAllGraphKinds) {
      const auto& s = a.shape(k);
      if (!s.diameter || *s.diameter > 2) continue;
      ++n;
      o.require(a.values(k).kappa_edge == s.min_degree, key(a.group().label(), k));
    }
  }
  o.detail = std::to_string(n) + " graphs with diameter <= 2";
  return o;
}

bool brute_abelian(const FiniteGroup& g) {
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      if (g.multiply(a, b) != g.multiply(b, a)) return false;
  return true;
}

bool brute_cyclic(const FiniteGroup& g) {
  for (Element x = 0; x < g.order(); ++x) {
    std::size_t k = 1;
    for (Element p = x; p != 0; p = g.multiply(p, x)) ++k;
    if (k == g.order()) return true;
  }
  return false;
}

bool brute_exponent_le_2(const FiniteGroup& g) {
  for (Element x = 0; x < g.order(); ++x)
    if (g.multiply(x, x) != 0) return false;
  return true;
}

Outcome lemmas(Corpus& corpus) {
  Outcome o;
  std::size_t cyclic = 0, noncyclic = 0;
  for (auto& a : corpus.groups()) {
    const auto& g = a.group();
    const std::string name = g.label();
    const std::size_t n = g.order();
    const bool is_cyclic = brute_cyclic(g);
    const auto complete = [&](GraphKind k) {
      return a.graph(k).edge_count() == n * (n - 1) / 2;
    };
    o.require(complete(GraphKind::Commuting) == brute_abelian(g), name + " commuting complete iff abelian");
    o.require(complete(GraphKind::Coprime) == (n <= 2), name + " coprime complete iff |G| <= 2");
    if (is_cyclic) {
      ++cyclic;
      o.require(complete(GraphKind::OrderSum) == is_prime(n), name + " order-sum complete iff prime");
    } else {
      ++noncyclic;
      o.require(a.graph(GraphKind::OrderSum).edge_count() == 0, name + " order-sum null");
    }
    o.require(complete(GraphKind::NonInverse) == brute_exponent_le_2(g),
              name + " non-inverse complete iff exponent <= 2");
    const auto& ni = a.values(GraphKind::NonInverse);
    o.require(ni.kappa_vertex == ni.kappa_edge, name + " non-inverse kappa = kappa'");
  }
  o.detail = std::to_string(corpus.groups().size()) + " groups (" + std::to_string(cyclic) +
             " cyclic, " + std::to_string(noncyclic) + " non-cyclic)";
  return o;
}

Outcome dominating(Corpus& corpus) {
  Outcome o;
  std::size_t applied = 0, yes = 0;
  for (auto& a : corpus.groups()) {
    for (GraphKind k : kAllGraphKinds) {
      const auto& g = a.graph(k);
      const auto& s = a.shape(k);
      if (!s.is_connected || s.is_complete || s.dominating_vertices.empty()) continue;
      const auto c = dominating_vertex_criterion(g);
      o.require(c.has_value(), key(a.group().label(), k) + " criterion not applicable");
      if (!c) continue;
      ++applied;
      yes += c->answer;
      // Exhaustive sweep: full recomputation of edge connectivity per deletion.
      const auto sweep = minimality_sweep(g, Measure::Edge, {SweepMethod::Recompute, false});
      o.require(c->answer == sweep.holds, key(a.group().label(), k));
    }
  }
  o.detail = std::to_string(applied) + " graphs, criterion true on " + std::to_string(yes);
  return o;
}

Outcome theorem_instances(Corpus& corpus) {
  Outcome o;
  std::map<std::string, GroupAnalysis*> by_label;
  for (auto& a : corpus.groups()) by_label[a.group().label()] = &a;
  std::size_t checked = 0, oracle_checked = 0;

  auto expect = [&](ClaimId id, const std::string& label, bool lhs) {
    auto it = by_label.find(label);
    if (it == by_label.end()) {
      o.require(false, label + " missing from corpus");
      return;
    }
    auto verdicts = evaluate_claim(id, *it->second);
    const auto& v = verdicts.front();
    const std::string what = std::string(to_string(id)) + " on " + label;
    o.require(v.evaluated(), what + " skipped");
    o.require(v.lhs == lhs, what + " lhs");
    o.require(v.consistent, what + " inconsistent");
    if (it->second->oracle_in_range(*v.graph_kind)) {
      ++oracle_checked;
      o.require(v.oracle_lhs.has_value() && *v.oracle_lhs == lhs, what + " oracle lhs");
    }
    ++checked;
  };

  for (int n = 2; n <= 12; ++n) expect(ClaimId::T_C_EDGE_IFF_ABELIAN, "Cyclic(" + std::to_string(n) + ")", true);
  for (const char* l : {"Dihedral(3)", "Dihedral(4)", "Symmetric(4)"}) expect(ClaimId::T_C_EDGE_IFF_ABELIAN, l, false);
  for (const char* l : {"ElementaryAbelian(2,2)", "ElementaryAbelian(2,3)", "ElementaryAbelian(2,4)",
                        "ElementaryAbelian(2,5)", "Cyclic(5)"})
    expect(ClaimId::T_NI_EDGE_IFF_UNIFORM_INVERSE, l, true);
  expect(ClaimId::T_NI_EDGE_IFF_UNIFORM_INVERSE, "Cyclic(4)", false);
  for (const char* l : {"Cyclic(2)", "Cyclic(3)", "Cyclic(5)", "Cyclic(7)"}) expect(ClaimId::T_OS_EDGE_IFF_PRIME, l, true);
  for (const char* l : {"Cyclic(4)", "Cyclic(6)"}) expect(ClaimId::T_OS_EDGE_IFF_PRIME, l, false);
  for (const char* l : {"Cyclic(9)", "Dicyclic(2)"}) expect(ClaimId::P_CP_FULL_EXP_IFF_P_GROUP, l, true);
  expect(ClaimId::P_CP_FULL_EXP_IFF_P_GROUP, "Cyclic(6)", false);

  std::size_t even_cases = 0;
  for (auto& a : corpus.groups()) {
    for (const auto& v : evaluate_claim(ClaimId::T_CP_EVEN_NOT_MINIMAL, a)) {
      if (*v.rhs) ++even_cases;
      o.require(v.consistent, "T_CP_EVEN_NOT_MINIMAL counterexample " + v.group_label);
      o.require(!v.oracle_disagrees(), "T_CP_EVEN_NOT_MINIMAL oracle on " + v.group_label);
    }
  }
  o.detail = std::to_string(checked) + " instances (" + std::to_string(oracle_checked) +
             " oracle-backed), " + std::to_string(even_cases) +
             " even non-p-groups without counterexample";
  return o;
}

int run_tool(const std::vector<std::string>& args, std::string& out) {
  std::ostringstream os, es;
  std::vector<std::string> full{"groupgraph"};
  full.insert(full.end(), args.begin(), args.end());
  const int code = run_cli(full, os, es);
  out = os.str() + es.str();
  return code;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kReportA = "acceptance_report_a.json";
const std::string kReportB = "acceptance_report_b.json";

Outcome determinism() {
  Outcome o;
  std::string msg;
  const auto t0 = Clock::now();
  const int a = run_tool({"--order-cap", "64", "verify", "--out", kReportA}, msg);
  const double first = seconds_since(t0);
  const int b = run_tool({"--order-cap", "64", "verify", "--out", kReportB}, msg);
  o.require(a == kExitOk && b == kExitOk, "verify exit status " + std::to_string(a) + "/" + std::to_string(b));
  const auto ja = slurp(kReportA), jb = slurp(kReportB);
  o.require(!ja.empty(), "empty report");
  o.require(ja == jb, "reports differ");
  o.require(first < 600.0, "verify over 10 minutes");
  std::ostringstream d;
  d << ja.size() << " bytes identical, first run " << first << " s";
  o.detail = d.str();
  return o;
}

Outcome discrepancy_surfacing() {
  Outcome o;
  std::string msg;
  if (slurp(kReportA).empty()) run_tool({"--order-cap", "64", "verify", "--out", kReportA}, msg);
  const auto report = nlohmann::json::parse(slurp(kReportA));

  bool os_c4 = false, tree_complete = false;
  std::size_t checked = 0, flagged = 0;
  for (const auto& c : report["claims"]) {
    const std::string id = c["id"];
    const std::string form = c["form"];
    std::set<std::string> inconsistent, failures;
    for (const auto& v : c["verdicts"]) {
      const std::string tag = v["group"].get<std::string>() + "/" + v["graph"].dump();
      if (v["status"] == "skipped") continue;
      const bool lhs = v["lhs"], rhs = v["rhs"];
      const bool holds = form == "implies" ? (!rhs || lhs) : (lhs == rhs);
      o.require(holds == (v["status"] == "consistent"), id + " " + tag + " status");
      if (!holds) inconsistent.insert(tag);
      ++checked;
      if (id == "T_OS_VERTEX_IFF_PRIME_POWER" && v["group"] == "Cyclic(4)") {
        os_c4 = true;
        o.require(!v["oracle_lhs"].is_null() && v["oracle_lhs"] == v["lhs"], "Cyclic(4) oracle lhs");
      }
      const auto& d = v["details"];
      const bool complete_graph = d.contains("n") && d.contains("edges") && d["n"].get<long>() >= 3 &&
                                  d["edges"].get<long>() == d["n"].get<long>() * (d["n"].get<long>() - 1) / 2;
      if (!v["oracle_lhs"].is_null()) o.require(v["oracle_lhs"] == v["lhs"], id + " " + tag + " oracle lhs");
      if (id == "X_TREE_CLAIM" && complete_graph && !v["oracle_lhs"].is_null()) tree_complete = true;
    }
    for (const auto& f : c["failures"]) failures.insert(f["group"].get<std::string>() + "/" + f["graph"].dump());
    flagged += inconsistent.size();
    o.require(failures == inconsistent, id + " failure list differs from inconsistent verdicts");
  }
  o.require(os_c4, "no verdict for T_OS_VERTEX_IFF_PRIME_POWER on Cyclic(4)");
  o.require(tree_complete, "no oracle-backed X_TREE_CLAIM verdict on a complete graph");
  o.detail = std::to_string(checked) + " verdicts checked against their failure lists; " +
             std::to_string(flagged) + " inconsistent";
  return o;
}

}  // namespace

int main() {
  std::cout << std::boolalpha;
  std::cout.precision(3);
  Corpus corpus;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 oracle equivalence", [&] { return oracle_equivalence(corpus); }},
      {"2 Whitney inequalities", [&] { return whitney(corpus); }},
      {"3 diameter-two edge connectivity", [&] { return diameter_two(corpus); }},
      {"4 completeness and null-graph lemmas", [&] { return lemmas(corpus); }},
      {"5 dominating-vertex criterion", [&] { return dominating(corpus); }},
      {"6 theorem instances", [&] { return theorem_instances(corpus); }},
      {"7 discrepancy surfacing", [] { return discrepancy_surfacing(); }},
      {"8 determinism and runtime", [] { return determinism(); }},
  };
  // Criterion 7 reads the report written by criterion 8; run 8 first, print in order.
  std::vector<Outcome> results(criteria.size());
  results[7] = criteria[7].second();
  for (std::size_t i = 0; i < 7; ++i) results[i] = criteria[i].second();

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& r = results[i];
    all = all && r.pass;
    std::cout << (r.pass ? "PASS " : "FAIL ") << criteria[i].first << ": " << r.detail << "\n";
    for (const auto& p : r.problems) std::cout << "    " << p << "\n";
  }
  std::remove(kReportA.c_str());
  std::remove(kReportB.c_str());
  return all ? 0 : 1;
}
