#include <fstream>
#include <map>
#include <sstream>

#include "groupgraph/claims.hpp"

#ifndef GROUPGRAPH_VERSION
#define GROUPGRAPH_VERSION "dev"
#endif

namespace groupgraph {

std::vector<FamilySpec> default_corpus() {
  std::vector<FamilySpec> out;
  for (std::size_t n = 2; n <= 32; ++n) out.push_back(FamilySpec::cyclic(n));
  for (std::size_t n = 2; n <= 16; ++n) out.push_back(FamilySpec::dihedral(n));
  for (std::size_t n = 2; n <= 8; ++n) out.push_back(FamilySpec::dicyclic(n));
  for (std::size_t n = 3; n <= 4; ++n) out.push_back(FamilySpec::symmetric(n));
  // Rank 1 would repeat the cyclic groups of prime order.
  for (std::size_t p : {2, 3, 5}) {
    for (std::size_t k = 2, order = p * p; order <= 32; ++k, order *= p) {
      out.push_back(FamilySpec::elementary_abelian(p, k));
    }
  }
  const std::size_t primes[] = {2, 3, 5, 7, 11, 13};
  for (std::size_t i = 0; i < std::size(primes); ++i) {
    for (std::size_t j = i + 1; j < std::size(primes); ++j) {
      if (primes[i] * primes[j] > 32) continue;
      out.push_back(FamilySpec::product(
          {FamilySpec::cyclic(primes[i]), FamilySpec::cyclic(primes[j])}));
    }
  }
  return out;
}

std::vector<FamilySpec> parse_corpus(std::string_view text) {
  std::vector<FamilySpec> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    try {
      out.push_back(parse_family_spec(std::string_view(line).substr(first, last - first + 1)));
    } catch (const GroupError& e) {
      throw GroupError(e.kind(), "corpus line " + std::to_string(line_no) + ": " + e.detail());
    }
  }
  return out;
}

std::vector<FamilySpec> read_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GroupError(GroupErrorKind::FileError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_corpus(buf.str());
  } catch (const GroupError& e) {
    throw GroupError(e.kind(), path + ": " + e.detail());
  }
}

namespace {

// Fixed order of the invariant suite in reports.
const char* const kInvariantIds[] = {
    "WHITNEY",
    "DIAM2",
    "ORACLE_EDGE",
    "ORACLE_VERTEX",
    "SWEEP_AGREEMENT",
    "CLASS_EQUATION",
    "LAGRANGE",
    "ORDER_TWO_PARITY",
    "CENTER_ABELIAN",
    "IDENTITY_DOMINATING",
    "NONINVERSE_STRUCTURE",
    "COPRIME_P_GROUP_STAR",
    "DOMINATING_DIAMETER",
};

class InvariantLedger {
 public:
  InvariantLedger() {
    for (const char* id : kInvariantIds) {
      index_[id] = tallies_.size();
      tallies_.push_back({id, 0, 0, 0, 0, {}});
    }
  }

  void record(const std::string& id, CheckStatus status, const std::string& group,
              std::optional<GraphKind> kind, const std::string& evidence) {
    auto& t = tallies_.at(index_.at(id));
    switch (status) {
      case CheckStatus::Pass:
        ++t.checked;
        ++t.passed;
        break;
      case CheckStatus::Fail:
        ++t.checked;
        ++t.failed;
        t.failures.push_back({group, kind, evidence});
        break;
      case CheckStatus::Skip:
        ++t.skipped;
        break;
    }
  }

  void check(const std::string& id, bool ok, const std::string& group,
             std::optional<GraphKind> kind, const std::string& evidence = {}) {
    record(id, ok ? CheckStatus::Pass : CheckStatus::Fail, group, kind, evidence);
  }

  std::vector<InvariantTally> take() { return std::move(tallies_); }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<InvariantTally> tallies_;
};

void group_invariants(GroupAnalysis& a, InvariantLedger& ledger) {
  const auto& g = a.group();
  const auto& p = a.profile();
  const std::string& label = g.label();

  const auto eq = class_equation(g);
  ledger.check("CLASS_EQUATION", eq.holds, label, std::nullopt,
               std::to_string(eq.group_order) + " vs " + std::to_string(eq.center_size) +
                   " + " + std::to_string(eq.index_sum));

  bool lagrange = true;
  for (auto o : g.element_orders()) lagrange = lagrange && g.order() % o == 0;
  ledger.check("LAGRANGE", lagrange, label, std::nullopt);

  if (p.is_even_order) {
    ledger.check("ORDER_TWO_PARITY", p.count_order_two % 2 == 1, label, std::nullopt,
                 std::to_string(p.count_order_two) + " elements of order 2");
  } else {
    ledger.record("ORDER_TWO_PARITY", CheckStatus::Skip, label, std::nullopt, {});
  }

  ledger.check("CENTER_ABELIAN", p.is_abelian == (p.center_size == p.order), label,
               std::nullopt);

  const std::size_t n = g.order();
  for (GraphKind k : {GraphKind::Commuting, GraphKind::Coprime, GraphKind::NonInverse}) {
    ledger.check("IDENTITY_DOMINATING", a.graph(k).degree(0) == n - 1, label, k);
  }

  {
    const auto& ni = a.graph(GraphKind::NonInverse);
    std::size_t non_self_inverse = 0;
    bool dominating_iff_self_inverse = true;
    for (Element i = 0; i < n; ++i) {
      const bool self = g.inverse(i) == i;
      if (!self) ++non_self_inverse;
      dominating_iff_self_inverse =
          dominating_iff_self_inverse && ((ni.degree(i) == n - 1) == self);
    }
    const std::size_t non_edges = n * (n - 1) / 2 - ni.edge_count();
    ledger.check("NONINVERSE_STRUCTURE",
                 dominating_iff_self_inverse && 2 * non_edges == non_self_inverse, label,
                 GraphKind::NonInverse,
                 std::to_string(non_edges) + " non-edges, " +
                     std::to_string(non_self_inverse) + " non-self-inverse elements");
  }

  if (p.is_p_group && n >= 3) {
    const auto& s = a.shape(GraphKind::Coprime);
    ledger.check("COPRIME_P_GROUP_STAR", s.is_star && s.star_center == Vertex{0}, label,
                 GraphKind::Coprime);
  } else {
    ledger.record("COPRIME_P_GROUP_STAR", CheckStatus::Skip, label, GraphKind::Coprime, {});
  }
}

void graph_invariants(GroupAnalysis& a, GraphKind kind, InvariantLedger& ledger) {
  const std::string& label = a.group().label();
  const auto& g = a.graph(kind);
  const auto& shape = a.shape(kind);
  for (const auto& check : sanity_invariants(g, shape, a.values(kind))) {
    ledger.record(check.id, check.status, label, kind, check.evidence);
  }

  if (!shape.dominating_vertices.empty() && shape.vertex_count >= 2) {
    ledger.check("DOMINATING_DIAMETER", shape.diameter && *shape.diameter <= 2, label, kind);
  } else {
    ledger.record("DOMINATING_DIAMETER", CheckStatus::Skip, label, kind, {});
  }

  // The one-flow-per-edge sweep against full recomputation on small graphs.
  if (a.oracle_in_range(kind)) {
    for (Measure m : {Measure::Edge, Measure::Vertex}) {
      const auto fast = minimality_sweep(g, m, {SweepMethod::LocalFlow, true});
      const auto full = minimality_sweep(g, m, {SweepMethod::Recompute, true});
      bool ok = fast.holds == full.holds && fast.base_value == full.base_value &&
                fast.per_edge_values.size() == full.per_edge_values.size();
      for (std::size_t i = 0; ok && i < full.per_edge_values.size(); ++i) {
        const auto v = full.per_edge_values[i].value;
        ok = v == fast.per_edge_values[i].value &&
             (v == full.base_value || v + 1 == full.base_value);
      }
      ledger.check("SWEEP_AGREEMENT", ok, label, kind, to_string(m));
    }
  } else {
    ledger.record("SWEEP_AGREEMENT", CheckStatus::Skip, label, kind, {});
  }
}

}  // namespace

CorpusReport run_corpus(const std::vector<FamilySpec>& corpus,
                        const std::vector<ClaimId>& claims, const CorpusConfig& config) {
  CorpusReport report;
  report.tool_version = GROUPGRAPH_VERSION;
  report.config = config;
  for (ClaimId id : claims) report.claims.push_back({id, 0, 0, 0, 0, {}});

  InvariantLedger ledger;
  for (const FamilySpec& spec : corpus) {
    FiniteGroup group = [&] {
      try {
        return build_family(spec, config.order_cap);
      } catch (const GroupError& e) {
        throw GroupError(e.kind(), "corpus entry " + to_spec_string(spec) + ": " + e.detail());
      }
    }();
    report.corpus.push_back(group.label());
    GroupAnalysis analysis(std::move(group), config.analysis);

    group_invariants(analysis, ledger);
    for (GraphKind k : kAllGraphKinds) graph_invariants(analysis, k, ledger);

    for (auto& tally : report.claims) {
      for (auto& v : evaluate_claim(tally.claim, analysis)) {
        if (!v.evaluated()) {
          ++tally.skipped;
        } else {
          ++tally.evaluated;
          ++(v.consistent ? tally.consistent : tally.inconsistent);
        }
        if (v.oracle_disagrees()) report.oracle_disagreements.push_back(v);
        tally.verdicts.push_back(std::move(v));
      }
    }
  }
  report.invariants = ledger.take();
  return report;
}

}  // namespace groupgraph
