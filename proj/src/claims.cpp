#include "groupgraph/claims.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace groupgraph {

namespace {

using G = GraphKind;
using F = LogicalForm;

const std::vector<ClaimInfo> kRegistry = {
    {ClaimId::DIAM2_EDGE_EQ_MINDEG, "DIAM2_EDGE_EQ_MINDEG", F::Implies, std::nullopt,
     "edge connectivity equals minimum degree", "diameter <= 2", ""},
    {ClaimId::WHITNEY, "WHITNEY", F::Implies, std::nullopt,
     "vertex connectivity <= edge connectivity <= minimum degree", "always", ""},
    {ClaimId::L31_COMPLETE_STAR_MINIMAL, "L31_COMPLETE_STAR_MINIMAL", F::Implies,
     std::nullopt, "minimally edge connected and minimally connected",
     "complete (n >= 2) or star", ""},
    {ClaimId::L32_COMMUTING_COMPLETE_IFF_ABELIAN, "L32_COMMUTING_COMPLETE_IFF_ABELIAN",
     F::Iff, G::Commuting, "graph is complete", "group is abelian", ""},
    {ClaimId::L_CP_COMPLETE_IFF_ORDER_LE_2, "L_CP_COMPLETE_IFF_ORDER_LE_2", F::Iff,
     G::Coprime, "graph is complete", "|G| <= 2", ""},
    {ClaimId::L34_OS_COMPLETE_IFF_PRIME, "L34_OS_COMPLETE_IFF_PRIME", F::Iff, G::OrderSum,
     "graph is complete", "|G| is prime", ""},
    {ClaimId::L35_NI_COMPLETE_IFF_SELF_INVERSE, "L35_NI_COMPLETE_IFF_SELF_INVERSE", F::Iff,
     G::NonInverse, "graph is complete", "every element is self-inverse", ""},
    {ClaimId::L_NI_KAPPA_EQ, "L_NI_KAPPA_EQ", F::Implies, G::NonInverse,
     "vertex connectivity equals edge connectivity", "always", ""},
    {ClaimId::P_DOMINATING_CRITERION, "P_DOMINATING_CRITERION", F::ScopedIff, std::nullopt,
     "minimally edge connected (deletion sweep)",
     "unique dominating vertex and the rest is regular",
     "connected, non-complete, has a dominating vertex"},
    {ClaimId::P_OS_NULL_IF_NONCYCLIC, "P_OS_NULL_IF_NONCYCLIC", F::Implies, G::OrderSum,
     "graph has no edges", "group is non-cyclic", ""},
    {ClaimId::T_OS_EDGE_IFF_PRIME, "T_OS_EDGE_IFF_PRIME", F::ScopedIff, G::OrderSum,
     "minimally edge connected", "|G| is prime", "group is cyclic"},
    {ClaimId::T_NI_EDGE_IFF_UNIFORM_INVERSE, "T_NI_EDGE_IFF_UNIFORM_INVERSE", F::Iff,
     G::NonInverse, "minimally edge connected",
     "non-identity elements are all self-inverse or none are", ""},
    {ClaimId::T_C_EDGE_IFF_ABELIAN, "T_C_EDGE_IFF_ABELIAN", F::Iff, G::Commuting,
     "minimally edge connected", "group is abelian", ""},
    {ClaimId::T_C_VERTEX_IFF_ABELIAN, "T_C_VERTEX_IFF_ABELIAN", F::Iff, G::Commuting,
     "minimally connected", "group is abelian", ""},
    {ClaimId::T_OS_VERTEX_IFF_PRIME_POWER, "T_OS_VERTEX_IFF_PRIME_POWER", F::Iff,
     G::OrderSum, "minimally connected", "|G| is a prime power", ""},
    {ClaimId::T_NI_VERTEX_IFF_UNIFORM_INVERSE, "T_NI_VERTEX_IFF_UNIFORM_INVERSE", F::Iff,
     G::NonInverse, "minimally connected",
     "non-identity elements are all self-inverse or none are", ""},
    {ClaimId::P_CP_FULL_EXP_IFF_P_GROUP, "P_CP_FULL_EXP_IFF_P_GROUP", F::ScopedIff,
     G::Coprime, "minimally edge connected", "group is a p-group",
     "group has full exponent"},
    {ClaimId::T_CP_EVEN_NOT_MINIMAL, "T_CP_EVEN_NOT_MINIMAL", F::Implies, G::Coprime,
     "not minimally edge connected", "|G| even and group is not a p-group", ""},
    {ClaimId::T_CP_VERTEX_IFF_P_GROUP, "T_CP_VERTEX_IFF_P_GROUP", F::Iff, G::Coprime,
     "minimally connected", "group is a p-group", ""},
    {ClaimId::X_TREE_CLAIM, "X_TREE_CLAIM", F::Iff, std::nullopt, "minimally connected",
     "graph is a tree", ""},
};

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

std::string edge_list_text(const std::vector<Edge>& edges, std::size_t limit = 8) {
  std::ostringstream os;
  for (std::size_t i = 0; i < edges.size() && i < limit; ++i) {
    if (i) os << " ";
    os << edges[i];
  }
  if (edges.size() > limit) os << " ...";
  return os.str();
}

}  // namespace

const char* to_string(LogicalForm form) {
  switch (form) {
    case LogicalForm::Iff: return "iff";
    case LogicalForm::Implies: return "implies";
    case LogicalForm::ScopedIff: return "scoped-iff";
  }
  return "unknown";
}

const std::vector<ClaimInfo>& claim_registry() { return kRegistry; }

const ClaimInfo& claim_info(ClaimId id) {
  for (const auto& info : kRegistry) {
    if (info.id == id) return info;
  }
  throw std::out_of_range("unregistered claim id");
}

const char* to_string(ClaimId id) { return claim_info(id).name; }

std::optional<ClaimId> parse_claim_id(std::string_view name) {
  for (const auto& info : kRegistry) {
    if (name == info.name) return info.id;
  }
  return std::nullopt;
}

std::vector<ClaimId> all_claims() {
  std::vector<ClaimId> out;
  for (const auto& info : kRegistry) out.push_back(info.id);
  return out;
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "unknown";
}

GroupAnalysis::GroupAnalysis(FiniteGroup group, AnalysisOptions options)
    : group_(std::move(group)), profile_(groupgraph::profile(group_)), options_(options) {
  for (GraphKind k : kAllGraphKinds) graphs_[index(k)] = build_graph(group_, k);
}

const GraphShape& GroupAnalysis::shape(GraphKind kind) {
  auto& slot = shapes_[index(kind)];
  if (!slot) slot = shape_profile(graph(kind));
  return *slot;
}

const ConnectivityValues& GroupAnalysis::values(GraphKind kind) {
  auto& slot = values_[index(kind)];
  if (!slot) slot = connectivity_values(graph(kind));
  return *slot;
}

const MinimalityVerdict& GroupAnalysis::sweep(GraphKind kind, Measure measure) {
  auto& slot = sweeps_[index(kind)][static_cast<std::size_t>(measure)];
  if (!slot) slot = minimality_sweep(graph(kind), measure);
  return *slot;
}

bool GroupAnalysis::oracle_in_range(GraphKind kind) const {
  const std::size_t limit = std::min(options_.oracle_max_vertices, kVertexOracleMaxVertices);
  return graph(kind).vertex_count() <= limit;
}

const ConnectivityValues& GroupAnalysis::oracle_values(GraphKind kind) {
  auto& slot = oracle_values_[index(kind)];
  if (!slot) {
    const auto& g = graph(kind);
    slot = ConnectivityValues{edge_connectivity_oracle(g), vertex_connectivity_oracle(g),
                              shape(kind).min_degree};
  }
  return *slot;
}

bool GroupAnalysis::oracle_sweep_holds(GraphKind kind, Measure measure) {
  auto& slot = oracle_sweeps_[index(kind)][static_cast<std::size_t>(measure)];
  if (!slot) {
    slot = minimality_sweep(graph(kind), measure, {SweepMethod::Oracle, false}).holds;
  }
  return *slot;
}

namespace {

bool combine(LogicalForm form, bool lhs, bool rhs) {
  return form == LogicalForm::Implies ? (!rhs || lhs) : (lhs == rhs);
}

void add_connectivity_details(ClaimVerdict& v, GroupAnalysis& a, GraphKind kind) {
  const auto& s = a.shape(kind);
  const auto& c = a.values(kind);
  v.details.emplace_back("n", as_int(s.vertex_count));
  v.details.emplace_back("edges", as_int(s.edge_count));
  v.details.emplace_back("min_degree", as_int(s.min_degree));
  v.details.emplace_back("kappa", as_int(c.kappa_vertex));
  v.details.emplace_back("kappa_edge", as_int(c.kappa_edge));
  v.details.emplace_back("diameter", s.diameter ? as_int(*s.diameter) : -1);
}

void add_sweep_details(ClaimVerdict& v, const MinimalityVerdict& m) {
  const std::string prefix = m.measure == Measure::Edge ? "edge_sweep_" : "vertex_sweep_";
  v.details.emplace_back(prefix + "applicable", m.applicable ? 1 : 0);
  v.details.emplace_back(prefix + "base", as_int(m.base_value));
  v.details.emplace_back(prefix + "violations", as_int(m.violating_edges.size()));
  if (!m.violating_edges.empty()) {
    if (!v.witness.empty()) v.witness += "; ";
    v.witness += std::string(to_string(m.measure)) +
                 " sweep violating edges: " + edge_list_text(m.violating_edges);
  }
}

bool uniform_inverse(const GroupProfile& p) {
  return p.all_nonidentity_self_inverse || p.no_nonidentity_self_inverse;
}

// Claims whose lhs is a minimality sweep on a fixed graph kind.
struct SweepClaim {
  ClaimId id;
  GraphKind kind;
  Measure measure;
  bool negate;  // lhs is "not minimal"
};

std::optional<SweepClaim> sweep_claim(ClaimId id) {
  switch (id) {
    case ClaimId::T_OS_EDGE_IFF_PRIME: return SweepClaim{id, G::OrderSum, Measure::Edge, false};
    case ClaimId::T_NI_EDGE_IFF_UNIFORM_INVERSE:
      return SweepClaim{id, G::NonInverse, Measure::Edge, false};
    case ClaimId::T_C_EDGE_IFF_ABELIAN: return SweepClaim{id, G::Commuting, Measure::Edge, false};
    case ClaimId::T_C_VERTEX_IFF_ABELIAN:
      return SweepClaim{id, G::Commuting, Measure::Vertex, false};
    case ClaimId::T_OS_VERTEX_IFF_PRIME_POWER:
      return SweepClaim{id, G::OrderSum, Measure::Vertex, false};
    case ClaimId::T_NI_VERTEX_IFF_UNIFORM_INVERSE:
      return SweepClaim{id, G::NonInverse, Measure::Vertex, false};
    case ClaimId::P_CP_FULL_EXP_IFF_P_GROUP:
      return SweepClaim{id, G::Coprime, Measure::Edge, false};
    case ClaimId::T_CP_EVEN_NOT_MINIMAL: return SweepClaim{id, G::Coprime, Measure::Edge, true};
    case ClaimId::T_CP_VERTEX_IFF_P_GROUP:
      return SweepClaim{id, G::Coprime, Measure::Vertex, false};
    default: return std::nullopt;
  }
}

bool group_rhs(ClaimId id, const GroupProfile& p) {
  switch (id) {
    case ClaimId::L32_COMMUTING_COMPLETE_IFF_ABELIAN:
    case ClaimId::T_C_EDGE_IFF_ABELIAN:
    case ClaimId::T_C_VERTEX_IFF_ABELIAN: return p.is_abelian;
    case ClaimId::L_CP_COMPLETE_IFF_ORDER_LE_2: return p.order <= 2;
    case ClaimId::L34_OS_COMPLETE_IFF_PRIME:
    case ClaimId::T_OS_EDGE_IFF_PRIME: return p.is_prime_order;
    case ClaimId::L35_NI_COMPLETE_IFF_SELF_INVERSE: return p.all_nonidentity_self_inverse;
    case ClaimId::P_OS_NULL_IF_NONCYCLIC: return !p.is_cyclic;
    case ClaimId::T_NI_EDGE_IFF_UNIFORM_INVERSE:
    case ClaimId::T_NI_VERTEX_IFF_UNIFORM_INVERSE: return uniform_inverse(p);
    case ClaimId::T_OS_VERTEX_IFF_PRIME_POWER: return p.is_prime_power_order;
    case ClaimId::P_CP_FULL_EXP_IFF_P_GROUP:
    case ClaimId::T_CP_VERTEX_IFF_P_GROUP: return p.is_p_group;
    case ClaimId::T_CP_EVEN_NOT_MINIMAL: return p.is_even_order && !p.is_p_group;
    case ClaimId::L_NI_KAPPA_EQ: return true;
    default: break;
  }
  throw std::logic_error("claim has no group-side predicate");
}

std::optional<std::string> group_scope_miss(ClaimId id, const GroupProfile& p) {
  if (id == ClaimId::T_OS_EDGE_IFF_PRIME && !p.is_cyclic) return "group is not cyclic";
  if (id == ClaimId::P_CP_FULL_EXP_IFF_P_GROUP && !p.is_full_exponent) {
    return "group does not have full exponent";
  }
  return std::nullopt;
}

ClaimVerdict new_verdict(ClaimId id, const GroupAnalysis& a, std::optional<GraphKind> kind) {
  ClaimVerdict v;
  v.claim = id;
  v.group_label = a.group().label();
  v.graph_kind = kind;
  return v;
}

void finish(ClaimVerdict& v, bool lhs, bool rhs) {
  v.lhs = lhs;
  v.rhs = rhs;
  v.consistent = combine(claim_info(v.claim).form, lhs, rhs);
}

void skip(ClaimVerdict& v, std::string reason) {
  v.skipped = std::move(reason);
  v.lhs.reset();
  v.rhs.reset();
  v.oracle_lhs.reset();
  v.consistent = false;
}

ClaimVerdict evaluate_graph_claim(ClaimId id, GroupAnalysis& a, GraphKind kind) {
  ClaimVerdict v = new_verdict(id, a, kind);
  const auto& shape = a.shape(kind);
  const bool oracle = a.oracle_in_range(kind);
  switch (id) {
    case ClaimId::DIAM2_EDGE_EQ_MINDEG: {
      add_connectivity_details(v, a, kind);
      const auto& c = a.values(kind);
      const bool rhs = shape.diameter && *shape.diameter <= 2;
      finish(v, c.kappa_edge == shape.min_degree, rhs);
      if (oracle) v.oracle_lhs = a.oracle_values(kind).kappa_edge == shape.min_degree;
      break;
    }
    case ClaimId::WHITNEY: {
      add_connectivity_details(v, a, kind);
      const auto& c = a.values(kind);
      finish(v, c.kappa_vertex <= c.kappa_edge && c.kappa_edge <= c.min_degree, true);
      if (oracle) {
        const auto& o = a.oracle_values(kind);
        v.oracle_lhs = o.kappa_vertex <= o.kappa_edge && o.kappa_edge <= o.min_degree;
      }
      break;
    }
    case ClaimId::L31_COMPLETE_STAR_MINIMAL: {
      const auto& e = a.sweep(kind, Measure::Edge);
      const auto& m = a.sweep(kind, Measure::Vertex);
      add_connectivity_details(v, a, kind);
      add_sweep_details(v, e);
      add_sweep_details(v, m);
      const bool rhs = (shape.is_complete && shape.vertex_count >= 2) || shape.is_star;
      finish(v, e.holds && m.holds, rhs);
      if (oracle) {
        v.oracle_lhs = a.oracle_sweep_holds(kind, Measure::Edge) &&
                       a.oracle_sweep_holds(kind, Measure::Vertex);
      }
      break;
    }
    case ClaimId::P_DOMINATING_CRITERION: {
      const auto criterion = dominating_vertex_criterion(a.graph(kind));
      if (!criterion) {
        skip(v, shape.is_complete ? "graph is complete" : "no dominating vertex");
        break;
      }
      const auto& e = a.sweep(kind, Measure::Edge);
      add_connectivity_details(v, a, kind);
      add_sweep_details(v, e);
      v.details.emplace_back("dominating_vertex", criterion->dominating);
      v.details.emplace_back("unique_dominating", criterion->unique_dominating ? 1 : 0);
      v.details.emplace_back("rest_regular", criterion->rest_regular ? 1 : 0);
      finish(v, e.holds, criterion->answer);
      if (oracle) v.oracle_lhs = a.oracle_sweep_holds(kind, Measure::Edge);
      break;
    }
    case ClaimId::X_TREE_CLAIM: {
      const auto& m = a.sweep(kind, Measure::Vertex);
      add_connectivity_details(v, a, kind);
      add_sweep_details(v, m);
      finish(v, m.holds, shape.is_tree);
      if (oracle) v.oracle_lhs = a.oracle_sweep_holds(kind, Measure::Vertex);
      break;
    }
    default:
      throw std::logic_error("not a graph claim");
  }
  return v;
}

ClaimVerdict evaluate_group_claim(ClaimId id, GroupAnalysis& a) {
  const GraphKind kind = *claim_info(id).kind;
  ClaimVerdict v = new_verdict(id, a, kind);
  const auto& p = a.profile();
  if (auto miss = group_scope_miss(id, p)) {
    skip(v, *miss);
    return v;
  }
  const auto& shape = a.shape(kind);
  const bool rhs = group_rhs(id, p);

  if (auto sc = sweep_claim(id)) {
    const auto& m = a.sweep(kind, sc->measure);
    add_connectivity_details(v, a, kind);
    add_sweep_details(v, m);
    finish(v, sc->negate ? !m.holds : m.holds, rhs);
    if (a.oracle_in_range(kind)) {
      const bool holds = a.oracle_sweep_holds(kind, sc->measure);
      v.oracle_lhs = sc->negate ? !holds : holds;
    }
    return v;
  }

  v.details.emplace_back("n", as_int(shape.vertex_count));
  v.details.emplace_back("edges", as_int(shape.edge_count));
  v.details.emplace_back("min_degree", as_int(shape.min_degree));
  switch (id) {
    case ClaimId::L32_COMMUTING_COMPLETE_IFF_ABELIAN:
    case ClaimId::L_CP_COMPLETE_IFF_ORDER_LE_2:
    case ClaimId::L34_OS_COMPLETE_IFF_PRIME:
    case ClaimId::L35_NI_COMPLETE_IFF_SELF_INVERSE:
      finish(v, shape.is_complete, rhs);
      break;
    case ClaimId::P_OS_NULL_IF_NONCYCLIC:
      finish(v, shape.edge_count == 0, rhs);
      break;
    case ClaimId::L_NI_KAPPA_EQ: {
      const auto& c = a.values(kind);
      v.details.emplace_back("kappa", as_int(c.kappa_vertex));
      v.details.emplace_back("kappa_edge", as_int(c.kappa_edge));
      finish(v, c.kappa_vertex == c.kappa_edge, rhs);
      if (a.oracle_in_range(kind)) {
        const auto& o = a.oracle_values(kind);
        v.oracle_lhs = o.kappa_vertex == o.kappa_edge;
      }
      break;
    }
    default:
      throw std::logic_error("unhandled claim");
  }
  return v;
}

}  // namespace

std::vector<ClaimVerdict> evaluate_claim(ClaimId claim, GroupAnalysis& analysis) {
  const ClaimInfo& info = claim_info(claim);
  if (info.kind) return {evaluate_group_claim(claim, analysis)};
  std::vector<ClaimVerdict> out;
  for (GraphKind k : kAllGraphKinds) out.push_back(evaluate_graph_claim(claim, analysis, k));
  return out;
}

std::vector<ClaimVerdict> evaluate_claim(ClaimId claim, const FiniteGroup& group,
                                         AnalysisOptions options) {
  GroupAnalysis analysis(group, options);
  return evaluate_claim(claim, analysis);
}

std::vector<InvariantCheck> sanity_invariants(const SimpleGraph& g) {
  return sanity_invariants(g, shape_profile(g), connectivity_values(g));
}

std::vector<InvariantCheck> sanity_invariants(const SimpleGraph& g, const GraphShape& shape,
                                              const ConnectivityValues& c) {
  std::vector<InvariantCheck> out;
  auto triple = [](std::size_t a, std::size_t b, std::size_t d) {
    return std::to_string(a) + " <= " + std::to_string(b) + " <= " + std::to_string(d);
  };

  out.push_back({"WHITNEY",
                 c.kappa_vertex <= c.kappa_edge && c.kappa_edge <= c.min_degree
                     ? CheckStatus::Pass
                     : CheckStatus::Fail,
                 triple(c.kappa_vertex, c.kappa_edge, c.min_degree)});

  if (!shape.diameter) {
    out.push_back({"DIAM2", CheckStatus::Skip, "disconnected"});
  } else if (*shape.diameter > 2) {
    out.push_back({"DIAM2", CheckStatus::Skip, "diameter " + std::to_string(*shape.diameter)});
  } else {
    out.push_back({"DIAM2", c.kappa_edge == c.min_degree ? CheckStatus::Pass : CheckStatus::Fail,
                   "kappa_edge " + std::to_string(c.kappa_edge) + ", min_degree " +
                       std::to_string(c.min_degree)});
  }

  if (g.vertex_count() <= kEdgeOracleMaxVertices) {
    const auto o = edge_connectivity_oracle(g);
    out.push_back({"ORACLE_EDGE", o == c.kappa_edge ? CheckStatus::Pass : CheckStatus::Fail,
                   "flow " + std::to_string(c.kappa_edge) + ", oracle " + std::to_string(o)});
  } else {
    out.push_back({"ORACLE_EDGE", CheckStatus::Skip, "above oracle size guard"});
  }
  if (g.vertex_count() <= kVertexOracleMaxVertices) {
    const auto o = vertex_connectivity_oracle(g);
    out.push_back({"ORACLE_VERTEX", o == c.kappa_vertex ? CheckStatus::Pass : CheckStatus::Fail,
                   "flow " + std::to_string(c.kappa_vertex) + ", oracle " + std::to_string(o)});
  } else {
    out.push_back({"ORACLE_VERTEX", CheckStatus::Skip, "above oracle size guard"});
  }
  return out;
}

std::vector<ClaimVerdict> ClaimTally::failures() const {
  std::vector<ClaimVerdict> out;
  for (const auto& v : verdicts) {
    if (v.evaluated() && !v.consistent) out.push_back(v);
  }
  return out;
}

std::size_t CorpusReport::invariant_failures() const {
  std::size_t total = 0;
  for (const auto& t : invariants) total += t.failed;
  return total;
}

}  // namespace groupgraph
