#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "groupgraph/builders.hpp"
#include "groupgraph/connectivity.hpp"
#include "groupgraph/family.hpp"
#include "groupgraph/graph.hpp"
#include "groupgraph/group.hpp"
#include "groupgraph/minimality.hpp"

namespace groupgraph {

enum class ClaimId {
  DIAM2_EDGE_EQ_MINDEG,
  WHITNEY,
  L31_COMPLETE_STAR_MINIMAL,
  L32_COMMUTING_COMPLETE_IFF_ABELIAN,
  L_CP_COMPLETE_IFF_ORDER_LE_2,
  L34_OS_COMPLETE_IFF_PRIME,
  L35_NI_COMPLETE_IFF_SELF_INVERSE,
  L_NI_KAPPA_EQ,
  P_DOMINATING_CRITERION,
  P_OS_NULL_IF_NONCYCLIC,
  T_OS_EDGE_IFF_PRIME,
  T_NI_EDGE_IFF_UNIFORM_INVERSE,
  T_C_EDGE_IFF_ABELIAN,
  T_C_VERTEX_IFF_ABELIAN,
  T_OS_VERTEX_IFF_PRIME_POWER,
  T_NI_VERTEX_IFF_UNIFORM_INVERSE,
  P_CP_FULL_EXP_IFF_P_GROUP,
  T_CP_EVEN_NOT_MINIMAL,
  T_CP_VERTEX_IFF_P_GROUP,
  X_TREE_CLAIM,
};

// How lhs and rhs combine into a consistency verdict.
enum class LogicalForm {
  Iff,        // lhs <=> rhs
  Implies,    // rhs => lhs
  ScopedIff,  // lhs <=> rhs, only where the scope predicate holds
};

const char* to_string(LogicalForm form);

struct ClaimInfo {
  ClaimId id;
  const char* name;
  LogicalForm form;
  // The graph the claim talks about; nullopt means the claim is a statement
  // about arbitrary graphs and is evaluated on all four graphs of a group.
  std::optional<GraphKind> kind;
  const char* lhs;    // computed graph property
  const char* rhs;    // predicate it is compared against
  const char* scope;  // empty unless form is ScopedIff
};

const std::vector<ClaimInfo>& claim_registry();
const ClaimInfo& claim_info(ClaimId id);
const char* to_string(ClaimId id);
std::optional<ClaimId> parse_claim_id(std::string_view name);
std::vector<ClaimId> all_claims();

struct ClaimVerdict {
  ClaimId claim{};
  std::string group_label;
  std::optional<GraphKind> graph_kind;
  std::optional<bool> lhs;
  std::optional<bool> rhs;
  bool consistent = false;
  std::optional<std::string> skipped;
  // lhs recomputed with the brute-force oracles, when the graph is small
  // enough and lhs depends on connectivity values.
  std::optional<bool> oracle_lhs;
  std::vector<std::pair<std::string, std::int64_t>> details;
  std::string witness;

  bool evaluated() const { return !skipped.has_value(); }
  bool oracle_disagrees() const { return oracle_lhs && lhs && *oracle_lhs != *lhs; }
};

struct AnalysisOptions {
  // Oracle cross-checks of claim lhs values run for graphs up to this size.
  std::size_t oracle_max_vertices = kVertexOracleMaxVertices;
};

// One group with its four graphs and lazily computed, cached invariants.
// Not thread-safe; use one instance per thread.
class GroupAnalysis {
 public:
  explicit GroupAnalysis(FiniteGroup group, AnalysisOptions options = {});

  const FiniteGroup& group() const noexcept { return group_; }
  const GroupProfile& profile() const noexcept { return profile_; }
  const AnalysisOptions& options() const noexcept { return options_; }
  const SimpleGraph& graph(GraphKind kind) const { return graphs_[index(kind)]; }

  const GraphShape& shape(GraphKind kind);
  const ConnectivityValues& values(GraphKind kind);
  const MinimalityVerdict& sweep(GraphKind kind, Measure measure);
  bool oracle_in_range(GraphKind kind) const;
  // Oracle-computed connectivity values; requires oracle_in_range.
  const ConnectivityValues& oracle_values(GraphKind kind);
  // Oracle-backed sweep verdict; requires oracle_in_range.
  bool oracle_sweep_holds(GraphKind kind, Measure measure);

 private:
  static std::size_t index(GraphKind kind) { return static_cast<std::size_t>(kind); }

  FiniteGroup group_;
  GroupProfile profile_;
  AnalysisOptions options_;
  std::array<SimpleGraph, 4> graphs_;
  std::array<std::optional<GraphShape>, 4> shapes_;
  std::array<std::optional<ConnectivityValues>, 4> values_;
  std::array<std::optional<ConnectivityValues>, 4> oracle_values_;
  std::array<std::array<std::optional<MinimalityVerdict>, 2>, 4> sweeps_;
  std::array<std::array<std::optional<bool>, 2>, 4> oracle_sweeps_;
};

// One verdict for graph-specific claims; one per graph kind for claims about
// arbitrary graphs.
std::vector<ClaimVerdict> evaluate_claim(ClaimId claim, GroupAnalysis& analysis);
std::vector<ClaimVerdict> evaluate_claim(ClaimId claim, const FiniteGroup& group,
                                         AnalysisOptions options = {});

enum class CheckStatus { Pass, Fail, Skip };
const char* to_string(CheckStatus s);

struct InvariantCheck {
  std::string id;
  CheckStatus status = CheckStatus::Skip;
  std::string evidence;
};

// Whitney chain, diameter-2 equality, and flow-versus-oracle agreement for a
// single graph.
std::vector<InvariantCheck> sanity_invariants(const SimpleGraph& g);
// Same checks reusing already computed shape and flow values.
std::vector<InvariantCheck> sanity_invariants(const SimpleGraph& g, const GraphShape& shape,
                                              const ConnectivityValues& values);

struct CorpusConfig {
  std::size_t order_cap = kDefaultOrderCap;
  AnalysisOptions analysis;
};

struct ClaimTally {
  ClaimId claim{};
  std::size_t evaluated = 0;
  std::size_t consistent = 0;
  std::size_t inconsistent = 0;
  std::size_t skipped = 0;
  // Every verdict in (group, graph kind) order.
  std::vector<ClaimVerdict> verdicts;

  std::vector<ClaimVerdict> failures() const;
};

struct InvariantFailure {
  std::string group_label;
  std::optional<GraphKind> graph_kind;
  std::string evidence;
};

struct InvariantTally {
  std::string id;
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::vector<InvariantFailure> failures;
};

struct CorpusReport {
  std::string tool_version;
  CorpusConfig config;
  std::vector<std::string> corpus;  // group labels in evaluation order
  std::vector<ClaimTally> claims;
  std::vector<InvariantTally> invariants;
  // Verdicts where the oracle-backed lhs disagrees with the flow-based lhs.
  std::vector<ClaimVerdict> oracle_disagreements;

  std::size_t invariant_failures() const;
  // Oracle disagreements and invariant failures are defects in this code,
  // not findings about the claims.
  bool has_artifact_errors() const {
    return !oracle_disagreements.empty() || invariant_failures() != 0;
  }
};

std::vector<FamilySpec> default_corpus();
// One group spec per line; '#' comments and blank lines ignored.
std::vector<FamilySpec> parse_corpus(std::string_view text);
std::vector<FamilySpec> read_corpus_file(const std::string& path);

// Throws GroupError naming the offending spec if a group cannot be built.
CorpusReport run_corpus(const std::vector<FamilySpec>& corpus,
                        const std::vector<ClaimId>& claims,
                        const CorpusConfig& config = {});

std::string report_to_json(const CorpusReport& report);
std::string report_to_csv(const CorpusReport& report);

}  // namespace groupgraph
