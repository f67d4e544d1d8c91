#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "groupgraph/graph.hpp"

namespace groupgraph {

enum class Measure {
  Edge,    // edge connectivity
  Vertex,  // vertex connectivity
};

const char* to_string(Measure m);

// How each Γ - ε value in a sweep is obtained.
enum class SweepMethod {
  // One bounded local flow between the endpoints of ε. Exact because
  // deleting an edge lowers either connectivity by at most one, and any
  // drop must separate the two endpoints.
  LocalFlow,
  // Full flow-based recomputation on Γ - ε.
  Recompute,
  // Brute-force oracle on Γ - ε; subject to the oracle size guards.
  Oracle,
};

struct EdgeValue {
  Edge edge;
  std::size_t value = 0;
};

struct MinimalityVerdict {
  Measure measure = Measure::Edge;
  // Graph connected with at least two vertices.
  bool applicable = false;
  std::size_t base_value = 0;
  bool holds = false;
  // Edges whose deletion does not lower the measure by exactly one, in
  // canonical edge order.
  std::vector<Edge> violating_edges;
  // Filled when requested; canonical edge order.
  std::vector<EdgeValue> per_edge_values;
};

struct SweepOptions {
  SweepMethod method = SweepMethod::LocalFlow;
  bool record_per_edge = false;
};

MinimalityVerdict minimality_sweep(const SimpleGraph& g, Measure measure,
                                   SweepOptions options = {});

inline MinimalityVerdict is_minimally_edge_connected(const SimpleGraph& g,
                                                     SweepOptions options = {}) {
  return minimality_sweep(g, Measure::Edge, options);
}

inline MinimalityVerdict is_minimally_connected(const SimpleGraph& g,
                                                SweepOptions options = {}) {
  return minimality_sweep(g, Measure::Vertex, options);
}

// Criterion for non-complete graphs with a dominating vertex: minimally edge
// connected iff the dominating vertex is unique and removing it leaves a
// regular graph.
struct DominatingCriterion {
  bool answer = false;
  bool unique_dominating = false;
  bool rest_regular = false;
  Vertex dominating = 0;  // smallest dominating vertex
};

// nullopt when the graph is complete or has no dominating vertex.
std::optional<DominatingCriterion> dominating_vertex_criterion(const SimpleGraph& g);

}  // namespace groupgraph
