#pragma once

#include <cstddef>
#include <stdexcept>

#include "groupgraph/graph.hpp"

namespace groupgraph {

inline constexpr std::size_t kEdgeOracleMaxVertices = 20;
inline constexpr std::size_t kVertexOracleMaxVertices = 12;

// Raised when a brute-force oracle is asked about a graph above its guard.
class TooLargeForOracle : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct ConnectivityValues {
  std::size_t kappa_edge = 0;    // edge connectivity
  std::size_t kappa_vertex = 0;  // vertex connectivity
  std::size_t min_degree = 0;
};

// Global minimum edge cut via unit-capacity max-flow from vertex 0 to every
// other vertex. 0 for n <= 1 or disconnected graphs.
std::size_t edge_connectivity(const SimpleGraph& g);

// Smallest vertex set whose removal disconnects the graph or leaves a single
// vertex. Complete graphs give n - 1; n <= 1 and disconnected graphs give 0.
std::size_t vertex_connectivity(const SimpleGraph& g);

ConnectivityValues connectivity_values(const SimpleGraph& g);

// Maximum number of edge-disjoint s-t paths, capped at limit.
std::size_t local_edge_connectivity(const SimpleGraph& g, Vertex s, Vertex t,
                                    std::size_t limit);

// Maximum number of internally vertex-disjoint s-t paths for non-adjacent
// s != t, capped at limit. Throws GraphError if s and t are adjacent.
std::size_t local_vertex_connectivity(const SimpleGraph& g, Vertex s, Vertex t,
                                      std::size_t limit);

// Brute force over all bipartitions. Throws TooLargeForOracle above
// kEdgeOracleMaxVertices.
std::size_t edge_connectivity_oracle(const SimpleGraph& g);

// Brute force over vertex subsets by increasing size. Throws
// TooLargeForOracle above kVertexOracleMaxVertices.
std::size_t vertex_connectivity_oracle(const SimpleGraph& g);

}  // namespace groupgraph
