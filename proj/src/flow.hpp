#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "groupgraph/graph.hpp"

namespace groupgraph::detail {

// Small integer-capacity network solved by shortest augmenting paths.
// Capacities are restored before every query, so one network can answer many
// (source, sink) questions.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : adjacency_(nodes) {}

  // Adds arc a->b with capacity cap and a reverse arc b->a with capacity
  // reverse_cap. Passing cap for both models an undirected unit edge.
  void add_arc_pair(std::size_t a, std::size_t b, int cap, int reverse_cap);

  // Maximum flow from source to sink, stopping early once limit is reached.
  int max_flow(std::size_t source, std::size_t sink, int limit);

  std::size_t node_count() const noexcept { return adjacency_.size(); }

 private:
  struct Arc {
    std::uint32_t to;
    int cap;
  };
  std::vector<Arc> arcs_;  // arc i pairs with i ^ 1
  std::vector<int> initial_caps_;
  std::vector<std::vector<std::uint32_t>> adjacency_;
  std::vector<std::int64_t> parent_arc_;
  std::vector<std::uint32_t> queue_;
};

// Undirected unit-capacity network over the graph's edges.
FlowNetwork edge_network(const SimpleGraph& g);

// Vertex-split network: vertex v becomes in-node 2v and out-node 2v+1 joined
// by a unit arc. Query with source 2s+1 and sink 2t.
FlowNetwork vertex_network(const SimpleGraph& g);

}  // namespace groupgraph::detail
