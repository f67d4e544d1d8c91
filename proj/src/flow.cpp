#include "flow.hpp"

#include <algorithm>

namespace groupgraph::detail {

void FlowNetwork::add_arc_pair(std::size_t a, std::size_t b, int cap,
                               int reverse_cap) {
  const auto idx = static_cast<std::uint32_t>(arcs_.size());
  arcs_.push_back({static_cast<std::uint32_t>(b), cap});
  arcs_.push_back({static_cast<std::uint32_t>(a), reverse_cap});
  initial_caps_.push_back(cap);
  initial_caps_.push_back(reverse_cap);
  adjacency_[a].push_back(idx);
  adjacency_[b].push_back(idx + 1);
}

int FlowNetwork::max_flow(std::size_t source, std::size_t sink, int limit) {
  for (std::size_t i = 0; i < arcs_.size(); ++i) arcs_[i].cap = initial_caps_[i];
  if (source == sink) return 0;
  parent_arc_.assign(adjacency_.size(), -1);
  int flow = 0;
  while (flow < limit) {
    std::fill(parent_arc_.begin(), parent_arc_.end(), -1);
    parent_arc_[source] = -2;
    queue_.clear();
    queue_.push_back(static_cast<std::uint32_t>(source));
    bool reached = false;
    for (std::size_t head = 0; head < queue_.size() && !reached; ++head) {
      const auto a = queue_[head];
      for (auto idx : adjacency_[a]) {
        const Arc& arc = arcs_[idx];
        if (arc.cap > 0 && parent_arc_[arc.to] == -1) {
          parent_arc_[arc.to] = idx;
          if (arc.to == sink) {
            reached = true;
            break;
          }
          queue_.push_back(arc.to);
        }
      }
    }
    if (!reached) break;
    // Unit augmentation: every arc on the path has capacity >= 1.
    for (std::size_t v = sink; v != source;) {
      const auto idx = static_cast<std::size_t>(parent_arc_[v]);
      arcs_[idx].cap -= 1;
      arcs_[idx ^ 1].cap += 1;
      v = arcs_[idx ^ 1].to;
    }
    ++flow;
  }
  return flow;
}

FlowNetwork edge_network(const SimpleGraph& g) {
  FlowNetwork net(g.vertex_count());
  for (const Edge& e : g.edges()) net.add_arc_pair(e.u, e.v, 1, 1);
  return net;
}

FlowNetwork vertex_network(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  FlowNetwork net(2 * n);
  for (std::size_t v = 0; v < n; ++v) net.add_arc_pair(2 * v, 2 * v + 1, 1, 0);
  for (const Edge& e : g.edges()) {
    net.add_arc_pair(2 * e.u + 1, 2 * e.v, 1, 0);
    net.add_arc_pair(2 * e.v + 1, 2 * e.u, 1, 0);
  }
  return net;
}

}  // namespace groupgraph::detail
