#include "groupgraph/connectivity.hpp"

#include <algorithm>
#include <bit>

#include "flow.hpp"

namespace groupgraph {

namespace {

std::size_t min_degree(const SimpleGraph& g) {
  const auto& d = g.degrees();
  return d.empty() ? 0 : *std::min_element(d.begin(), d.end());
}

// Neighbourhood of v as a bitmask; valid for n <= 64.
std::uint64_t mask_row(const SimpleGraph& g, Vertex v) { return g.row(v)[0]; }

// True when the vertices in `alive` induce a connected subgraph.
bool mask_connected(const SimpleGraph& g, std::uint64_t alive) {
  if (alive == 0) return true;
  std::uint64_t seen = alive & (~alive + 1);
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= mask_row(g, static_cast<Vertex>(v));
    }
    next &= alive & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == alive;
}

}  // namespace

std::size_t local_edge_connectivity(const SimpleGraph& g, Vertex s, Vertex t,
                                    std::size_t limit) {
  auto net = detail::edge_network(g);
  return static_cast<std::size_t>(net.max_flow(s, t, static_cast<int>(limit)));
}

std::size_t local_vertex_connectivity(const SimpleGraph& g, Vertex s, Vertex t,
                                      std::size_t limit) {
  if (s == t || g.adjacent(s, t)) {
    throw GraphError("local vertex connectivity needs distinct non-adjacent vertices");
  }
  auto net = detail::vertex_network(g);
  return static_cast<std::size_t>(
      net.max_flow(2 * std::size_t{s} + 1, 2 * std::size_t{t}, static_cast<int>(limit)));
}

std::size_t edge_connectivity(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1 || !is_connected(g)) return 0;
  // Every global cut separates vertex 0 from some t. The answer never exceeds
  // the minimum degree, which caps each query.
  std::size_t best = min_degree(g);
  auto net = detail::edge_network(g);
  for (Vertex t = 1; t < n && best > 0; ++t) {
    best = std::min(best, static_cast<std::size_t>(
                              net.max_flow(0, t, static_cast<int>(best))));
  }
  return best;
}

std::size_t vertex_connectivity(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1 || !is_connected(g)) return 0;
  std::size_t best = min_degree(g);
  if (best == n - 1) return n - 1;
  // Some vertex among the first kappa + 1 lies outside any minimum cut S and
  // is separated by S from a non-neighbour, so sources beyond index `best`
  // cannot improve the answer. Pairs are scanned lexicographically.
  auto net = detail::vertex_network(g);
  for (Vertex s = 0; s < n && s <= best; ++s) {
    for (Vertex t = 0; t < n && best > 0; ++t) {
      if (s == t || g.adjacent(s, t)) continue;
      const int flow = net.max_flow(2 * std::size_t{s} + 1, 2 * std::size_t{t},
                                    static_cast<int>(best));
      best = std::min(best, static_cast<std::size_t>(flow));
    }
  }
  return best;
}

ConnectivityValues connectivity_values(const SimpleGraph& g) {
  return {edge_connectivity(g), vertex_connectivity(g), min_degree(g)};
}

std::size_t edge_connectivity_oracle(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kEdgeOracleMaxVertices) {
    throw TooLargeForOracle("edge oracle limited to " +
                            std::to_string(kEdgeOracleMaxVertices) + " vertices, got " +
                            std::to_string(n));
  }
  if (n <= 1) return 0;
  // Vertex 0 always sits on side A; side B = `side` over vertices 1..n-1.
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  std::size_t best = g.edge_count();
  for (std::uint64_t side = 2; side <= all; side += 2) {
    std::size_t crossing = 0;
    for (std::uint64_t rest = side; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      crossing += static_cast<std::size_t>(
          std::popcount(mask_row(g, static_cast<Vertex>(v)) & ~side & all));
    }
    best = std::min(best, crossing);
  }
  return best;
}

std::size_t vertex_connectivity_oracle(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kVertexOracleMaxVertices) {
    throw TooLargeForOracle("vertex oracle limited to " +
                            std::to_string(kVertexOracleMaxVertices) +
                            " vertices, got " + std::to_string(n));
  }
  if (n <= 1) return 0;
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::uint64_t removed = 0; removed <= all; ++removed) {
      if (static_cast<std::size_t>(std::popcount(removed)) != k) continue;
      const std::uint64_t alive = all & ~removed;
      if (std::popcount(alive) <= 1 || !mask_connected(g, alive)) return k;
    }
  }
  return n - 1;
}

}  // namespace groupgraph
