#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "groupgraph/graph.hpp"

namespace testutil {

using groupgraph::Edge;
using groupgraph::SimpleGraph;
using groupgraph::Vertex;

// Adjacency matrix built straight from the edge list, so the checks below
// share nothing with the library's bit rows.
inline std::vector<std::vector<bool>> matrix(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = true;
  return a;
}

// Connectivity of the subgraph induced on vertices with alive[v] set.
inline bool connected_on(const std::vector<std::vector<bool>>& a, const std::vector<bool>& alive) {
  const std::size_t n = a.size();
  std::size_t start = n, count = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (alive[v]) {
      ++count;
      if (start == n) start = v;
    }
  }
  if (count <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t y = 0; y < n; ++y) {
      if (alive[y] && a[x][y] && !seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == count;
}

// Smallest number of edges crossing a proper bipartition.
inline std::size_t brute_edge_connectivity(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return 0;
  std::size_t best = g.edge_count();
  // Vertex n-1 stays on side 0 to halve the enumeration.
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    std::size_t cut = 0;
    for (const Edge& e : g.edges()) {
      if (((mask >> e.u) & 1U) != ((mask >> e.v) & 1U)) ++cut;
    }
    if (cut < best) best = cut;
  }
  return best;
}

// Smallest vertex set whose removal disconnects the graph or leaves one vertex.
inline std::size_t brute_vertex_connectivity(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return 0;
  const auto a = matrix(g);
  std::size_t best = n - 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto removed = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (removed >= best) continue;
    std::vector<bool> alive(n);
    for (std::size_t v = 0; v < n; ++v) alive[v] = !((mask >> v) & 1U);
    if (!connected_on(a, alive)) best = removed;
  }
  return best;
}

inline std::size_t min_degree(const SimpleGraph& g) {
  std::vector<std::size_t> deg(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    ++deg[e.u];
    ++deg[e.v];
  }
  if (deg.empty()) return 0;
  std::size_t m = deg[0];
  for (auto d : deg) m = std::min(m, d);
  return m;
}

inline SimpleGraph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return SimpleGraph(n, edges);
}

inline std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

}  // namespace testutil
