#include "groupgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace groupgraph {

std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << "{" << e.u << "," << e.v << "}";
}

const char* to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::Commuting: return "commuting";
    case GraphKind::Coprime: return "coprime";
    case GraphKind::OrderSum: return "ordersum";
    case GraphKind::NonInverse: return "noninverse";
  }
  return "unknown";
}

std::optional<GraphKind> parse_graph_kind(std::string_view text) {
  for (GraphKind k : kAllGraphKinds) {
    if (text == to_string(k)) return k;
  }
  return std::nullopt;
}

SimpleGraph::SimpleGraph(std::size_t n, std::span<const Edge> edges,
                         std::optional<GraphKind> kind)
    : n_(n),
      words_((n + kWordBits - 1) / kWordBits),
      bits_(n * ((n + kWordBits - 1) / kWordBits), 0),
      degrees_(n, 0),
      kind_(kind) {
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw GraphError("loop at vertex " + std::to_string(e.u));
    }
    if (e.v >= n) {
      throw GraphError("edge endpoint " + std::to_string(e.v) +
                       " outside graph of " + std::to_string(n) + " vertices");
    }
    if (adjacent(e.u, e.v)) continue;
    set_bit(e.u, e.v);
    set_bit(e.v, e.u);
    ++degrees_[e.u];
    ++degrees_[e.v];
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
}

SimpleGraph SimpleGraph::complete(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) es.emplace_back(i, j);
  }
  return SimpleGraph(n, es);
}

SimpleGraph SimpleGraph::empty(std::size_t n) { return SimpleGraph(n, {}); }

SimpleGraph SimpleGraph::star(std::size_t leaves) {
  std::vector<Edge> es;
  for (Vertex i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return SimpleGraph(leaves + 1, es);
}

SimpleGraph SimpleGraph::cycle(std::size_t n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i) es.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return SimpleGraph(n, es);
}

SimpleGraph SimpleGraph::path(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return SimpleGraph(n, es);
}

std::vector<Vertex> SimpleGraph::neighbors(Vertex a) const {
  std::vector<Vertex> out;
  out.reserve(degrees_[a]);
  const auto r = row(a);
  for (std::size_t w = 0; w < words_; ++w) {
    Word bits = r[w];
    while (bits) {
      const int bit = std::countr_zero(bits);
      out.push_back(static_cast<Vertex>(w * kWordBits + bit));
      bits &= bits - 1;
    }
  }
  return out;
}

SimpleGraph SimpleGraph::delete_edge(const Edge& e) const {
  if (!has_edge(e)) {
    throw GraphError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                     "} not present");
  }
  std::vector<Edge> es;
  es.reserve(edges_.size() - 1);
  for (const Edge& f : edges_) {
    if (f != e) es.push_back(f);
  }
  return SimpleGraph(n_, es, kind_);
}

SimpleGraph SimpleGraph::add_edge(const Edge& e) const {
  if (e.u == e.v || e.v >= n_) {
    throw GraphError("cannot add edge {" + std::to_string(e.u) + "," +
                     std::to_string(e.v) + "}");
  }
  if (has_edge(e)) {
    throw GraphError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                     "} already present");
  }
  std::vector<Edge> es = edges_;
  es.push_back(e);
  return SimpleGraph(n_, es, kind_);
}

SimpleGraph SimpleGraph::delete_vertex(Vertex x) const {
  if (x >= n_) throw GraphError("vertex " + std::to_string(x) + " out of range");
  std::vector<Edge> es;
  auto shift = [x](Vertex v) { return v > x ? v - 1 : v; };
  for (const Edge& e : edges_) {
    if (e.u != x && e.v != x) es.emplace_back(shift(e.u), shift(e.v));
  }
  return SimpleGraph(n_ - 1, es, kind_);
}

namespace {

// BFS distances from src; -1 for unreachable.
std::vector<long> bfs(const SimpleGraph& g, Vertex src) {
  std::vector<long> dist(g.vertex_count(), -1);
  std::deque<Vertex> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    const Vertex a = queue.front();
    queue.pop_front();
    for (Vertex b : g.neighbors(a)) {
      if (dist[b] < 0) {
        dist[b] = dist[a] + 1;
        queue.push_back(b);
      }
    }
  }
  return dist;
}

}  // namespace

bool is_connected(const SimpleGraph& g) {
  if (g.vertex_count() <= 1) return true;
  const auto dist = bfs(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](long d) { return d < 0; });
}

GraphShape shape_profile(const SimpleGraph& g) {
  GraphShape s;
  const std::size_t n = g.vertex_count();
  s.vertex_count = n;
  s.edge_count = g.edge_count();
  s.degree_sequence = g.degrees();
  if (n == 0) return s;

  const auto [lo, hi] = std::minmax_element(s.degree_sequence.begin(),
                                            s.degree_sequence.end());
  s.min_degree = *lo;
  s.max_degree = *hi;
  s.is_regular = s.min_degree == s.max_degree;
  s.is_complete = s.min_degree == n - 1;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) s.dominating_vertices.push_back(v);
  }
  s.is_connected = is_connected(g);
  s.is_tree = s.is_connected && s.edge_count == n - 1;
  if (n >= 2 && s.edge_count == n - 1 && !s.dominating_vertices.empty()) {
    s.is_star = true;
    s.star_center = s.dominating_vertices.front();
  }

  if (s.is_connected) {
    std::size_t diameter = 0;
    for (Vertex v = 0; v < n; ++v) {
      const auto dist = bfs(g, v);
      diameter = std::max(diameter, static_cast<std::size_t>(
                                        *std::max_element(dist.begin(), dist.end())));
    }
    s.diameter = diameter;
  }
  return s;
}

}  // namespace groupgraph
