#include "groupgraph/builders.hpp"

#include <numeric>

namespace groupgraph {

namespace {

template <class Adjacent>
SimpleGraph from_relation(const FiniteGroup& g, GraphKind kind, Adjacent adjacent) {
  std::vector<Edge> edges;
  const auto n = static_cast<Element>(g.order());
  for (Element i = 0; i < n; ++i) {
    for (Element j = i + 1; j < n; ++j) {
      if (adjacent(i, j)) edges.emplace_back(i, j);
    }
  }
  return SimpleGraph(g.order(), edges, kind);
}

}  // namespace

SimpleGraph commuting_graph(const FiniteGroup& g) {
  return from_relation(g, GraphKind::Commuting,
                       [&](Element a, Element b) { return g.commute(a, b); });
}

SimpleGraph coprime_graph(const FiniteGroup& g) {
  const auto& o = g.element_orders();
  return from_relation(g, GraphKind::Coprime, [&](Element a, Element b) {
    return std::gcd(o[a], o[b]) == 1;
  });
}

SimpleGraph order_sum_graph(const FiniteGroup& g) {
  const auto& o = g.element_orders();
  return from_relation(g, GraphKind::OrderSum, [&](Element a, Element b) {
    return o[a] + o[b] > g.order();
  });
}

SimpleGraph non_inverse_graph(const FiniteGroup& g) {
  return from_relation(g, GraphKind::NonInverse,
                       [&](Element a, Element b) { return g.inverse(a) != b; });
}

SimpleGraph build_graph(const FiniteGroup& g, GraphKind kind) {
  switch (kind) {
    case GraphKind::Commuting: return commuting_graph(g);
    case GraphKind::Coprime: return coprime_graph(g);
    case GraphKind::OrderSum: return order_sum_graph(g);
    case GraphKind::NonInverse: return non_inverse_graph(g);
  }
  throw GraphError("unknown graph kind");
}

}  // namespace groupgraph
