#include "groupgraph/minimality.hpp"

#include <algorithm>

#include "groupgraph/connectivity.hpp"

namespace groupgraph {

const char* to_string(Measure m) {
  return m == Measure::Edge ? "edge" : "vertex";
}

namespace {

std::size_t measure_of(const SimpleGraph& g, Measure m, SweepMethod method) {
  if (method == SweepMethod::Oracle) {
    return m == Measure::Edge ? edge_connectivity_oracle(g)
                              : vertex_connectivity_oracle(g);
  }
  return m == Measure::Edge ? edge_connectivity(g) : vertex_connectivity(g);
}

std::size_t value_after_deletion(const SimpleGraph& g, const Edge& e, Measure m,
                                 SweepMethod method, std::size_t base) {
  const SimpleGraph without = g.delete_edge(e);
  if (method != SweepMethod::LocalFlow) return measure_of(without, m, method);
  // The value is base - 1 or base; it is base - 1 exactly when the endpoints
  // of e become separable by base - 1 edges (or vertices).
  const std::size_t local =
      m == Measure::Edge ? local_edge_connectivity(without, e.u, e.v, base)
                         : local_vertex_connectivity(without, e.u, e.v, base);
  return std::min(base, local);
}

}  // namespace

MinimalityVerdict minimality_sweep(const SimpleGraph& g, Measure measure,
                                   SweepOptions options) {
  MinimalityVerdict verdict;
  verdict.measure = measure;
  verdict.applicable = g.vertex_count() >= 2 && is_connected(g);
  if (!verdict.applicable) return verdict;

  verdict.base_value = measure_of(g, measure, options.method);
  for (const Edge& e : g.edges()) {
    const std::size_t value =
        value_after_deletion(g, e, measure, options.method, verdict.base_value);
    if (value + 1 != verdict.base_value) verdict.violating_edges.push_back(e);
    if (options.record_per_edge) verdict.per_edge_values.push_back({e, value});
  }
  verdict.holds = verdict.violating_edges.empty();
  return verdict;
}

std::optional<DominatingCriterion> dominating_vertex_criterion(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return std::nullopt;
  std::vector<Vertex> dominating;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) dominating.push_back(v);
  }
  if (dominating.empty() || dominating.size() == n) return std::nullopt;

  DominatingCriterion c;
  c.dominating = dominating.front();
  c.unique_dominating = dominating.size() == 1;
  const SimpleGraph rest = g.delete_vertex(c.dominating);
  const auto& d = rest.degrees();
  c.rest_regular = d.empty() || std::all_of(d.begin(), d.end(),
                                            [&](std::size_t x) { return x == d.front(); });
  c.answer = c.unique_dominating && c.rest_regular;
  return c;
}

}  // namespace groupgraph
