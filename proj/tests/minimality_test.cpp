#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "groupgraph/builders.hpp"
#include "groupgraph/connectivity.hpp"
#include "groupgraph/family.hpp"
#include "groupgraph/minimality.hpp"
#include "test_util.hpp"

using namespace groupgraph;

namespace {

SimpleGraph graph_of(const char* spec, GraphKind kind) {
  return build_graph(build_family(parse_family_spec(spec)), kind);
}

// Definition-level sweep using only the test oracles.
bool brute_minimal(const SimpleGraph& g, Measure m) {
  auto value = [m](const SimpleGraph& h) {
    return m == Measure::Edge ? testutil::brute_edge_connectivity(h)
                              : testutil::brute_vertex_connectivity(h);
  };
  const auto base = value(g);
  for (const Edge& e : g.edges()) {
    if (value(g.delete_edge(e)) + 1 != base) return false;
  }
  return true;
}

SimpleGraph with_dominating_vertex(std::mt19937_64& rng, std::size_t n, double p) {
  auto g = testutil::random_graph(rng, n, p);
  for (Vertex v = 1; v < n; ++v)
    if (!g.adjacent(0, v)) g = g.add_edge({0, v});
  return g;
}

}  // namespace

TEST(EdgeSweep, Examples) {
  for (std::size_t n = 2; n <= 7; ++n) EXPECT_TRUE(is_minimally_edge_connected(SimpleGraph::complete(n)).holds);

  auto d3 = is_minimally_edge_connected(graph_of("dihedral:3", GraphKind::Commuting));
  EXPECT_TRUE(d3.applicable);
  EXPECT_EQ(d3.base_value, 1u);
  EXPECT_FALSE(d3.holds);
  // {r, r^2} is the non-identity edge; the identity-star edges to r and r^2
  // also survive deletion because that edge reconnects them.
  EXPECT_NE(std::find(d3.violating_edges.begin(), d3.violating_edges.end(), Edge(1, 2)),
            d3.violating_edges.end());
  EXPECT_EQ(d3.violating_edges, (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));

  auto ni = is_minimally_edge_connected(graph_of("cyclic:5", GraphKind::NonInverse),
                                        {SweepMethod::LocalFlow, true});
  EXPECT_TRUE(ni.holds);
  EXPECT_EQ(ni.base_value, 3u);
  for (const auto& ev : ni.per_edge_values) EXPECT_EQ(ev.value, 2u);
}

TEST(VertexSweep, Examples) {
  auto star = is_minimally_connected(SimpleGraph::star(5), {SweepMethod::LocalFlow, true});
  EXPECT_TRUE(star.holds);
  for (const auto& ev : star.per_edge_values) EXPECT_EQ(ev.value, 0u);
  auto k4 = is_minimally_connected(SimpleGraph::complete(4), {SweepMethod::LocalFlow, true});
  EXPECT_TRUE(k4.holds);
  for (const auto& ev : k4.per_edge_values) EXPECT_EQ(ev.value, 2u);

  auto os = is_minimally_connected(graph_of("cyclic:4", GraphKind::OrderSum),
                                   {SweepMethod::Oracle, true});
  EXPECT_FALSE(os.holds);
  EXPECT_EQ(os.base_value, 2u);
  EXPECT_NE(std::find(os.violating_edges.begin(), os.violating_edges.end(), Edge(1, 3)),
            os.violating_edges.end());
}

TEST(Sweep, NotApplicable) {
  auto e = is_minimally_edge_connected(SimpleGraph::empty(3));
  EXPECT_FALSE(e.applicable);
  EXPECT_FALSE(e.holds);
  EXPECT_FALSE(is_minimally_connected(SimpleGraph::complete(1)).applicable);
}

TEST(Sweep, MethodsAgreeWithEachOtherAndBruteForce) {
  std::mt19937_64 rng(42);
  const double densities[] = {0.3, 0.5, 0.8};
  for (int i = 0; i < 150; ++i) {
    auto g = testutil::random_graph(rng, 2 + rng() % 8, densities[i % 3]);
    for (Measure m : {Measure::Edge, Measure::Vertex}) {
      auto local = minimality_sweep(g, m, {SweepMethod::LocalFlow, true});
      auto full = minimality_sweep(g, m, {SweepMethod::Recompute, true});
      auto oracle = minimality_sweep(g, m, {SweepMethod::Oracle, true});
      ASSERT_EQ(local.per_edge_values.size(), full.per_edge_values.size());
      for (std::size_t k = 0; k < local.per_edge_values.size(); ++k) {
        EXPECT_EQ(local.per_edge_values[k].value, full.per_edge_values[k].value);
        EXPECT_EQ(local.per_edge_values[k].value, oracle.per_edge_values[k].value);
      }
      EXPECT_EQ(local.violating_edges, oracle.violating_edges);
      if (local.applicable) EXPECT_EQ(local.holds, brute_minimal(g, m)) << "trial " << i;
    }
  }
}

TEST(Sweep, DeletionLowersByAtMostOne) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    auto g = testutil::random_graph(rng, 2 + rng() % 10, 0.6);
    for (Measure m : {Measure::Edge, Measure::Vertex}) {
      auto v = minimality_sweep(g, m, {SweepMethod::Recompute, true});
      for (const auto& ev : v.per_edge_values) {
        EXPECT_TRUE(ev.value == v.base_value || ev.value + 1 == v.base_value);
      }
    }
  }
}

TEST(DominatingCriterion, Examples) {
  auto c9 = dominating_vertex_criterion(graph_of("cyclic:9", GraphKind::Coprime));
  ASSERT_TRUE(c9);
  EXPECT_TRUE(c9->answer);
  EXPECT_EQ(c9->dominating, 0u);

  auto os6 = dominating_vertex_criterion(graph_of("cyclic:6", GraphKind::OrderSum));
  ASSERT_TRUE(os6);
  EXPECT_FALSE(os6->answer);
  EXPECT_FALSE(os6->unique_dominating);

  auto cp6 = dominating_vertex_criterion(graph_of("cyclic:6", GraphKind::Coprime));
  ASSERT_TRUE(cp6);
  EXPECT_FALSE(cp6->answer);
  EXPECT_TRUE(cp6->unique_dominating);
  EXPECT_FALSE(cp6->rest_regular);

  EXPECT_FALSE(dominating_vertex_criterion(SimpleGraph::complete(5)));
  EXPECT_FALSE(dominating_vertex_criterion(SimpleGraph::cycle(5)));
}

TEST(DominatingCriterion, MatchesSweepOnRandomGraphs) {
  std::mt19937_64 rng(99);
  int applied = 0, positive = 0;
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = 3 + rng() % 9;
    SimpleGraph g = (i % 4 == 0)
                        ? SimpleGraph::star(n - 1)
                        : with_dominating_vertex(rng, n, i % 2 ? 0.2 : 0.6);
    // Regular remainders are rare at random, so also plant wheels.
    if (i % 4 == 1) {
      std::vector<Edge> edges;
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
      for (Vertex v = 1; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      if (n >= 4) edges.emplace_back(1, static_cast<Vertex>(n - 1));
      g = SimpleGraph(n, edges);
    }
    auto c = dominating_vertex_criterion(g);
    if (!c) continue;
    ++applied;
    positive += c->answer;
    EXPECT_EQ(c->answer, is_minimally_edge_connected(g).holds) << "trial " << i;
  }
  EXPECT_GT(applied, 300);
  EXPECT_GT(positive, 50);
}
