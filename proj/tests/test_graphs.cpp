#include <gtest/gtest.h>

#include "support.hpp"

using namespace posr;
using namespace posr::test;
using Labels = std::set<std::string>;

namespace {

Labels vertex_labels(const ZdGraph& g, const std::vector<std::string>& names) {
  Labels out;
  for (Element v : g.vertices()) out.insert(names.at(v));
  return out;
}

ZdGraph graph_from_edges(std::size_t n, const std::vector<std::pair<Element, Element>>& edges) {
  std::vector<Element> vs;
  for (Element i = 0; i < n; ++i) vs.push_back(i + 1);
  std::vector<char> adj(n * n, 0);
  for (auto [a, b] : edges) adj[a * n + b] = adj[b * n + a] = 1;
  return ZdGraph(vs, adj, SourceKind::semigroup);
}

}  // namespace

// ---------------------------------------------------------------------------
// build_zdgraph

TEST(ZdGraph, NilpotentChainExampleIsAnIsolatedVertex) {
  const auto a = example_3_2(2);
  const ZdGraph g = zero_divisor_graph(a);
  EXPECT_EQ(vertex_labels(g, a.names()), (Labels{"a"}));
  EXPECT_EQ(g.edge_count(), 0U);
  EXPECT_TRUE(classify_shape(g).is<shape::SingleVertex>());
}

TEST(ZdGraph, BooleanSquareHasOneEdge) {
  const auto a = boolean_power(2);
  const ZdGraph g = zero_divisor_graph(a);
  EXPECT_EQ(vertex_labels(g, a.names()), (Labels{"(0,1)", "(1,0)"}));
  EXPECT_EQ(g.edge_count(), 1U);
}

TEST(ZdGraph, RingZ9) {
  const FiniteRing r = zn_ring(9);
  const GraphResult g = ring_zdgraph(r);
  EXPECT_EQ(vertex_labels(g.graph, r.names()), (Labels{"3", "6"}));
  EXPECT_EQ(g.graph.edge_count(), 1U);
  EXPECT_EQ(g.graph.source_kind(), SourceKind::ring);
}

TEST(ZdGraph, EdgesMatchTheDefinition) {
  for (const auto& a : census_up_to(5)) {
    const ZdGraph g = zero_divisor_graph(a);
    ElementSet vs;
    for (Element v : g.vertices()) vs = vs | ElementSet{v};
    EXPECT_EQ(vs, zero_divisors(a));
    for (std::size_t i = 0; i < g.size(); ++i) {
      EXPECT_FALSE(g.adjacent(i, i));
      for (std::size_t j = 0; j < g.size(); ++j)
        if (i != j) { EXPECT_EQ(g.adjacent(i, j), a.mul(g.element(i), g.element(j)) == 0); }
    }
  }
}

TEST(ZdGraph, ExcludeSetPrunesVertices) {
  const auto a = boolean_power(2);
  const std::vector<Element> exclude{a.find("(0,1)")};
  const ZdGraph g = build_zdgraph(a.mul_table(), a.order(), exclude, SourceKind::semigroup);
  EXPECT_EQ(vertex_labels(g, a.names()), (Labels{"(1,0)"}));
}

TEST(ZdGraph, NonCommutativeTableIsRejected) {
  const std::vector<Element> mul{0, 0, 0, 0, 1, 0, 0, 2, 2};
  EXPECT_THROW(build_zdgraph(mul, 3), StructuralError);
}

// ---------------------------------------------------------------------------
// classify_shape

TEST(Shape, AnnihilatingChainIsAStarCentredAtA) {
  const auto a = example_2_6(2);
  const GraphShape s = classify_shape(zero_divisor_graph(a));
  ASSERT_TRUE(s.is<shape::Star>());
  EXPECT_EQ(s.as<shape::Star>().r, 2U);
  EXPECT_EQ(s.as<shape::Star>().center, a.find("a"));
}

TEST(Shape, BooleanTimesNilpotentChainIsTwoStar) {
  const GraphShape s = classify_shape(zero_divisor_graph(direct_product(trivial_posemiring(), example_3_2(2))));
  ASSERT_TRUE(s.is<shape::TwoStar>());
  EXPECT_EQ(s.as<shape::TwoStar>().r, 1U);
  EXPECT_EQ(s.as<shape::TwoStar>().s, 3U);
  EXPECT_EQ(shape_line(s), "two-star r=1 s=3 (K1+K1+K1+D_3)");
}

TEST(Shape, RingZ2TimesZ4IsTwoStar) {
  const GraphResult g = ring_zdgraph(make_ring("prod(zn:2,zn:4)"));
  EXPECT_TRUE(is_two_star_one(g.shape, 2));
  EXPECT_EQ(shape_line(g.shape), "two-star r=1 s=2 (K1+K1+K1+D_2)");
}

TEST(Shape, PrecedenceOnHandBuiltGraphs) {
  EXPECT_TRUE(classify_shape(graph_from_edges(0, {})).is<shape::Empty>());
  EXPECT_TRUE(classify_shape(graph_from_edges(1, {})).is<shape::SingleVertex>());
  const GraphShape k2 = classify_shape(graph_from_edges(2, {{0, 1}}));
  ASSERT_TRUE(k2.is<shape::Complete>());
  EXPECT_EQ(k2.as<shape::Complete>().n, 2U);
  const GraphShape k3 = classify_shape(graph_from_edges(3, {{0, 1}, {1, 2}, {0, 2}}));
  ASSERT_TRUE(k3.is<shape::Complete>());
  EXPECT_EQ(k3.as<shape::Complete>().n, 3U);
  EXPECT_TRUE(classify_shape(graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}})).is<shape::Star>());
  const GraphShape ts = classify_shape(graph_from_edges(6, {{0, 1}, {0, 2}, {0, 5}, {1, 3}, {1, 4}}));
  ASSERT_TRUE(ts.is<shape::TwoStar>());
  EXPECT_EQ(ts.as<shape::TwoStar>().r, 2U);
  EXPECT_EQ(ts.as<shape::TwoStar>().s, 2U);
  const GraphShape k23 = classify_shape(graph_from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}));
  ASSERT_TRUE(k23.is<shape::CompleteBipartite>());
  EXPECT_EQ(k23.as<shape::CompleteBipartite>().m, 2U);
  EXPECT_EQ(k23.as<shape::CompleteBipartite>().n, 3U);
  EXPECT_TRUE(classify_shape(graph_from_edges(4, {{0, 1}, {2, 3}})).is<shape::OtherForest>());
  const GraphShape c5 = classify_shape(graph_from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));
  ASSERT_TRUE(c5.is<shape::HasCycle>());
  EXPECT_EQ(c5.as<shape::HasCycle>().girth, 5U);
  EXPECT_TRUE(c5.as<shape::HasCycle>().triangle_free);
  EXPECT_TRUE(c5.as<shape::HasCycle>().quadrilateral_free);
}

TEST(Shape, TwoStarWithOneEndPrintsAsSequentialSum) {
  const GraphShape s = classify_shape(graph_from_edges(4, {{0, 1}, {0, 2}, {1, 3}}));
  EXPECT_EQ(shape_line(s), "two-star r=1 s=1 (K1+K1+K1+K1)");
}

// ---------------------------------------------------------------------------
// graph_metrics

TEST(Metrics, TwoStarHasDiameterThree) {
  const GraphResult g = ring_zdgraph(make_ring("prod(zn:2,zn:4)"));
  EXPECT_EQ(graph_metrics(g.graph).diameter, 3U);
}

TEST(Metrics, BooleanCubeCliqueNumberIsThree) {
  const ZdGraph g = zero_divisor_graph(boolean_power(3));
  EXPECT_EQ(graph_metrics(g).clique_number, 3U);
  EXPECT_EQ(clique_number(g), 3U);
}

TEST(Metrics, SingleVertex) {
  const GraphMetrics m = graph_metrics(zero_divisor_graph(example_3_2(2)));
  EXPECT_EQ(m.diameter, 0U);
  EXPECT_FALSE(m.girth.has_value());
  EXPECT_EQ(m.component_count, 1U);
}

TEST(Metrics, GirthAndFlagsOnCycles) {
  const ZdGraph c4 = graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_EQ(girth(c4), 4U);
  EXPECT_TRUE(has_quadrilateral(c4));
  EXPECT_FALSE(has_triangle(c4));
  EXPECT_FALSE(is_acyclic(c4));
  const ZdGraph path = graph_from_edges(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(is_acyclic(path));
  EXPECT_FALSE(girth(path).has_value());
  const auto d = bfs_distances(graph_from_edges(3, {{0, 1}}), 0);
  EXPECT_EQ(d[1], 1U);
  EXPECT_EQ(d[2], kUnreachable);
}

// ---------------------------------------------------------------------------
// export_dot

TEST(Dot, CompleteTwo) {
  EXPECT_EQ(export_dot(graph_from_edges(2, {{0, 1}}), {"0", "x", "y"}), "graph zd {\n\"x\" -- \"y\";\n}\n");
}

TEST(Dot, EmptyGraph) { EXPECT_EQ(export_dot(graph_from_edges(0, {}), {}), "graph zd {\n}\n"); }

TEST(Dot, IsolatedVertex) {
  const auto a = example_3_2(2);
  EXPECT_EQ(export_dot(zero_divisor_graph(a), a.names()), "graph zd {\n\"a\";\n}\n");
}

TEST(Dot, QuotesAreEscaped) {
  EXPECT_EQ(export_dot(graph_from_edges(1, {}), {"0", "say \"hi\""}), "graph zd {\n\"say \\\"hi\\\"\";\n}\n");
}

// ---------------------------------------------------------------------------
// Properties over the census

TEST(GraphProperties, VertexCountUnderConditionHypotheses) {
  for (const auto& a : census_up_to(5)) {
    const ConditionReport c = check_conditions(a);
    if (zero_divisors(a).empty() || !(c.c1.holds || c.c2.holds)) continue;
    EXPECT_EQ(zero_divisor_graph(a).size() + 2, a.order());
  }
}

TEST(GraphProperties, MinimalElementsHaveEccentricityAtMostTwo) {
  for (const auto& a : census_up_to(5)) {
    const ZdGraph g = zero_divisor_graph(a);
    if (g.size() == 0) continue;
    for (Element u : analyze_elements(a).minimals) {
      const auto iu = g.index_of(u);
      ASSERT_TRUE(iu.has_value());
      for (unsigned d : bfs_distances(g, *iu)) EXPECT_LE(d, 2U);
    }
  }
}

TEST(GraphProperties, CliqueNumberBoundsMinimalCount) {
  for (const auto& a : census_up_to(5)) {
    const ZdGraph g = zero_divisor_graph(a);
    if (g.size() == 0) continue;
    EXPECT_GE(clique_number(g), analyze_elements(a).minimals.size());
  }
}

TEST(GraphProperties, PathsOutsideShortCyclesPassThroughMinimalElements) {
  for (const auto& a : census_up_to(5)) {
    const ZdGraph g = zero_divisor_graph(a);
    for (std::size_t u = 0; u < g.size(); ++u)
      for (std::size_t x : g.neighbors(u))
        for (std::size_t y : g.neighbors(u)) {
          if (x >= y || g.adjacent(x, y)) continue;
          bool square = false;
          for (std::size_t d = 0; d < g.size(); ++d)
            if (d != u && d != x && d != y && g.adjacent(d, x) && g.adjacent(d, y)) square = true;
          if (!square) { EXPECT_TRUE(is_minimal(a, g.element(u))); }
        }
  }
}

TEST(GraphProperties, AcyclicGraphsUnderC3AreStarsOrTwoStars) {
  for (const auto& a : census_up_to(6)) {
    const ZdGraph g = zero_divisor_graph(a);
    if (g.size() == 0 || !is_acyclic(g) || !check_conditions(a).c3.holds) continue;
    const GraphShape s = classify_shape(g);
    EXPECT_TRUE(s.is<shape::SingleVertex>() || is_star_like(s) || is_two_star_one(s)) << shape_line(s);
  }
}

TEST(GraphProperties, ZeroDivisorGraphsAreConnected) {
  for (const auto& a : census_up_to(6)) {
    const ZdGraph g = zero_divisor_graph(a);
    if (g.size() > 0) { EXPECT_EQ(graph_metrics(g).component_count, 1U); }
  }
}
