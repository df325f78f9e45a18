// Copyright (c) evograph contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "evograph/graph.hpp"

using namespace evograph;

TEST(EdgeTriple, OrderingIsLexicographic) {
  EdgeTriple a{0, 1, 2.0};
  EdgeTriple b{0, 1, 3.0};
  EdgeTriple c{0, 2, 1.0};
  EXPECT_LT(a, b);
  EXPECT_LT(b, c);
  EXPECT_EQ(a, (EdgeTriple{0, 1, 2.0}));
}

TEST(BuildGraph, SortsAndDeduplicates) {
  std::vector<EdgeTriple> t{{1, 0, 1.0}, {0, 2, 1.0}, {0, 1, 1.0}, {0, 2, 1.0}};
  Graph g = build_graph(t, 3);
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  ASSERT_EQ(g.out_edges(0).size(), 2u);
  EXPECT_EQ(g.out_edges(0)[0].dst, 1u);
  EXPECT_EQ(g.out_edges(0)[1].dst, 2u);
  EXPECT_EQ(g.out_edges(2).size(), 0u);
}

TEST(BuildGraph, ParallelEdgesWithDistinctWeightsSurvive) {
  Graph g = build_graph({{0, 1, 1.0}, {0, 1, 2.0}}, 2);
  EXPECT_EQ(g.edge_count(), 2u);
  ASSERT_EQ(g.out_edges(0).size(), 2u);
  EXPECT_EQ(g.out_edges(0)[0].weight, 1.0);
  EXPECT_EQ(g.out_edges(0)[1].weight, 2.0);
}

TEST(BuildGraph, TriplesRoundTrip) {
  std::vector<EdgeTriple> t{{2, 0, 1.5}, {0, 1, 1.0}, {1, 2, 2.5}};
  Graph g = build_graph(t, 3);
  std::sort(t.begin(), t.end());
  EXPECT_EQ(g.triples(), t);
}

TEST(BuildGraph, ContainsUsesFullTripleIdentity) {
  Graph g = build_graph({{0, 1, 2.0}}, 2);
  EXPECT_TRUE(g.contains({0, 1, 2.0}));
  EXPECT_FALSE(g.contains({0, 1, 3.0}));
  EXPECT_FALSE(g.contains({1, 0, 2.0}));
  EXPECT_FALSE(g.contains({5, 1, 2.0}));
}

TEST(BuildGraph, RejectsOutOfRangeVertices) {
  EXPECT_THROW(build_graph({{0, 3, 1.0}}, 3), RangeError);
  EXPECT_THROW(build_graph({{7, 0, 1.0}}, 3), RangeError);
}

TEST(BuildGraph, EmptyGraphAndIsolatedVertices) {
  Graph g = build_graph({}, 5);
  EXPECT_EQ(g.num_vertices(), 5u);
  EXPECT_EQ(g.edge_count(), 0u);
  for (VertexId v = 0; v < 5; ++v) EXPECT_TRUE(g.out_edges(v).empty());
}

TEST(BuildGraph, SelfLoopIsAnOrdinaryEdge) {
  Graph g = build_graph({{1, 1, 4.0}}, 2);
  ASSERT_EQ(g.out_edges(1).size(), 1u);
  EXPECT_EQ(g.out_edges(1)[0].dst, 1u);
}
