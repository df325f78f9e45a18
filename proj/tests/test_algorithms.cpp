// Copyright (c) evograph contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "evograph/evograph.hpp"
#include "util.hpp"

using namespace evograph;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST(AlgorithmSpec, InitialValuesAndDirections) {
  AlgorithmSpec bfs = algorithm_spec(AlgorithmKind::Bfs);
  EXPECT_EQ(bfs.direction, Direction::Minimize);
  EXPECT_EQ(bfs.init_source, 0.0);
  EXPECT_EQ(bfs.init_other, kInf);

  AlgorithmSpec sssp = algorithm_spec(AlgorithmKind::Sssp);
  EXPECT_EQ(sssp.direction, Direction::Minimize);
  EXPECT_EQ(sssp.init_source, 0.0);
  EXPECT_EQ(sssp.init_other, kInf);

  AlgorithmSpec sswp = algorithm_spec(AlgorithmKind::Sswp);
  EXPECT_EQ(sswp.direction, Direction::Maximize);
  EXPECT_EQ(sswp.init_source, kInf);
  EXPECT_EQ(sswp.init_other, 0.0);

  AlgorithmSpec ssnp = algorithm_spec(AlgorithmKind::Ssnp);
  EXPECT_EQ(ssnp.direction, Direction::Minimize);
  EXPECT_EQ(ssnp.init_source, 0.0);
  EXPECT_EQ(ssnp.init_other, kInf);

  AlgorithmSpec vit = algorithm_spec(AlgorithmKind::Viterbi);
  EXPECT_EQ(vit.direction, Direction::Maximize);
  EXPECT_EQ(vit.init_source, 1.0);
  EXPECT_EQ(vit.init_other, 0.0);
}

TEST(AlgorithmSpec, BetterFollowsDirection) {
  AlgorithmSpec minspec = algorithm_spec(AlgorithmKind::Sssp);
  EXPECT_TRUE(minspec.better(1.0, 2.0));
  EXPECT_FALSE(minspec.better(2.0, 2.0));
  AlgorithmSpec maxspec = algorithm_spec(AlgorithmKind::Sswp);
  EXPECT_TRUE(maxspec.better(2.0, 1.0));
  EXPECT_FALSE(maxspec.better(2.0, 2.0));
}

TEST(EdgeFunction, TableValues) {
  auto f = [](AlgorithmKind k, double v, double w) {
    return edge_function(algorithm_spec(k), v, w);
  };
  EXPECT_EQ(f(AlgorithmKind::Bfs, 0.0, 7.0), 1.0);  // weight ignored
  EXPECT_EQ(f(AlgorithmKind::Bfs, 3.0, 1.0), 4.0);
  EXPECT_EQ(f(AlgorithmKind::Sssp, 3.0, 2.0), 5.0);
  EXPECT_EQ(f(AlgorithmKind::Sswp, 7.0, 4.0), 4.0);
  EXPECT_EQ(f(AlgorithmKind::Sswp, 3.0, 9.0), 3.0);
  EXPECT_EQ(f(AlgorithmKind::Ssnp, 2.0, 5.0), 5.0);
  EXPECT_EQ(f(AlgorithmKind::Ssnp, 5.0, 2.0), 5.0);
  EXPECT_EQ(f(AlgorithmKind::Viterbi, 1.0, 2.0), 0.5);
}

TEST(EdgeFunction, WorstPropagatesToWorst) {
  for (AlgorithmKind kind : kAllAlgorithms) {
    AlgorithmSpec spec = algorithm_spec(kind);
    for (double w : {1.0, 2.0, 3.0}) {
      double out = edge_function(spec, spec.worst(), w);
      EXPECT_FALSE(spec.better(out, spec.worst()))
          << to_string(kind) << " improved on WORST via weight " << w;
    }
  }
}

TEST(EdgeFunction, NeverImprovesOnItsInput) {
  // Monotone non-improving: a longer path is never better than its prefix.
  std::mt19937_64 rng(5);
  for (AlgorithmKind kind : kAllAlgorithms) {
    AlgorithmSpec spec = algorithm_spec(kind);
    for (int i = 0; i < 200; ++i) {
      double v = static_cast<double>(rng() % 20);
      if (spec.kind == AlgorithmKind::Viterbi) v = 1.0 / (1.0 + (rng() % 5));
      double w = 1.0 + static_cast<double>(rng() % 9);
      EXPECT_FALSE(spec.better(edge_function(spec, v, w), v));
    }
  }
}

TEST(WeightDomain, PerAlgorithmRules) {
  EXPECT_TRUE(weight_in_domain(AlgorithmKind::Bfs, 0.0));
  EXPECT_TRUE(weight_in_domain(AlgorithmKind::Ssnp, 0.0));
  EXPECT_FALSE(weight_in_domain(AlgorithmKind::Sssp, 0.0));
  EXPECT_TRUE(weight_in_domain(AlgorithmKind::Sssp, 0.5));
  EXPECT_FALSE(weight_in_domain(AlgorithmKind::Viterbi, 0.5));
  EXPECT_TRUE(weight_in_domain(AlgorithmKind::Viterbi, 1.0));
  for (AlgorithmKind kind : kAllAlgorithms) {
    EXPECT_FALSE(weight_in_domain(kind, -1.0));
    EXPECT_FALSE(weight_in_domain(kind, kInf));
    EXPECT_FALSE(weight_in_domain(kind, std::nan("")));
  }
}

TEST(AlgorithmNames, RoundTrip) {
  for (AlgorithmKind kind : kAllAlgorithms) {
    EXPECT_EQ(algorithm_kind_from_string(to_string(kind)), kind);
  }
  EXPECT_THROW(algorithm_kind_from_string("dijkstra"), ConfigError);
}

TEST(EvaluateFull, SswpPrefersIndirectWiderPath) {
  Graph g = build_graph({{0, 1, 4.0}, {0, 2, 9.0}, {2, 1, 7.0}}, 3);
  QueryContext q{algorithm_spec(AlgorithmKind::Sswp), 0};
  ValueArray v = evaluate_full(g, q);
  EXPECT_EQ(v, (ValueArray{kInf, 7.0, 9.0}));
}

TEST(EvaluateFull, SsspHandlesCyclesAndUnreachable) {
  Graph g = build_graph({{0, 1, 1.0}, {1, 2, 1.0}, {2, 0, 1.0}, {3, 4, 1.0}}, 5);
  QueryContext q{algorithm_spec(AlgorithmKind::Sssp), 0};
  ValueArray v = evaluate_full(g, q);
  EXPECT_EQ(v, (ValueArray{0.0, 1.0, 2.0, kInf, kInf}));
}

TEST(EvaluateFull, BfsCountsHops) {
  Graph g = build_graph({{0, 1, 9.0}, {1, 2, 9.0}, {0, 2, 9.0}}, 3);
  QueryContext q{algorithm_spec(AlgorithmKind::Bfs), 0};
  EXPECT_EQ(evaluate_full(g, q), (ValueArray{0.0, 1.0, 1.0}));
}

TEST(EvaluateFull, SsnpMinimizesTheMaximumEdge) {
  // 0->1->3 peaks at 5; 0->2->3 peaks at 3.
  Graph g = build_graph({{0, 1, 1.0}, {1, 3, 5.0}, {0, 2, 3.0}, {2, 3, 2.0}}, 4);
  QueryContext q{algorithm_spec(AlgorithmKind::Ssnp), 0};
  EXPECT_EQ(evaluate_full(g, q), (ValueArray{0.0, 1.0, 3.0, 3.0}));
}

TEST(EvaluateFull, ViterbiMultipliesReciprocalWeights) {
  Graph g = build_graph({{0, 1, 2.0}, {1, 2, 2.0}, {0, 2, 5.0}}, 3);
  QueryContext q{algorithm_spec(AlgorithmKind::Viterbi), 0};
  EXPECT_EQ(evaluate_full(g, q), (ValueArray{1.0, 0.5, 0.25}));
}

TEST(EvaluateFull, SelfLoopsAndSourceValueAreStable) {
  for (AlgorithmKind kind : kAllAlgorithms) {
    AlgorithmSpec spec = algorithm_spec(kind);
    Graph g = build_graph({{0, 0, 2.0}, {0, 1, 2.0}, {1, 0, 2.0}}, 2);
    QueryContext q{spec, 0};
    ValueArray v = evaluate_full(g, q);
    EXPECT_EQ(v[0], spec.init_source) << to_string(kind);
  }
}

TEST(EvaluateFull, SourceOutOfRange) {
  Graph g = build_graph({{0, 1, 1.0}}, 2);
  QueryContext q{algorithm_spec(AlgorithmKind::Bfs), 9};
  EXPECT_THROW(evaluate_full(g, q), RangeError);
}

TEST(ValidateWeights, EnforcesAlgorithmDomains) {
  Graph zero = build_graph({{0, 1, 0.0}}, 2);
  EXPECT_NO_THROW(validate_weights(zero, AlgorithmKind::Bfs));
  EXPECT_THROW(validate_weights(zero, AlgorithmKind::Sssp), DomainError);
  Graph half = build_graph({{0, 1, 0.5}}, 2);
  EXPECT_THROW(validate_weights(half, AlgorithmKind::Viterbi), DomainError);
  EXPECT_NO_THROW(validate_weights(half, AlgorithmKind::Sssp));
}

TEST(EvaluateFull, MatchesSimplePathOracleOnRandomGraphs) {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 500; ++iter) {
    std::size_t n = 2 + rng() % 6;
    std::vector<EdgeTriple> triples = testutil::random_triples(rng, n, 2 + rng() % 12);
    Graph g = build_graph(triples, n);
    VertexId source = static_cast<VertexId>(rng() % n);
    for (AlgorithmKind kind : kAllAlgorithms) {
      QueryContext q{algorithm_spec(kind), source};
      ValueArray got = evaluate_full(g, q);
      std::vector<double> want = testutil::oracle_values(kind, triples, n, source);
      EXPECT_EQ(got, want) << to_string(kind) << " seed-iter " << iter;
    }
  }
}

TEST(EvaluateFull, InvariantUnderVertexRelabeling) {
  std::mt19937_64 rng(123);
  for (int iter = 0; iter < 30; ++iter) {
    std::size_t n = 8;
    std::vector<EdgeTriple> triples = testutil::random_triples(rng, n, 20);
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);

    std::vector<EdgeTriple> renamed;
    for (const EdgeTriple& t : triples) {
      renamed.push_back(EdgeTriple{perm[t.src], perm[t.dst], t.weight});
    }
    for (AlgorithmKind kind : kAllAlgorithms) {
      QueryContext q{algorithm_spec(kind), 0};
      QueryContext qp{algorithm_spec(kind), perm[0]};
      ValueArray a = evaluate_full(build_graph(triples, n), q);
      ValueArray b = evaluate_full(build_graph(renamed, n), qp);
      for (VertexId v = 0; v < n; ++v) EXPECT_EQ(a[v], b[perm[v]]);
    }
  }
}

TEST(EvaluateFull, ValueIdenticalAcrossThreadCounts) {
  std::mt19937_64 rng(321);
  std::vector<EdgeTriple> triples = testutil::random_triples(rng, 200, 1200);
  Graph g = build_graph(triples, 200);
  for (AlgorithmKind kind : kAllAlgorithms) {
    QueryContext q{algorithm_spec(kind), 0};
    ValueArray t1 = evaluate_full(g, q, nullptr, EvalOptions{1});
    ValueArray t2 = evaluate_full(g, q, nullptr, EvalOptions{2});
    ValueArray t4 = evaluate_full(g, q, nullptr, EvalOptions{4});
    EXPECT_EQ(t1, t2) << to_string(kind);
    EXPECT_EQ(t1, t4) << to_string(kind);
  }
}

TEST(EvaluateFull, AddingAnEdgeNeverWorsensAnyVertex) {
  std::mt19937_64 rng(77);
  for (int iter = 0; iter < 100; ++iter) {
    std::size_t n = 3 + rng() % 8;
    std::vector<EdgeTriple> triples = testutil::random_triples(rng, n, 2 + rng() % 15);
    EdgeTriple extra{static_cast<VertexId>(rng() % n), static_cast<VertexId>(rng() % n),
                     testutil::small_weight(rng)};
    std::vector<EdgeTriple> more = triples;
    more.push_back(extra);
    for (AlgorithmKind kind : kAllAlgorithms) {
      AlgorithmSpec spec = algorithm_spec(kind);
      QueryContext q{spec, 0};
      ValueArray before = evaluate_full(build_graph(triples, n), q);
      ValueArray after = evaluate_full(build_graph(more, n), q);
      for (VertexId v = 0; v < n; ++v) {
        EXPECT_FALSE(spec.better(before[v], after[v]))
            << to_string(kind) << " vertex " << v;
      }
    }
  }
}

TEST(EvaluateFull, CountersAreConsistent) {
  Graph g = build_graph({{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 3.0}}, 3);
  QueryContext q{algorithm_spec(AlgorithmKind::Sssp), 0};
  EngineCounters c;
  evaluate_full(g, q, &c, EvalOptions{1});
  EXPECT_EQ(c.edges_scanned, c.candidates);
  EXPECT_GE(c.candidates, c.updates);
  EXPECT_GT(c.rounds, 0u);
  EXPECT_GE(c.frontier_total, 1u);
}
