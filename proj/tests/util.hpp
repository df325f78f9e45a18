// Copyright (c) evograph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "evograph/evograph.hpp"
#include "oracle.hpp"

namespace testutil {

using namespace evograph;

// Builds a series directly from per-snapshot triple lists (sorted, deduped).
inline SnapshotSeries make_series(std::size_t num_vertices,
                                  std::vector<std::vector<EdgeTriple>> snapshots) {
  SnapshotSeries s;
  s.num_vertices = num_vertices;
  for (auto& edges : snapshots) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    s.edge_sets.push_back(std::move(edges));
  }
  return s;
}

inline oracle::Kind to_oracle(AlgorithmKind k) {
  switch (k) {
    case AlgorithmKind::Bfs:
      return oracle::Kind::Bfs;
    case AlgorithmKind::Sssp:
      return oracle::Kind::Sssp;
    case AlgorithmKind::Sswp:
      return oracle::Kind::Sswp;
    case AlgorithmKind::Ssnp:
      return oracle::Kind::Ssnp;
    case AlgorithmKind::Viterbi:
      return oracle::Kind::Viterbi;
  }
  return oracle::Kind::Bfs;
}

inline std::vector<oracle::Edge> to_oracle_edges(const std::vector<EdgeTriple>& triples) {
  std::vector<oracle::Edge> out;
  out.reserve(triples.size());
  for (const EdgeTriple& t : triples) out.push_back({t.src, t.dst, t.weight});
  return out;
}

inline std::vector<double> oracle_values(AlgorithmKind kind,
                                         const std::vector<EdgeTriple>& triples,
                                         std::size_t num_vertices, VertexId source) {
  return oracle::values(to_oracle(kind), to_oracle_edges(triples), num_vertices, source);
}

struct ModeResults {
  std::vector<ValueArray> full;
  std::vector<ValueArray> direct_hop;
  std::vector<ValueArray> qrs;
  std::vector<ValueArray> cqrs;
  QrsBundle bundle;
};

inline ModeResults run_all_modes(const SnapshotSeries& series, const QueryContext& q,
                                 unsigned threads = 1) {
  ModeResults r;
  EvalOptions eval{threads};
  for (std::size_t i = 0; i < series.size(); ++i) {
    r.full.push_back(evaluate_full(series.snapshot_graph(i), q, nullptr, eval));
  }
  std::vector<EdgeTriple> inter = build_intersection(series);
  Graph common = build_graph(inter, series.num_vertices);
  std::vector<AdditionBatch> batches = build_addition_batches(series, inter);
  ValueArray bootstrap = evaluate_full(common, q, nullptr, eval);
  r.direct_hop = direct_hop_all(common, bootstrap, batches, q, nullptr,
                                DirectHopOptions{threads, false});

  QrsOptions qopts;
  qopts.eval = eval;
  r.bundle = qrs_pipeline(series, q, nullptr, qopts);
  r.qrs = direct_hop_all(r.bundle.qrs, r.bundle.bootstrap(), r.bundle.reduced_batches, q,
                         nullptr, DirectHopOptions{threads, false});

  VersionedGraph vg = build_versioned_graph(r.bundle.qrs, r.bundle.reduced_batches);
  ConcurrentOptions copts;
  copts.threads = threads;
  MultiResult mr = evaluate_concurrent(vg, r.bundle.bootstrap(), r.bundle.reduced_batches, q,
                                       nullptr, nullptr, copts);
  for (std::size_t i = 0; i < mr.num_snapshots(); ++i) {
    r.cqrs.push_back(mr.snapshot_values(i));
  }
  return r;
}

// Random weight from {1, 2, 3}; valid for every algorithm.
inline double small_weight(std::mt19937_64& rng) {
  return 1.0 + static_cast<double>(rng() % 3);
}

inline std::vector<EdgeTriple> random_triples(std::mt19937_64& rng, std::size_t num_vertices,
                                              std::size_t num_edges) {
  std::vector<EdgeTriple> edges;
  for (std::size_t i = 0; i < num_edges; ++i) {
    VertexId s = static_cast<VertexId>(rng() % num_vertices);
    VertexId d = static_cast<VertexId>(rng() % num_vertices);
    edges.push_back(EdgeTriple{s, d, small_weight(rng)});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

// Random series by mutating a base triple set a few edges per snapshot.
inline SnapshotSeries random_series(std::mt19937_64& rng, std::size_t num_vertices,
                                    std::size_t num_edges, std::size_t num_snapshots,
                                    std::size_t churn) {
  std::vector<std::vector<EdgeTriple>> snaps;
  std::vector<EdgeTriple> cur = random_triples(rng, num_vertices, num_edges);
  snaps.push_back(cur);
  for (std::size_t s = 1; s < num_snapshots; ++s) {
    for (std::size_t c = 0; c < churn; ++c) {
      if (!cur.empty() && (rng() & 1)) {
        cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(rng() % cur.size()));
      } else {
        VertexId a = static_cast<VertexId>(rng() % num_vertices);
        VertexId b = static_cast<VertexId>(rng() % num_vertices);
        cur.push_back(EdgeTriple{a, b, small_weight(rng)});
      }
    }
    std::sort(cur.begin(), cur.end());
    cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
    snaps.push_back(cur);
  }
  return make_series(num_vertices, std::move(snaps));
}

}  // namespace testutil
