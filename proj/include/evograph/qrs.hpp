// Copyright (c) evograph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <cstddef>
#include <vector>

#include "evograph/bounds.hpp"
#include "evograph/errors.hpp"
#include "evograph/evaluate.hpp"
#include "evograph/graph.hpp"
#include "evograph/reduce.hpp"
#include "evograph/snapshots.hpp"
#include "evograph/types.hpp"
#include "evograph/uvv.hpp"

namespace evograph {

struct QrsTimings {
  double intersection_build_ms = 0.0;
  double union_build_ms = 0.0;
  double bounds_ms = 0.0;
  double reduction_ms = 0.0;

  double total_ms() const {
    return intersection_build_ms + union_build_ms + bounds_ms + reduction_ms;
  }
};

struct ReductionStats {
  std::size_t num_vertices = 0;
  std::size_t num_snapshots = 0;
  std::size_t intersection_edges = 0;
  std::size_t union_edges = 0;
  std::size_t qrs_edges = 0;
  std::size_t removed_intersection_edges = 0;
  std::size_t batch_edges_original = 0;
  std::size_t batch_edges_reduced = 0;
  std::size_t uvv_count = 0;
  double uvv_fraction = 0.0;
};

// Everything the snapshot-evaluation stages need, produced once per query:
// the common graph and its fixpoint, the query-relevant reduction of that
// graph, and the (original and reduced) per-snapshot addition batches.
struct QrsBundle {
  Graph common;
  Graph qrs;
  std::vector<AdditionBatch> batches;
  std::vector<AdditionBatch> reduced_batches;
  BoundsPair bounds;
  UvvSet uvv;
  ReductionStats stats;
  QrsTimings timings;

  const ValueArray& bootstrap() const { return bounds.intersection_values; }
};

struct QrsOptions {
  bool union_from_scratch = false;
  EvalOptions eval;
};

inline QrsBundle qrs_pipeline(const SnapshotSeries& series, const QueryContext& q,
                              EngineCounters* counters = nullptr,
                              const QrsOptions& opts = {}) {
  if (series.size() == 0) {
    throw ConfigError("snapshot series is empty");
  }
  using Clock = std::chrono::steady_clock;
  auto ms_since = [](Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  };

  QrsBundle b;
  auto t = Clock::now();
  std::vector<EdgeTriple> inter = build_intersection(series);
  b.common = build_graph(inter, series.num_vertices);
  b.timings.intersection_build_ms = ms_since(t);

  t = Clock::now();
  std::vector<EdgeTriple> uni = build_union(series);
  Graph unioned = build_graph(uni, series.num_vertices);
  b.batches = build_addition_batches(series, inter);
  b.timings.union_build_ms = ms_since(t);

  t = Clock::now();
  BoundsOptions bopts;
  bopts.union_from_scratch = opts.union_from_scratch;
  bopts.eval = opts.eval;
  b.bounds = compute_bounds(b.common, unioned, q, counters, bopts);
  b.timings.bounds_ms = ms_since(t);

  t = Clock::now();
  b.uvv = detect_uvv(b.bounds);
  b.qrs = reduce_intersection(b.common, b.uvv);
  b.reduced_batches = reduce_batches(b.batches, b.uvv);
  b.timings.reduction_ms = ms_since(t);

  b.stats.num_vertices = series.num_vertices;
  b.stats.num_snapshots = series.size();
  b.stats.intersection_edges = b.common.edge_count();
  b.stats.union_edges = unioned.edge_count();
  b.stats.qrs_edges = b.qrs.edge_count();
  b.stats.removed_intersection_edges = b.stats.intersection_edges - b.stats.qrs_edges;
  for (const AdditionBatch& batch : b.batches) b.stats.batch_edges_original += batch.triples.size();
  for (const AdditionBatch& batch : b.reduced_batches) b.stats.batch_edges_reduced += batch.triples.size();
  b.stats.uvv_count = b.uvv.size();
  b.stats.uvv_fraction = b.uvv.fraction();
  return b;
}

}  // namespace evograph
