// Copyright (c) evograph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "evograph/errors.hpp"
#include "evograph/evaluate.hpp"
#include "evograph/snapshots.hpp"
#include "evograph/types.hpp"
#include "evograph/versioned_graph.hpp"

namespace evograph {

enum class Layout { SnapshotMajor, VertexMajor };

inline const char* to_string(Layout layout) {
  return layout == Layout::SnapshotMajor ? "snapshot-major" : "vertex-major";
}

// One value per (snapshot, vertex) pair in a single buffer. Vertex-major
// keeps a vertex's per-snapshot lane contiguous, which is what the
// all-snapshot engine touches per edge.
class MultiResult {
 public:
  MultiResult(std::size_t num_snapshots, std::size_t num_vertices, Layout layout,
              double init = 0.0)
      : n_snap_(num_snapshots),
        n_vert_(num_vertices),
        layout_(layout),
        data_(num_snapshots * num_vertices, init) {}

  std::size_t num_snapshots() const { return n_snap_; }
  std::size_t num_vertices() const { return n_vert_; }
  Layout layout() const { return layout_; }

  double& cell(std::size_t snapshot, VertexId v) { return data_[index(snapshot, v)]; }
  double cell(std::size_t snapshot, VertexId v) const { return data_[index(snapshot, v)]; }

  ValueArray snapshot_values(std::size_t snapshot) const {
    ValueArray out(n_vert_);
    for (VertexId v = 0; v < n_vert_; ++v) out[v] = cell(snapshot, v);
    return out;
  }

 private:
  std::size_t index(std::size_t s, VertexId v) const {
    return layout_ == Layout::SnapshotMajor ? s * n_vert_ + v
                                            : static_cast<std::size_t>(v) * n_snap_ + s;
  }

  std::size_t n_snap_;
  std::size_t n_vert_;
  Layout layout_;
  std::vector<double> data_;
};

struct RoundTelemetry {
  std::uint64_t frontier_size = 0;
  std::uint64_t edges_scanned = 0;
  std::uint64_t candidates = 0;
  std::uint64_t updates = 0;
  std::vector<std::uint64_t> updates_per_snapshot;
};

struct ConcurrentTelemetry {
  std::vector<RoundTelemetry> rounds;
};

struct ConcurrentOptions {
  unsigned threads = 0;
  Layout layout = Layout::SnapshotMajor;
};

// Evaluates every snapshot in one pass over the versioned graph. The frontier
// is snapshot oblivious: a vertex enters it when any snapshot improved, and an
// active vertex relaxes each out-edge for every snapshot that owns it. Edges
// in the common prefix skip the mask walk entirely.
inline MultiResult evaluate_concurrent(const VersionedGraph& vg,
                                       const ValueArray& bootstrap,
                                       const std::vector<AdditionBatch>& batches,
                                       const QueryContext& q,
                                       EngineCounters* counters = nullptr,
                                       ConcurrentTelemetry* telemetry = nullptr,
                                       const ConcurrentOptions& opts = {}) {
  const std::size_t n = vg.num_vertices();
  const std::size_t n_snap = vg.num_snapshots();
  if (batches.size() != n_snap) {
    throw ConfigError("versioned graph holds " + std::to_string(n_snap) +
                      " snapshots but " + std::to_string(batches.size()) +
                      " addition batches were supplied");
  }
  if (bootstrap.size() != n) {
    throw ConsistencyError("bootstrap value array has " + std::to_string(bootstrap.size()) +
                           " entries for a graph with " + std::to_string(n) + " vertices");
  }
  const AlgorithmSpec& spec = q.spec;
  if (q.source >= n) {
    throw RangeError("source vertex " + std::to_string(q.source) + " out of range (" +
                     std::to_string(n) + " vertices)");
  }

  MultiResult result(n_snap, n, opts.layout);
  for (std::size_t i = 0; i < n_snap; ++i) {
    for (VertexId v = 0; v < n; ++v) result.cell(i, v) = bootstrap[v];
  }

  EngineCounters local;
  EngineCounters& ctr = counters ? *counters : local;
  unsigned threads = resolve_threads(opts.threads);

  // Sequential seeding: replay each snapshot's additions once.
  std::vector<VertexId> frontier;
  std::vector<char> seeded(n, 0);
  std::vector<std::uint64_t> seed_updates(telemetry ? n_snap : 0, 0);
  std::uint64_t seed_edges = 0;
  std::uint64_t seed_candidates = 0;
  std::uint64_t seed_hits = 0;
  for (std::size_t i = 0; i < n_snap; ++i) {
    for (const EdgeTriple& e : batches[i].triples) {
      detail::check_range(e, n, "addition batch " + std::to_string(i));
      if (!weight_in_domain(spec.kind, e.weight)) {
        throw DomainError("added edge " + detail::triple_str(e) +
                          " outside the weight domain of " + to_string(spec.kind));
      }
      ++seed_edges;
      ++seed_candidates;
      double cand = edge_function(spec, result.cell(i, e.src), e.weight);
      if (spec.better(cand, result.cell(i, e.dst))) {
        result.cell(i, e.dst) = cand;
        ++seed_hits;
        if (telemetry) ++seed_updates[i];
        if (!seeded[e.dst]) {
          seeded[e.dst] = 1;
          frontier.push_back(e.dst);
        }
      }
    }
  }
  ctr.edges_scanned += seed_edges;
  ctr.candidates += seed_candidates;
  ctr.updates += seed_hits;
  if (telemetry) {
    RoundTelemetry seed_round;
    seed_round.frontier_size = 0;
    seed_round.edges_scanned = seed_edges;
    seed_round.candidates = seed_candidates;
    seed_round.updates = seed_hits;
    seed_round.updates_per_snapshot = seed_updates;
    telemetry->rounds.push_back(std::move(seed_round));
  }

  std::vector<char> in_next(n, 0);
  std::vector<detail::WorkerCtx> workers(threads);
  for (detail::WorkerCtx& w : workers) w.in_next = &in_next;
  std::vector<std::vector<std::uint64_t>> worker_snapshot_updates;
  if (telemetry) {
    worker_snapshot_updates.assign(threads, std::vector<std::uint64_t>(n_snap, 0));
  }

  while (!frontier.empty()) {
    ++ctr.rounds;
    ctr.frontier_total += frontier.size();
    parallel_chunks(frontier.size(), threads,
                    [&](std::size_t lo, std::size_t hi, unsigned w) {
                      detail::WorkerCtx& ctx = workers[w];
                      std::uint64_t* snap_hits =
                          telemetry ? worker_snapshot_updates[w].data() : nullptr;
                      for (std::size_t idx = lo; idx < hi; ++idx) {
                        VertexId u = frontier[idx];
                        const auto& row = vg.out_edges(u);
                        std::size_t prefix = vg.common_prefix(u);
                        for (std::size_t e = 0; e < row.size(); ++e) {
                          const VersionedEdge& ve = row[e];
                          ++ctx.counters.edges_scanned;
                          bool any = false;
                          auto apply = [&](std::size_t i) {
                            ++ctx.counters.candidates;
                            double vu = detail::load_cell(result.cell(i, u));
                            double cand = edge_function(spec, vu, ve.weight);
                            if (detail::improve_cell(result.cell(i, ve.dst), cand, spec)) {
                              ++ctx.counters.updates;
                              any = true;
                              if (snap_hits) ++snap_hits[i];
                            }
                          };
                          if (e < prefix) {
                            for (std::size_t i = 0; i < n_snap; ++i) apply(i);
                          } else {
                            ve.mask.for_each(apply);
                          }
                          if (any) ctx.push(ve.dst);
                        }
                      }
                    });
    RoundTelemetry round;
    round.frontier_size = frontier.size();
    if (telemetry) round.updates_per_snapshot.assign(n_snap, 0);
    frontier.clear();
    for (unsigned w = 0; w < threads; ++w) {
      detail::WorkerCtx& ctx = workers[w];
      round.edges_scanned += ctx.counters.edges_scanned;
      round.candidates += ctx.counters.candidates;
      round.updates += ctx.counters.updates;
      ctr += ctx.counters;
      ctx.counters = EngineCounters{};
      frontier.insert(frontier.end(), ctx.next.begin(), ctx.next.end());
      ctx.next.clear();
      if (telemetry) {
        for (std::size_t i = 0; i < n_snap; ++i) {
          round.updates_per_snapshot[i] += worker_snapshot_updates[w][i];
          worker_snapshot_updates[w][i] = 0;
        }
      }
    }
    for (VertexId v : frontier) in_next[v] = 0;
    if (telemetry) telemetry->rounds.push_back(std::move(round));
  }
  return result;
}

}  // namespace evograph
