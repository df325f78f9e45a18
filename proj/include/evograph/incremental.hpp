// Copyright (c) evograph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "evograph/errors.hpp"
#include "evograph/evaluate.hpp"
#include "evograph/graph.hpp"
#include "evograph/snapshots.hpp"
#include "evograph/types.hpp"

namespace evograph {

// A vertex whose value improved while replaying an addition batch.
struct IncrementalSeed {
  VertexId vertex = 0;
  double value = 0.0;
};

// Propagates a batch of added edges on top of a settled value array.
// base_values must be stable under g (no edge of g can improve it); the
// result is then the fixpoint of g plus the added edges. Propagation runs
// over g's adjacency plus an overlay holding the additions, so added edges
// are re-relaxed whenever their source improves. When `seeds` is given it
// receives one entry per improvement made while replaying the batch, in
// replay order.
inline ValueArray evaluate_incremental_additions(const Graph& g,
                                                 const ValueArray& base_values,
                                                 const std::vector<EdgeTriple>& additions,
                                                 const QueryContext& q,
                                                 EngineCounters* counters = nullptr,
                                                 const EvalOptions& opts = {},
                                                 std::vector<IncrementalSeed>* seeds = nullptr) {
  const std::size_t n = g.num_vertices();
  if (base_values.size() != n) {
    throw ConsistencyError("base value array has " + std::to_string(base_values.size()) +
                           " entries for a graph with " + std::to_string(n) + " vertices");
  }
  const AlgorithmSpec& spec = q.spec;
#ifndef NDEBUG
  for (VertexId u = 0; u < n; ++u) {
    for (const Neighbor& nb : g.out_edges(u)) {
      double cand = edge_function(spec, base_values[u], nb.weight);
      if (spec.better(cand, base_values[nb.dst])) {
        throw ConsistencyError("base values are not stable under the base graph");
      }
    }
  }
#endif

  std::unordered_map<VertexId, std::vector<Neighbor>> overlay;
  overlay.reserve(additions.size());
  for (const EdgeTriple& e : additions) {
    detail::check_range(e, n, "addition batch");
    if (!weight_in_domain(spec.kind, e.weight)) {
      throw DomainError("added edge " + detail::triple_str(e) +
                        " outside the weight domain of " + to_string(spec.kind));
    }
    overlay[e.src].push_back(Neighbor{e.dst, e.weight});
  }

  ValueArray values = base_values;
  EngineCounters local;
  EngineCounters& ctr = counters ? *counters : local;

  // Sequential seeding: relax each added edge once against the current state.
  std::vector<VertexId> frontier;
  std::vector<char> seeded(n, 0);
  for (const EdgeTriple& e : additions) {
    ++ctr.edges_scanned;
    ++ctr.candidates;
    double cand = edge_function(spec, values[e.src], e.weight);
    if (spec.better(cand, values[e.dst])) {
      values[e.dst] = cand;
      ++ctr.updates;
      if (seeds) seeds->push_back(IncrementalSeed{e.dst, cand});
      if (!seeded[e.dst]) {
        seeded[e.dst] = 1;
        frontier.push_back(e.dst);
      }
    }
  }

  unsigned threads = resolve_threads(opts.threads);
  detail::run_to_fixpoint(frontier, n, threads, ctr,
                          [&](VertexId u, detail::WorkerCtx& ctx) {
                            double vu = detail::load_cell(values[u]);
                            auto relax = [&](const Neighbor& nb) {
                              ++ctx.counters.edges_scanned;
                              ++ctx.counters.candidates;
                              double cand = edge_function(spec, vu, nb.weight);
                              if (detail::improve_cell(values[nb.dst], cand, spec)) {
                                ++ctx.counters.updates;
                                ctx.push(nb.dst);
                              }
                            };
                            for (const Neighbor& nb : g.out_edges(u)) relax(nb);
                            if (auto it = overlay.find(u); it != overlay.end()) {
                              for (const Neighbor& nb : it->second) relax(nb);
                            }
                          });
  return values;
}

struct DirectHopOptions {
  unsigned threads = 0;           // per-snapshot engine threads
  bool parallel_snapshots = false;  // run snapshots concurrently, one thread each
};

// Evaluates every snapshot independently: each result is the common-graph
// fixpoint extended by that snapshot's addition batch.
inline std::vector<ValueArray> direct_hop_all(const Graph& common,
                                              const ValueArray& common_values,
                                              const std::vector<AdditionBatch>& batches,
                                              const QueryContext& q,
                                              EngineCounters* counters = nullptr,
                                              const DirectHopOptions& opts = {}) {
  std::vector<ValueArray> results(batches.size());
  std::vector<EngineCounters> per_snapshot(batches.size());
  if (opts.parallel_snapshots) {
    parallel_chunks(batches.size(), resolve_threads(opts.threads),
                    [&](std::size_t lo, std::size_t hi, unsigned) {
                      for (std::size_t i = lo; i < hi; ++i) {
                        results[i] = evaluate_incremental_additions(
                            common, common_values, batches[i].triples, q,
                            &per_snapshot[i], EvalOptions{1});
                      }
                    });
  } else {
    for (std::size_t i = 0; i < batches.size(); ++i) {
      results[i] = evaluate_incremental_additions(common, common_values,
                                                  batches[i].triples, q,
                                                  &per_snapshot[i],
                                                  EvalOptions{opts.threads});
    }
  }
  if (counters) {
    for (const EngineCounters& c : per_snapshot) *counters += c;
  }
  return results;
}

}  // namespace evograph
