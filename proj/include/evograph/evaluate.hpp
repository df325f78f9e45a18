// Copyright (c) evograph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <cstdint>
#include <string>
#include <vector>

#include "evograph/algorithm.hpp"
#include "evograph/errors.hpp"
#include "evograph/graph.hpp"
#include "evograph/parallel.hpp"
#include "evograph/types.hpp"

namespace evograph {

struct QueryContext {
  AlgorithmSpec spec;
  VertexId source = 0;
};

struct EvalOptions {
  unsigned threads = 0;  // 0 resolves via EVOGRAPH_THREADS / hardware
};

struct EngineCounters {
  std::uint64_t edges_scanned = 0;   // edge objects traversed
  std::uint64_t candidates = 0;      // edge-function applications
  std::uint64_t updates = 0;         // successful value improvements
  std::uint64_t rounds = 0;
  std::uint64_t frontier_total = 0;  // sum of frontier sizes over rounds

  EngineCounters& operator+=(const EngineCounters& o) {
    edges_scanned += o.edges_scanned;
    candidates += o.candidates;
    updates += o.updates;
    rounds += o.rounds;
    frontier_total += o.frontier_total;
    return *this;
  }
};

namespace detail {

// Better-only publish. Relaxed ordering suffices: every stored value is the
// fold of some real path, updates only move toward the fixpoint, and rounds
// are separated by thread joins.
inline bool improve_cell(double& cell, double candidate, const AlgorithmSpec& spec) {
  std::atomic_ref<double> ref(cell);
  double cur = ref.load(std::memory_order_relaxed);
  while (spec.better(candidate, cur)) {
    if (ref.compare_exchange_weak(cur, candidate, std::memory_order_relaxed)) return true;
  }
  return false;
}

inline double load_cell(double& cell) {
  return std::atomic_ref<double>(cell).load(std::memory_order_relaxed);
}

// One-shot membership claim; keeps each vertex in the next frontier at most once.
inline bool claim_flag(char& flag) {
  return std::atomic_ref<char>(flag).exchange(1, std::memory_order_relaxed) == 0;
}

struct WorkerCtx {
  std::vector<VertexId> next;
  EngineCounters counters;
  std::vector<char>* in_next = nullptr;

  void push(VertexId v) {
    if (claim_flag((*in_next)[v])) next.push_back(v);
  }
};

// Frontier loop shared by the single-snapshot and the all-snapshot engines.
// process(u, ctx) relaxes u's out-edges, calling ctx.push(v) for every vertex
// whose value improved.
template <class ProcessVertex>
void run_to_fixpoint(std::vector<VertexId>& frontier, std::size_t num_vertices,
                     unsigned threads, EngineCounters& counters,
                     ProcessVertex&& process) {
  if (threads == 0) threads = 1;
  std::vector<char> in_next(num_vertices, 0);
  std::vector<WorkerCtx> workers(threads);
  for (WorkerCtx& w : workers) w.in_next = &in_next;

  while (!frontier.empty()) {
    ++counters.rounds;
    counters.frontier_total += frontier.size();
    parallel_chunks(frontier.size(), threads,
                    [&](std::size_t lo, std::size_t hi, unsigned w) {
                      WorkerCtx& ctx = workers[w];
                      for (std::size_t idx = lo; idx < hi; ++idx) {
                        process(frontier[idx], ctx);
                      }
                    });
    frontier.clear();
    for (WorkerCtx& ctx : workers) {
      counters += ctx.counters;
      ctx.counters = EngineCounters{};
      frontier.insert(frontier.end(), ctx.next.begin(), ctx.next.end());
      ctx.next.clear();
    }
    for (VertexId v : frontier) in_next[v] = 0;
  }
}

}  // namespace detail

inline void validate_weights(const Graph& g, AlgorithmKind kind) {
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    for (const Neighbor& nb : g.out_edges(u)) {
      if (!weight_in_domain(kind, nb.weight)) {
        throw DomainError("edge (" + std::to_string(u) + ", " + std::to_string(nb.dst) +
                          ", " + std::to_string(nb.weight) + ") outside the weight domain of " +
                          to_string(kind));
      }
    }
  }
}

// From-scratch fixpoint of one snapshot. The result is order-independent:
// better-only updates converge to the best fold over all simple paths
// regardless of scheduling, so any thread count yields identical values.
inline ValueArray evaluate_full(const Graph& g, const QueryContext& q,
                                EngineCounters* counters = nullptr,
                                const EvalOptions& opts = {}) {
  if (q.source >= g.num_vertices()) {
    throw RangeError("source vertex " + std::to_string(q.source) + " out of range (" +
                     std::to_string(g.num_vertices()) + " vertices)");
  }
  const AlgorithmSpec& spec = q.spec;
  ValueArray values = make_initial_values(spec, g.num_vertices(), q.source);
  std::vector<VertexId> frontier{q.source};
  EngineCounters local;
  EngineCounters& ctr = counters ? *counters : local;
  unsigned threads = resolve_threads(opts.threads);

  detail::run_to_fixpoint(frontier, g.num_vertices(), threads, ctr,
                          [&](VertexId u, detail::WorkerCtx& ctx) {
                            double vu = detail::load_cell(values[u]);
                            for (const Neighbor& nb : g.out_edges(u)) {
                              ++ctx.counters.edges_scanned;
                              ++ctx.counters.candidates;
                              double cand = edge_function(spec, vu, nb.weight);
                              if (detail::improve_cell(values[nb.dst], cand, spec)) {
                                ++ctx.counters.updates;
                                ctx.push(nb.dst);
                              }
                            }
                          });
  return values;
}

}  // namespace evograph
