// Copyright (c) evograph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "evograph/errors.hpp"
#include "evograph/graph.hpp"
#include "evograph/types.hpp"

namespace evograph {

// One edit step between consecutive snapshots. Deletions apply before
// additions; both are validated strictly when materialized.
struct DeltaBatch {
  std::vector<EdgeTriple> additions;
  std::vector<EdgeTriple> deletions;
};

// Per-snapshot edges absent from the common graph: delta_i = E_i \ E_common.
struct AdditionBatch {
  std::vector<EdgeTriple> triples;
};

// Fully materialized snapshot sequence. Edge sets are sorted and duplicate
// free; index 0 is the base snapshot.
struct SnapshotSeries {
  std::size_t num_vertices = 0;
  std::vector<std::vector<EdgeTriple>> edge_sets;

  std::size_t size() const { return edge_sets.size(); }

  Graph snapshot_graph(std::size_t i) const {
    return build_graph(edge_sets.at(i), num_vertices);
  }
};

namespace detail {

inline std::string triple_str(const EdgeTriple& e) {
  return "(" + std::to_string(e.src) + ", " + std::to_string(e.dst) + ", " +
         std::to_string(e.weight) + ")";
}

inline void check_range(const EdgeTriple& e, std::size_t num_vertices,
                        const std::string& where) {
  if (e.src >= num_vertices || e.dst >= num_vertices) {
    throw RangeError(where + ": edge " + triple_str(e) + " references a vertex >= " +
                     std::to_string(num_vertices));
  }
}

}  // namespace detail

// Applies each delta to the running edge set. Deleting an absent edge or
// adding an already-present one is a consistency error; the base edge list is
// treated as a set (exact duplicates collapse).
inline SnapshotSeries materialize_snapshots(const std::vector<EdgeTriple>& base,
                                            const std::vector<DeltaBatch>& deltas,
                                            std::size_t num_vertices) {
  std::set<EdgeTriple> cur;
  for (const EdgeTriple& e : base) {
    detail::check_range(e, num_vertices, "base snapshot");
    cur.insert(e);
  }

  SnapshotSeries series;
  series.num_vertices = num_vertices;
  series.edge_sets.reserve(deltas.size() + 1);
  series.edge_sets.emplace_back(cur.begin(), cur.end());

  for (std::size_t i = 0; i < deltas.size(); ++i) {
    const std::string where = "delta batch " + std::to_string(i);
    for (const EdgeTriple& e : deltas[i].deletions) {
      detail::check_range(e, num_vertices, where);
      if (cur.erase(e) == 0) {
        throw ConsistencyError(where + ": deletion of absent edge " + detail::triple_str(e));
      }
    }
    for (const EdgeTriple& e : deltas[i].additions) {
      detail::check_range(e, num_vertices, where);
      if (!cur.insert(e).second) {
        throw ConsistencyError(where + ": addition of already-present edge " +
                               detail::triple_str(e));
      }
    }
    series.edge_sets.emplace_back(cur.begin(), cur.end());
  }
  return series;
}

// E_common = intersection of every snapshot's edge set.
inline std::vector<EdgeTriple> build_intersection(const SnapshotSeries& series) {
  if (series.edge_sets.empty()) return {};
  std::vector<EdgeTriple> acc = series.edge_sets.front();
  for (std::size_t i = 1; i < series.edge_sets.size(); ++i) {
    std::vector<EdgeTriple> next;
    next.reserve(acc.size());
    std::set_intersection(acc.begin(), acc.end(), series.edge_sets[i].begin(),
                          series.edge_sets[i].end(), std::back_inserter(next));
    acc = std::move(next);
  }
  return acc;
}

inline std::vector<EdgeTriple> build_union(const SnapshotSeries& series) {
  std::vector<EdgeTriple> acc;
  for (const auto& edges : series.edge_sets) {
    std::vector<EdgeTriple> next;
    next.reserve(acc.size() + edges.size());
    std::set_union(acc.begin(), acc.end(), edges.begin(), edges.end(),
                   std::back_inserter(next));
    acc = std::move(next);
  }
  return acc;
}

// Per-snapshot additions relative to the common graph. `intersection` must be
// sorted (as produced by build_intersection).
inline std::vector<AdditionBatch> build_addition_batches(
    const SnapshotSeries& series, const std::vector<EdgeTriple>& intersection) {
  std::vector<AdditionBatch> batches;
  batches.reserve(series.size());
  for (const auto& edges : series.edge_sets) {
    AdditionBatch b;
    std::set_difference(edges.begin(), edges.end(), intersection.begin(),
                        intersection.end(), std::back_inserter(b.triples));
    batches.push_back(std::move(b));
  }
  return batches;
}

// Reconstructs the edit steps between consecutive snapshots.
inline std::vector<DeltaBatch> derive_deltas(const SnapshotSeries& series) {
  std::vector<DeltaBatch> deltas;
  for (std::size_t i = 1; i < series.size(); ++i) {
    const auto& prev = series.edge_sets[i - 1];
    const auto& next = series.edge_sets[i];
    DeltaBatch d;
    std::set_difference(next.begin(), next.end(), prev.begin(), prev.end(),
                        std::back_inserter(d.additions));
    std::set_difference(prev.begin(), prev.end(), next.begin(), next.end(),
                        std::back_inserter(d.deletions));
    deltas.push_back(std::move(d));
  }
  return deltas;
}

}  // namespace evograph
