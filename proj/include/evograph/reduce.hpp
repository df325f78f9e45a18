// Copyright (c) evograph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "evograph/errors.hpp"
#include "evograph/graph.hpp"
#include "evograph/snapshots.hpp"
#include "evograph/types.hpp"
#include "evograph/uvv.hpp"

namespace evograph {

// Drops every edge pointing at an unchanged vertex: its value is already
// final, so nothing needs to flow into it. Built by inserting the surviving
// edges rather than deleting from the original.
inline Graph reduce_intersection(const Graph& common, const UvvSet& uvv) {
  if (uvv.member.size() != common.num_vertices()) {
    throw ConsistencyError("unchanged-vertex set does not match the graph's vertex count");
  }
  std::vector<EdgeTriple> kept;
  kept.reserve(common.edge_count());
  for (VertexId u = 0; u < common.num_vertices(); ++u) {
    for (const Neighbor& nb : common.out_edges(u)) {
      if (!uvv.contains(nb.dst)) kept.push_back(EdgeTriple{u, nb.dst, nb.weight});
    }
  }
  return build_graph(std::move(kept), common.num_vertices());
}

// Same filter for the per-snapshot addition batches, order preserving.
inline std::vector<AdditionBatch> reduce_batches(const std::vector<AdditionBatch>& batches,
                                                 const UvvSet& uvv) {
  std::vector<AdditionBatch> out;
  out.reserve(batches.size());
  for (const AdditionBatch& b : batches) {
    AdditionBatch r;
    r.triples.reserve(b.triples.size());
    for (const EdgeTriple& e : b.triples) {
      if (e.dst >= uvv.member.size()) {
        throw RangeError("addition batch edge references vertex " + std::to_string(e.dst) +
                         " outside the unchanged-vertex set");
      }
      if (!uvv.contains(e.dst)) r.triples.push_back(e);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace evograph
