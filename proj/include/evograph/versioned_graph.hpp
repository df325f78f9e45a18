// Copyright (c) evograph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "evograph/errors.hpp"
#include "evograph/graph.hpp"
#include "evograph/snapshots.hpp"
#include "evograph/types.hpp"
#include "evograph/version_mask.hpp"

namespace evograph {

struct VersionedEdge {
  VertexId dst = 0;
  Weight weight = 1.0;
  VersionMask mask;
};

class VersionedGraph;
inline VersionedGraph build_versioned_graph(const Graph& common,
                                            const std::vector<AdditionBatch>& batches);

// All snapshots in one structure: every edge carries the set of snapshots it
// belongs to. Edges present in every snapshot sit at the front of each
// adjacency list so the common prefix can be consumed without mask checks.
class VersionedGraph {
 public:
  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_snapshots() const { return num_snapshots_; }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t common_edge_count() const { return common_edge_count_; }

  const std::vector<VersionedEdge>& out_edges(VertexId u) const {
    return adjacency_.at(u);
  }

  // Number of leading out-edges of u that belong to every snapshot.
  std::size_t common_prefix(VertexId u) const { return common_prefix_.at(u); }

  bool snapshot_has_edge(VertexId u, std::size_t edge_index, std::size_t snapshot) const {
    if (snapshot >= num_snapshots_) {
      throw RangeError("snapshot index " + std::to_string(snapshot) + " out of range (" +
                       std::to_string(num_snapshots_) + " snapshots)");
    }
    return adjacency_.at(u).at(edge_index).mask.test(snapshot);
  }

 private:
  friend VersionedGraph build_versioned_graph(const Graph&,
                                              const std::vector<AdditionBatch>&);

  std::vector<std::vector<VersionedEdge>> adjacency_;
  std::vector<std::size_t> common_prefix_;
  std::size_t num_snapshots_ = 0;
  std::size_t edge_count_ = 0;
  std::size_t common_edge_count_ = 0;
};

// Merges the common graph with one addition batch per snapshot. Identical
// (src, dst, weight) triples from different batches collapse into one edge
// whose mask carries all owning snapshots.
inline VersionedGraph build_versioned_graph(const Graph& common,
                                            const std::vector<AdditionBatch>& batches) {
  const std::size_t n_snap = batches.size();
  if (n_snap == 0) {
    throw ConfigError("versioned graph needs at least one snapshot");
  }
  if (n_snap > kMaxSnapshots) {
    throw CapacityError("series has " + std::to_string(n_snap) +
                        " snapshots but the mask holds " + std::to_string(kMaxSnapshots) +
                        "; rebuild with a larger EVOGRAPH_MASK_WORDS");
  }
  const std::size_t n = common.num_vertices();
  const VersionMask full = VersionMask::all_ones(n_snap);

  VersionedGraph vg;
  vg.num_snapshots_ = n_snap;
  vg.adjacency_.resize(n);
  vg.common_prefix_.assign(n, 0);

  // Delta edges first, grouped per source and deduplicated by triple.
  std::vector<std::vector<VersionedEdge>> delta(n);
  for (std::size_t i = 0; i < n_snap; ++i) {
    for (const EdgeTriple& e : batches[i].triples) {
      detail::check_range(e, n, "addition batch " + std::to_string(i));
      auto& row = delta[e.src];
      auto it = std::find_if(row.begin(), row.end(), [&](const VersionedEdge& ve) {
        return ve.dst == e.dst && ve.weight == e.weight;
      });
      if (it == row.end()) {
        VersionedEdge ve{e.dst, e.weight, {}};
        ve.mask.set(i);
        row.push_back(ve);
      } else {
        it->mask.set(i);
      }
    }
  }

  for (VertexId u = 0; u < n; ++u) {
    auto& row = vg.adjacency_[u];
    for (const Neighbor& nb : common.out_edges(u)) {
      row.push_back(VersionedEdge{nb.dst, nb.weight, full});
    }
    vg.common_prefix_[u] = row.size();
    vg.common_edge_count_ += row.size();

    auto& extra = delta[u];
    std::sort(extra.begin(), extra.end(), [](const VersionedEdge& a, const VersionedEdge& b) {
      return a.dst != b.dst ? a.dst < b.dst : a.weight < b.weight;
    });
    for (VersionedEdge& ve : extra) {
      // A delta edge owned by every snapshot is common in effect; keep the
      // prefix honest by promoting it.
      if (ve.mask == full) {
        row.insert(row.begin() + static_cast<std::ptrdiff_t>(vg.common_prefix_[u]), ve);
        ++vg.common_prefix_[u];
        ++vg.common_edge_count_;
      } else {
        row.push_back(ve);
      }
    }
    vg.edge_count_ += row.size();
  }
  return vg;
}

inline bool snapshot_has_edge(const VersionedGraph& g, VertexId u,
                              std::size_t edge_index, std::size_t snapshot) {
  return g.snapshot_has_edge(u, edge_index, snapshot);
}

}  // namespace evograph
