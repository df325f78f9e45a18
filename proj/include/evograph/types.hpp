// Copyright (c) evograph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace evograph {

// Dense zero-based vertex id. All vertices exist in all snapshots; only the
// edge sets differ over time.
using VertexId = std::uint32_t;

// Non-negative edge weight. Algorithm-specific domains (w > 0 for SSSP,
// w >= 1 for Viterbi) are enforced at query entry, not here.
using Weight = double;

// Per-vertex query values for one graph or snapshot. The unreachable
// sentinel is the algorithm's WORST value (+inf for minimizing algorithms,
// 0 for SSWP/Viterbi).
using ValueArray = std::vector<double>;

// A directed weighted edge. Identity is the full (src, dst, weight) triple:
// two triples that differ only in weight are distinct edges.
struct EdgeTriple {
  VertexId src = 0;
  VertexId dst = 0;
  Weight weight = 1.0;

  friend constexpr auto operator<=>(const EdgeTriple&,
                                    const EdgeTriple&) = default;
};

}  // namespace evograph
