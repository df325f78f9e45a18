// Copyright (c) evograph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "evograph/errors.hpp"
#include "evograph/types.hpp"

namespace evograph {

struct Neighbor {
  VertexId dst = 0;
  Weight weight = 1.0;

  friend constexpr auto operator<=>(const Neighbor&, const Neighbor&) = default;
};

// Immutable directed graph with adjacency lists sorted by (dst, weight).
// Construction goes through build_graph which sorts and deduplicates.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t num_vertices)
      : num_vertices_(num_vertices), adjacency_(num_vertices) {}

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t edge_count() const { return edge_count_; }

  const std::vector<Neighbor>& out_edges(VertexId u) const {
    return adjacency_[u];
  }

  // All edges as a sorted triple list; inverse of build_graph.
  std::vector<EdgeTriple> triples() const {
    std::vector<EdgeTriple> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < num_vertices_; ++u) {
      for (const Neighbor& e : adjacency_[u]) {
        out.push_back({u, e.dst, e.weight});
      }
    }
    return out;
  }

  bool contains(const EdgeTriple& t) const {
    if (t.src >= num_vertices_) return false;
    const auto& list = adjacency_[t.src];
    return std::binary_search(list.begin(), list.end(),
                              Neighbor{t.dst, t.weight});
  }

  friend Graph build_graph(std::vector<EdgeTriple> triples,
                           std::size_t num_vertices);

 private:
  std::size_t num_vertices_ = 0;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Builds an adjacency-indexed graph from a triple set. Duplicate identical
// triples collapse; triples differing only in weight are kept as distinct
// parallel edges.
inline Graph build_graph(std::vector<EdgeTriple> triples,
                         std::size_t num_vertices) {
  for (const EdgeTriple& t : triples) {
    if (t.src >= num_vertices || t.dst >= num_vertices) {
      throw RangeError("edge (" + std::to_string(t.src) + " -> " +
                       std::to_string(t.dst) + ") references a vertex id >= " +
                       std::to_string(num_vertices));
    }
  }
  std::sort(triples.begin(), triples.end());
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());

  Graph g(num_vertices);
  for (const EdgeTriple& t : triples) {
    g.adjacency_[t.src].push_back({t.dst, t.weight});
  }
  g.edge_count_ = triples.size();
  return g;
}

}  // namespace evograph
