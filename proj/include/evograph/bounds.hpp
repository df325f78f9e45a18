// Copyright (c) evograph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <vector>

#include "evograph/errors.hpp"
#include "evograph/evaluate.hpp"
#include "evograph/graph.hpp"
#include "evograph/incremental.hpp"
#include "evograph/types.hpp"

namespace evograph {

// Fixpoints of the common and union graphs. Every snapshot's value is
// sandwiched between them: the common-graph value is never strictly better
// than a snapshot's, and a snapshot's never strictly better than the union's.
struct BoundsPair {
  ValueArray intersection_values;
  ValueArray union_values;
  Direction direction = Direction::Minimize;

  // Numeric sides: minimizing queries are bounded below by the union value
  // and above by the common value; maximizing queries flip.
  const ValueArray& lower() const {
    return direction == Direction::Minimize ? union_values : intersection_values;
  }
  const ValueArray& upper() const {
    return direction == Direction::Minimize ? intersection_values : union_values;
  }
};

struct BoundsOptions {
  bool union_from_scratch = false;  // cross-check path; default reuses the common fixpoint
  EvalOptions eval;
};

// Computes both fixpoints. The union values are derived incrementally from
// the common ones by replaying the union-only edges, which requires the
// common edge set to be a subset of the union's.
inline BoundsPair compute_bounds(const Graph& common, const Graph& unioned,
                                 const QueryContext& q,
                                 EngineCounters* counters = nullptr,
                                 const BoundsOptions& opts = {}) {
  if (common.num_vertices() != unioned.num_vertices()) {
    throw ConsistencyError("common and union graphs disagree on vertex count");
  }
  std::vector<EdgeTriple> common_triples = common.triples();
  std::vector<EdgeTriple> union_triples = unioned.triples();
  if (!std::includes(union_triples.begin(), union_triples.end(),
                     common_triples.begin(), common_triples.end())) {
    throw ConsistencyError("common graph contains an edge missing from the union graph");
  }

  BoundsPair bounds;
  bounds.direction = q.spec.direction;
  bounds.intersection_values = evaluate_full(common, q, counters, opts.eval);
  if (opts.union_from_scratch) {
    bounds.union_values = evaluate_full(unioned, q, counters, opts.eval);
  } else {
    std::vector<EdgeTriple> extra;
    extra.reserve(union_triples.size() - common_triples.size());
    std::set_difference(union_triples.begin(), union_triples.end(),
                        common_triples.begin(), common_triples.end(),
                        std::back_inserter(extra));
    bounds.union_values = evaluate_incremental_additions(
        common, bounds.intersection_values, extra, q, counters, opts.eval);
  }
  return bounds;
}

}  // namespace evograph
