// Copyright (c) evograph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <string_view>

#include "evograph/errors.hpp"
#include "evograph/types.hpp"

namespace evograph {

enum class AlgorithmKind { Bfs, Sssp, Sswp, Ssnp, Viterbi };

enum class Direction { Minimize, Maximize };

// A monotonic path algorithm: initial values, an edge function that is never
// better than its input, and an improvement direction. A vertex value is the
// best over all source paths of the edge function folded along the path.
struct AlgorithmSpec {
  AlgorithmKind kind = AlgorithmKind::Sssp;
  Direction direction = Direction::Minimize;
  double init_source = 0.0;
  double init_other = std::numeric_limits<double>::infinity();

  // CASMIN/CASMAX ordering: true iff a would replace b.
  bool better(double a, double b) const {
    return direction == Direction::Minimize ? a < b : a > b;
  }

  // The unreachable sentinel.
  double worst() const { return init_other; }
};

inline AlgorithmSpec algorithm_spec(AlgorithmKind kind) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  switch (kind) {
    case AlgorithmKind::Bfs:
      return {kind, Direction::Minimize, 0.0, kInf};
    case AlgorithmKind::Sssp:
      return {kind, Direction::Minimize, 0.0, kInf};
    case AlgorithmKind::Sswp:
      return {kind, Direction::Maximize, kInf, 0.0};
    case AlgorithmKind::Ssnp:
      return {kind, Direction::Minimize, 0.0, kInf};
    case AlgorithmKind::Viterbi:
      return {kind, Direction::Maximize, 1.0, 0.0};
  }
  throw ConfigError("unknown algorithm kind");
}

// Candidate value for the edge's sink given the source value. WORST inputs
// propagate to WORST outputs for every kind, so unreachable vertices never
// improve anything.
inline double edge_function(const AlgorithmSpec& spec, double val_u,
                            Weight w) {
  switch (spec.kind) {
    case AlgorithmKind::Bfs:
      return val_u + 1.0;  // weight-free
    case AlgorithmKind::Sssp:
      return val_u + w;
    case AlgorithmKind::Sswp:
      return std::min(val_u, w);
    case AlgorithmKind::Ssnp:
      return std::max(val_u, w);
    case AlgorithmKind::Viterbi:
      return val_u / w;
  }
  return spec.worst();
}

// Weight domain per algorithm: w >= 0 and finite everywhere, strictly
// positive for SSSP, >= 1 for Viterbi (keeps val/w non-improving on cycles).
inline bool weight_in_domain(AlgorithmKind kind, Weight w) {
  if (!std::isfinite(w) || w < 0.0) return false;
  switch (kind) {
    case AlgorithmKind::Sssp:
      return w > 0.0;
    case AlgorithmKind::Viterbi:
      return w >= 1.0;
    default:
      return true;
  }
}

inline ValueArray make_initial_values(const AlgorithmSpec& spec,
                                      std::size_t num_vertices,
                                      VertexId source) {
  ValueArray values(num_vertices, spec.init_other);
  values[source] = spec.init_source;
  return values;
}

inline std::string to_string(AlgorithmKind kind) {
  switch (kind) {
    case AlgorithmKind::Bfs:
      return "bfs";
    case AlgorithmKind::Sssp:
      return "sssp";
    case AlgorithmKind::Sswp:
      return "sswp";
    case AlgorithmKind::Ssnp:
      return "ssnp";
    case AlgorithmKind::Viterbi:
      return "viterbi";
  }
  return "?";
}

inline AlgorithmKind algorithm_kind_from_string(std::string_view name) {
  if (name == "bfs") return AlgorithmKind::Bfs;
  if (name == "sssp") return AlgorithmKind::Sssp;
  if (name == "sswp") return AlgorithmKind::Sswp;
  if (name == "ssnp") return AlgorithmKind::Ssnp;
  if (name == "viterbi") return AlgorithmKind::Viterbi;
  throw ConfigError("unknown algorithm '" + std::string(name) +
                    "' (expected bfs|sssp|sswp|ssnp|viterbi)");
}

inline constexpr AlgorithmKind kAllAlgorithms[] = {
    AlgorithmKind::Bfs, AlgorithmKind::Sssp, AlgorithmKind::Sswp,
    AlgorithmKind::Ssnp, AlgorithmKind::Viterbi};

}  // namespace evograph
