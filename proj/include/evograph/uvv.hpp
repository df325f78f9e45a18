// Copyright (c) evograph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "evograph/bounds.hpp"
#include "evograph/errors.hpp"
#include "evograph/types.hpp"

namespace evograph {

// Vertices whose value is provably identical across every snapshot.
struct UvvSet {
  std::vector<char> member;
  std::size_t count = 0;

  bool contains(VertexId v) const { return member[v] != 0; }
  std::size_t size() const { return count; }

  double fraction() const {
    return member.empty() ? 0.0 : static_cast<double>(count) / static_cast<double>(member.size());
  }
};

// A vertex is unchanged when its two bounding fixpoints coincide exactly;
// both sides equal to the unreachable value also counts. The test is safe
// but not complete: equal snapshot values with strictly separated bounds
// stay undetected.
inline UvvSet detect_uvv(const BoundsPair& bounds) {
  if (bounds.intersection_values.size() != bounds.union_values.size()) {
    throw ConsistencyError("bound arrays differ in length");
  }
  UvvSet uvv;
  uvv.member.assign(bounds.intersection_values.size(), 0);
  for (std::size_t v = 0; v < uvv.member.size(); ++v) {
    if (bounds.intersection_values[v] == bounds.union_values[v]) {
      uvv.member[v] = 1;
      ++uvv.count;
    }
  }
  return uvv;
}

}  // namespace evograph
