// Copyright (c) evograph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "evograph/algorithm.hpp"
#include "evograph/errors.hpp"
#include "evograph/parse.hpp"
#include "evograph/snapshots.hpp"
#include "evograph/types.hpp"

namespace evograph {

// Shortest decimal form that round-trips the exact double. Infinities render
// as "inf"/"-inf"; zero as "0".
inline std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

inline void write_edge_list(std::ostream& out, const std::vector<EdgeTriple>& triples,
                            const IdMap& ids) {
  for (const EdgeTriple& e : triples) {
    out << ids.external(e.src) << ' ' << ids.external(e.dst) << ' '
        << format_double(e.weight) << '\n';
  }
}

inline void write_delta_file(std::ostream& out, const DeltaBatch& delta,
                             const IdMap& ids) {
  for (const EdgeTriple& e : delta.additions) {
    out << "+ " << ids.external(e.src) << ' ' << ids.external(e.dst) << ' '
        << format_double(e.weight) << '\n';
  }
  for (const EdgeTriple& e : delta.deletions) {
    out << "- " << ids.external(e.src) << ' ' << ids.external(e.dst) << ' '
        << format_double(e.weight) << '\n';
  }
}

// One line per vertex, ascending external id. Bytes are deterministic for
// fixed values: ordering and number formatting are both canonical.
inline void write_result_file(std::ostream& out, const ValueArray& values,
                              const IdMap& ids, AlgorithmKind kind,
                              std::uint64_t external_source, std::size_t snapshot) {
  out << "# algorithm " << to_string(kind) << '\n';
  out << "# source " << external_source << '\n';
  out << "# snapshot " << snapshot << '\n';
  std::vector<std::pair<std::uint64_t, VertexId>> order;
  order.reserve(values.size());
  for (VertexId v = 0; v < values.size(); ++v) order.emplace_back(ids.external(v), v);
  std::sort(order.begin(), order.end());
  for (const auto& [ext, v] : order) {
    out << ext << ' ' << format_double(values[v]) << '\n';
  }
}

struct ResultFileContents {
  std::string algorithm;
  std::uint64_t source = 0;
  std::size_t snapshot = 0;
  std::vector<std::pair<std::uint64_t, double>> values;  // (external id, value)
};

inline ResultFileContents parse_result_file(std::istream& in,
                                            const std::string& name = "result") {
  ResultFileContents rf;
  std::string line;
  std::size_t line_no = 0;
  bool saw_alg = false, saw_src = false, saw_snap = false;
  while (std::getline(in, line)) {
    ++line_no;
    auto all = detail::split_fields(line);
    if (all.empty()) continue;
    if (all[0] == "#") {
      if (all.size() == 3 && all[1] == "algorithm") {
        rf.algorithm = std::string(all[2]);
        saw_alg = true;
      } else if (all.size() == 3 && all[1] == "source") {
        rf.source = detail::parse_vertex_field(all[2], line_no, name);
        saw_src = true;
      } else if (all.size() == 3 && all[1] == "snapshot") {
        rf.snapshot = detail::parse_vertex_field(all[2], line_no, name);
        saw_snap = true;
      }
      continue;
    }
    if (all.size() != 2) {
      throw ParseError(name + ": expected 'external_id value'", line_no);
    }
    std::uint64_t ext = detail::parse_vertex_field(all[0], line_no, name);
    double value;
    std::string tok(all[1]);
    if (tok == "inf") {
      value = std::numeric_limits<double>::infinity();
    } else if (tok == "-inf") {
      value = -std::numeric_limits<double>::infinity();
    } else {
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError(name + ": malformed value '" + tok + "'", line_no);
      }
    }
    rf.values.emplace_back(ext, value);
  }
  if (!saw_alg || !saw_src || !saw_snap) {
    throw ParseError(name + ": missing header lines");
  }
  return rf;
}

}  // namespace evograph
