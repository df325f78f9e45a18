// Copyright (c) evograph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "evograph/errors.hpp"
#include "evograph/snapshots.hpp"
#include "evograph/types.hpp"

namespace evograph {

// External-to-dense vertex id mapping. Files may use arbitrary 64-bit ids;
// the engine indexes arrays with dense ids. Identity maps cover inputs whose
// ids are already dense (generated traces, ids below the declared count).
class IdMap {
 public:
  IdMap() = default;

  static IdMap identity(std::size_t num_vertices) {
    IdMap m;
    m.identity_ = true;
    m.n_ = num_vertices;
    return m;
  }

  // First-appearance assignment.
  VertexId intern(std::uint64_t ext) {
    if (identity_) {
      if (ext >= n_) {
        throw RangeError("vertex id " + std::to_string(ext) +
                         " outside the declared universe of " + std::to_string(n_));
      }
      return static_cast<VertexId>(ext);
    }
    auto it = to_internal_.find(ext);
    if (it != to_internal_.end()) return it->second;
    if (to_external_.size() >= std::numeric_limits<VertexId>::max()) {
      throw CapacityError("too many distinct vertex ids");
    }
    VertexId v = static_cast<VertexId>(to_external_.size());
    to_internal_.emplace(ext, v);
    to_external_.push_back(ext);
    return v;
  }

  std::optional<VertexId> lookup(std::uint64_t ext) const {
    if (identity_) {
      if (ext >= n_) return std::nullopt;
      return static_cast<VertexId>(ext);
    }
    auto it = to_internal_.find(ext);
    if (it == to_internal_.end()) return std::nullopt;
    return it->second;
  }

  std::uint64_t external(VertexId v) const {
    if (identity_) return v;
    return to_external_.at(v);
  }

  std::size_t size() const { return identity_ ? n_ : to_external_.size(); }
  bool is_identity() const { return identity_; }

 private:
  bool identity_ = false;
  std::size_t n_ = 0;
  std::unordered_map<std::uint64_t, VertexId> to_internal_;
  std::vector<std::uint64_t> to_external_;
};

// An edge line as written in a file, before id remapping.
struct RawEdge {
  std::uint64_t src = 0;
  std::uint64_t dst = 0;
  Weight weight = 1.0;
};

struct RawDelta {
  std::vector<RawEdge> additions;
  std::vector<RawEdge> deletions;
};

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline std::string_view strip_comment(std::string_view line) {
  std::size_t pos = line.find('#');
  return pos == std::string_view::npos ? line : line.substr(0, pos);
}

inline std::uint64_t parse_vertex_field(std::string_view tok, std::size_t line_no,
                                        const std::string& name) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(name + ": malformed vertex id '" + std::string(tok) + "'", line_no);
  }
  return v;
}

inline Weight parse_weight_field(std::string_view tok, std::size_t line_no,
                                 const std::string& name) {
  double w = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), w);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(name + ": malformed weight '" + std::string(tok) + "'", line_no);
  }
  if (!std::isfinite(w)) {
    throw DomainError(name + ": weight '" + std::string(tok) + "' is not finite (line " +
                      std::to_string(line_no) + ")");
  }
  if (w < 0.0) {
    throw DomainError(name + ": negative weight '" + std::string(tok) + "' (line " +
                      std::to_string(line_no) + ")");
  }
  return w;
}

inline RawEdge parse_edge_fields(const std::vector<std::string_view>& fields,
                                 std::size_t first, std::size_t line_no,
                                 const std::string& name) {
  if (fields.size() - first < 2 || fields.size() - first > 3) {
    throw ParseError(name + ": expected 'src dst [weight]'", line_no);
  }
  RawEdge e;
  e.src = parse_vertex_field(fields[first], line_no, name);
  e.dst = parse_vertex_field(fields[first + 1], line_no, name);
  e.weight = fields.size() - first == 3
                 ? parse_weight_field(fields[first + 2], line_no, name)
                 : 1.0;
  return e;
}

}  // namespace detail

// "src dst [weight]" per line, '#' starts a comment, blank lines ignored.
inline std::vector<RawEdge> parse_raw_edge_list(std::istream& in,
                                                const std::string& name = "edge list") {
  std::vector<RawEdge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = detail::split_fields(detail::strip_comment(line));
    if (fields.empty()) continue;
    edges.push_back(detail::parse_edge_fields(fields, 0, line_no, name));
  }
  return edges;
}

// "+ src dst [weight]" / "- src dst [weight]" per line; '#' comments allowed.
inline RawDelta parse_raw_delta(std::istream& in,
                                const std::string& name = "delta") {
  RawDelta d;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = detail::split_fields(detail::strip_comment(line));
    if (fields.empty()) continue;
    if (fields[0] == "+") {
      d.additions.push_back(detail::parse_edge_fields(fields, 1, line_no, name));
    } else if (fields[0] == "-") {
      d.deletions.push_back(detail::parse_edge_fields(fields, 1, line_no, name));
    } else {
      throw ParseError(name + ": expected '+' or '-' prefix, got '" +
                       std::string(fields[0]) + "'", line_no);
    }
  }
  return d;
}

struct ParsedEdgeList {
  std::vector<EdgeTriple> triples;
  IdMap ids;
};

// Standalone edge-list reader: remaps ids densely in first-appearance order.
inline ParsedEdgeList parse_edge_list(std::istream& in,
                                      const std::string& name = "edge list") {
  ParsedEdgeList out;
  for (const RawEdge& r : parse_raw_edge_list(in, name)) {
    out.triples.push_back(EdgeTriple{out.ids.intern(r.src), out.ids.intern(r.dst), r.weight});
  }
  return out;
}

// Standalone delta reader for inputs whose ids are already dense; ids are
// taken literally. Manifest-driven loading remaps base and deltas jointly.
inline DeltaBatch parse_delta_batch(std::istream& in,
                                    const std::string& name = "delta") {
  RawDelta raw = parse_raw_delta(in, name);
  DeltaBatch d;
  auto convert = [&](const RawEdge& r) {
    if (r.src > std::numeric_limits<VertexId>::max() ||
        r.dst > std::numeric_limits<VertexId>::max()) {
      throw RangeError(name + ": vertex id exceeds the dense id range");
    }
    return EdgeTriple{static_cast<VertexId>(r.src), static_cast<VertexId>(r.dst), r.weight};
  };
  for (const RawEdge& r : raw.additions) d.additions.push_back(convert(r));
  for (const RawEdge& r : raw.deletions) d.deletions.push_back(convert(r));
  return d;
}

}  // namespace evograph
