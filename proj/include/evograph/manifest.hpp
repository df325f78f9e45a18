// Copyright (c) evograph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "evograph/errors.hpp"
#include "evograph/parse.hpp"
#include "evograph/snapshots.hpp"
#include "evograph/types.hpp"

namespace evograph {

// JSON file tying a trace together: declared vertex universe size, the base
// edge list, and the ordered delta files. Relative paths resolve against the
// manifest's own directory.
struct Manifest {
  std::size_t vertices = 0;
  std::string base;
  std::vector<std::string> deltas;
};

inline Manifest load_manifest(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot open manifest " + file.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
    Manifest m;
    m.vertices = j.at("vertices").get<std::size_t>();
    m.base = j.at("base").get<std::string>();
    for (const auto& d : j.at("deltas")) m.deltas.push_back(d.get<std::string>());
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("manifest " + file.string() + ": " + e.what());
  }
}

inline void save_manifest(const std::filesystem::path& file, const Manifest& m) {
  nlohmann::json j;
  j["vertices"] = m.vertices;
  j["base"] = m.base;
  j["deltas"] = m.deltas;
  std::ofstream out(file);
  if (!out) throw IoError("cannot write manifest " + file.string());
  out << j.dump(2) << '\n';
}

struct LoadedSeries {
  SnapshotSeries series;
  IdMap ids;
  std::vector<EdgeTriple> base;
  std::vector<DeltaBatch> deltas;
};

// Reads every file a manifest names and materializes the snapshot series.
// Ids below the declared vertex count are kept as-is (so generated traces and
// traces with isolated vertices survive a round trip); otherwise ids are
// remapped densely in encounter order, and the declared count must equal the
// number of distinct ids.
inline LoadedSeries load_series(const std::filesystem::path& manifest_path) {
  Manifest m = load_manifest(manifest_path);
  std::filesystem::path dir = manifest_path.parent_path();
  auto resolve = [&](const std::string& p) {
    std::filesystem::path fp(p);
    return fp.is_absolute() ? fp : dir / fp;
  };

  std::filesystem::path base_path = resolve(m.base);
  std::ifstream base_in(base_path);
  if (!base_in) throw IoError("cannot open base edge list " + base_path.string());
  std::vector<RawEdge> raw_base = parse_raw_edge_list(base_in, base_path.filename().string());

  std::vector<RawDelta> raw_deltas;
  raw_deltas.reserve(m.deltas.size());
  for (const std::string& d : m.deltas) {
    std::filesystem::path dp = resolve(d);
    std::ifstream din(dp);
    if (!din) throw IoError("cannot open delta file " + dp.string());
    raw_deltas.push_back(parse_raw_delta(din, dp.filename().string()));
  }

  bool dense = true;
  auto scan = [&](const RawEdge& e) {
    if (e.src >= m.vertices || e.dst >= m.vertices) dense = false;
  };
  for (const RawEdge& e : raw_base) scan(e);
  for (const RawDelta& d : raw_deltas) {
    for (const RawEdge& e : d.additions) scan(e);
    for (const RawEdge& e : d.deletions) scan(e);
  }

  LoadedSeries out;
  if (dense) {
    out.ids = IdMap::identity(m.vertices);
  } else {
    for (const RawEdge& e : raw_base) {
      out.ids.intern(e.src);
      out.ids.intern(e.dst);
    }
    for (const RawDelta& d : raw_deltas) {
      for (const RawEdge& e : d.additions) {
        out.ids.intern(e.src);
        out.ids.intern(e.dst);
      }
      for (const RawEdge& e : d.deletions) {
        out.ids.intern(e.src);
        out.ids.intern(e.dst);
      }
    }
    if (out.ids.size() != m.vertices) {
      throw ConsistencyError("manifest declares " + std::to_string(m.vertices) +
                             " vertices but the files reference " +
                             std::to_string(out.ids.size()) + " distinct ids");
    }
  }

  auto remap = [&](const RawEdge& e) {
    return EdgeTriple{out.ids.intern(e.src), out.ids.intern(e.dst), e.weight};
  };
  for (const RawEdge& e : raw_base) out.base.push_back(remap(e));
  for (const RawDelta& d : raw_deltas) {
    DeltaBatch batch;
    for (const RawEdge& e : d.additions) batch.additions.push_back(remap(e));
    for (const RawEdge& e : d.deletions) batch.deletions.push_back(remap(e));
    out.deltas.push_back(std::move(batch));
  }
  out.series = materialize_snapshots(out.base, out.deltas, out.ids.size());
  return out;
}

}  // namespace evograph
