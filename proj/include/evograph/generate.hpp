// Copyright (c) evograph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "evograph/errors.hpp"
#include "evograph/snapshots.hpp"
#include "evograph/types.hpp"

namespace evograph {

struct GeneratorConfig {
  std::size_t num_vertices = 0;
  std::size_t num_edges = 0;
  std::size_t num_deltas = 0;      // transitions; the trace has num_deltas + 1 snapshots
  std::size_t batch_size = 0;      // edge updates per transition
  double add_fraction = 0.5;
  std::uint64_t seed = 1;
  double weight_min = 1.0;
  double weight_max = 10.0;
  bool integer_weights = true;
  // Dropping and re-adding a pair restores its original weight unless set;
  // with it, every re-add draws a fresh weight.
  bool reassign_weight_on_readd = false;
};

struct GeneratedTrace {
  std::size_t num_vertices = 0;
  std::vector<EdgeTriple> base;  // sorted
  std::vector<DeltaBatch> deltas;
};

namespace detail {

// Unbiased uniform draw from [0, n); avoids stdlib distribution objects so a
// seed pins the byte stream on every platform.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

// Deterministic synthetic evolution: a random base graph, then per transition
// a fixed number of deletions (uniform over live edges) and additions
// (uniform over absent vertex pairs). One weight per (src, dst) pair at a
// time; no self loops.
inline GeneratedTrace generate_evolving(const GeneratorConfig& cfg) {
  const std::size_t n = cfg.num_vertices;
  if (n < 2) throw ConfigError("generator needs at least 2 vertices");
  if (n > std::numeric_limits<VertexId>::max()) {
    throw ConfigError("too many vertices for the dense id range");
  }
  if (!(cfg.add_fraction >= 0.0 && cfg.add_fraction <= 1.0)) {
    throw ConfigError("add fraction must lie in [0, 1]");
  }
  if (cfg.weight_min < 0.0 || cfg.weight_max < cfg.weight_min) {
    throw ConfigError("weight range is empty or negative");
  }
  if (cfg.batch_size > cfg.num_edges) {
    throw ConfigError("batch size exceeds the edge count");
  }
  const unsigned __int128 max_pairs =
      static_cast<unsigned __int128>(n) * (n - 1);
  if (static_cast<unsigned __int128>(cfg.num_edges) > max_pairs) {
    throw ConfigError("edge count exceeds the number of distinct vertex pairs");
  }

  const std::size_t adds_per_batch =
      static_cast<std::size_t>(std::llround(static_cast<double>(cfg.batch_size) * cfg.add_fraction));
  const std::size_t dels_per_batch = cfg.batch_size - adds_per_batch;
  {
    // Dry-run the edge counts so infeasible schedules fail before sampling.
    unsigned __int128 e = cfg.num_edges;
    for (std::size_t t = 0; t < cfg.num_deltas; ++t) {
      if (e < dels_per_batch) {
        throw ConfigError("transition " + std::to_string(t) +
                          " would delete more edges than exist");
      }
      e -= dels_per_batch;
      if (max_pairs - e < adds_per_batch) {
        throw ConfigError("transition " + std::to_string(t) +
                          " would add more edges than absent pairs");
      }
      e += adds_per_batch;
    }
  }

  std::mt19937_64 rng(cfg.seed);
  auto pair_key = [](VertexId s, VertexId d) {
    return (static_cast<std::uint64_t>(s) << 32) | d;
  };
  auto draw_weight = [&]() -> double {
    if (cfg.integer_weights) {
      std::uint64_t span = static_cast<std::uint64_t>(cfg.weight_max - cfg.weight_min) + 1;
      return cfg.weight_min + static_cast<double>(detail::uniform_below(rng, span));
    }
    return cfg.weight_min + detail::uniform_unit(rng) * (cfg.weight_max - cfg.weight_min);
  };
  auto draw_pair = [&]() {
    VertexId s = static_cast<VertexId>(detail::uniform_below(rng, n));
    VertexId d = static_cast<VertexId>(detail::uniform_below(rng, n - 1));
    if (d >= s) ++d;  // skip the self loop
    return std::pair<VertexId, VertexId>(s, d);
  };

  std::vector<std::pair<VertexId, VertexId>> live;
  std::unordered_map<std::uint64_t, std::size_t> pos;      // pair -> index in live
  std::unordered_map<std::uint64_t, double> weight_of;     // live pairs
  std::unordered_map<std::uint64_t, double> first_weight;  // sticky across re-adds
  live.reserve(cfg.num_edges + cfg.num_deltas * adds_per_batch);

  auto insert_pair = [&](VertexId s, VertexId d) -> double {
    std::uint64_t key = pair_key(s, d);
    pos.emplace(key, live.size());
    live.emplace_back(s, d);
    double w;
    auto it = first_weight.find(key);
    if (it != first_weight.end() && !cfg.reassign_weight_on_readd) {
      w = it->second;
    } else {
      w = draw_weight();
      first_weight[key] = w;
    }
    weight_of[key] = w;
    return w;
  };

  auto sample_absent_pair = [&]() {
    // Rejection is fast while the graph is sparse; a dense graph falls back
    // to enumerating the absent pairs.
    for (int attempt = 0; attempt < 256; ++attempt) {
      auto [s, d] = draw_pair();
      if (!pos.contains(pair_key(s, d))) return std::pair<VertexId, VertexId>(s, d);
    }
    std::vector<std::pair<VertexId, VertexId>> absent;
    for (VertexId s = 0; s < n; ++s) {
      for (VertexId d = 0; d < n; ++d) {
        if (s != d && !pos.contains(pair_key(s, d))) absent.emplace_back(s, d);
      }
    }
    if (absent.empty()) throw ConfigError("no absent pair left to add");
    return absent[detail::uniform_below(rng, absent.size())];
  };

  GeneratedTrace trace;
  trace.num_vertices = n;
  while (live.size() < cfg.num_edges) {
    auto [s, d] = sample_absent_pair();
    insert_pair(s, d);
  }
  trace.base.reserve(cfg.num_edges);
  for (const auto& [s, d] : live) {
    trace.base.push_back(EdgeTriple{s, d, weight_of[pair_key(s, d)]});
  }
  std::sort(trace.base.begin(), trace.base.end());

  for (std::size_t t = 0; t < cfg.num_deltas; ++t) {
    DeltaBatch batch;
    for (std::size_t k = 0; k < dels_per_batch; ++k) {
      std::size_t idx = static_cast<std::size_t>(detail::uniform_below(rng, live.size()));
      auto [s, d] = live[idx];
      std::uint64_t key = pair_key(s, d);
      batch.deletions.push_back(EdgeTriple{s, d, weight_of[key]});
      live[idx] = live.back();
      pos[pair_key(live[idx].first, live[idx].second)] = idx;
      live.pop_back();
      pos.erase(key);
      weight_of.erase(key);
    }
    for (std::size_t k = 0; k < adds_per_batch; ++k) {
      auto [s, d] = sample_absent_pair();
      double w = insert_pair(s, d);
      batch.additions.push_back(EdgeTriple{s, d, w});
    }
    trace.deltas.push_back(std::move(batch));
  }
  return trace;
}

}  // namespace evograph
