// Copyright (c) evograph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "evograph/concurrent.hpp"
#include "evograph/errors.hpp"
#include "evograph/evaluate.hpp"
#include "evograph/qrs.hpp"
#include "evograph/snapshots.hpp"
#include "evograph/types.hpp"

namespace evograph {

// Ground-truth change measurement: recomputes every snapshot from scratch and
// counts vertices whose value never moves across the window.
struct OracleStats {
  std::size_t unchanged_count = 0;
  double unchanged_fraction = 0.0;
  double uvv_recall = 0.0;
};

struct StatsReport {
  std::string algorithm;
  std::uint64_t source = 0;  // external id
  std::string mode;
  std::size_t num_vertices = 0;
  std::size_t num_snapshots = 0;
  unsigned threads = 0;

  double load_ms = 0.0;
  double evaluation_ms = 0.0;
  double total_ms = 0.0;

  bool has_reduction = false;
  QrsTimings qrs_timings;
  ReductionStats reduction;

  EngineCounters counters;
  std::optional<OracleStats> oracle;
  std::optional<ConcurrentTelemetry> telemetry;
};

inline double safe_ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 1.0 : static_cast<double>(num) / static_cast<double>(den);
}

inline nlohmann::json stats_to_json(const StatsReport& r) {
  nlohmann::json j;
  j["query"] = {{"algorithm", r.algorithm}, {"source", r.source},
                {"mode", r.mode},           {"vertices", r.num_vertices},
                {"snapshots", r.num_snapshots}, {"threads", r.threads}};
  nlohmann::json timings;
  timings["load"] = r.load_ms;
  if (r.has_reduction) {
    timings["qrs_generation"] = {{"intersection_build", r.qrs_timings.intersection_build_ms},
                                 {"union_build", r.qrs_timings.union_build_ms},
                                 {"bounds", r.qrs_timings.bounds_ms},
                                 {"reduction", r.qrs_timings.reduction_ms},
                                 {"total", r.qrs_timings.total_ms()}};
  }
  timings["evaluation"] = r.evaluation_ms;
  timings["total"] = r.total_ms;
  j["timings_ms"] = timings;

  if (r.has_reduction) {
    j["reduction"] = {
        {"intersection_edges", r.reduction.intersection_edges},
        {"union_edges", r.reduction.union_edges},
        {"qrs_edges", r.reduction.qrs_edges},
        {"removed_intersection_edges", r.reduction.removed_intersection_edges},
        {"qrs_edge_fraction", safe_ratio(r.reduction.qrs_edges, r.reduction.intersection_edges)},
        {"batch_edges_original", r.reduction.batch_edges_original},
        {"batch_edges_reduced", r.reduction.batch_edges_reduced},
        {"batch_reduction_ratio",
         safe_ratio(r.reduction.batch_edges_reduced, r.reduction.batch_edges_original)},
        {"uvv_count", r.reduction.uvv_count},
        {"uvv_fraction", r.reduction.uvv_fraction}};
  }
  j["counters"] = {{"edges_scanned", r.counters.edges_scanned},
                   {"candidates", r.counters.candidates},
                   {"updates", r.counters.updates},
                   {"rounds", r.counters.rounds},
                   {"frontier_total", r.counters.frontier_total}};
  if (r.oracle) {
    j["oracle"] = {{"unchanged_count", r.oracle->unchanged_count},
                   {"unchanged_fraction", r.oracle->unchanged_fraction},
                   {"uvv_recall", r.oracle->uvv_recall}};
  }
  if (r.telemetry) {
    nlohmann::json rounds = nlohmann::json::array();
    for (const RoundTelemetry& t : r.telemetry->rounds) {
      rounds.push_back({{"frontier_size", t.frontier_size},
                        {"edges_scanned", t.edges_scanned},
                        {"candidates", t.candidates},
                        {"updates", t.updates},
                        {"updates_per_snapshot", t.updates_per_snapshot}});
    }
    j["telemetry"] = {{"rounds", rounds}};
  }
  return j;
}

inline std::string human_table(const StatsReport& r) {
  std::ostringstream out;
  auto row = [&](const std::string& k, const std::string& v) {
    out << "  " << k;
    for (std::size_t i = k.size(); i < 28; ++i) out << ' ';
    out << v << '\n';
  };
  out << r.algorithm << " from " << r.source << " over " << r.num_snapshots
      << " snapshots (" << r.mode << ", " << r.threads << " threads)\n";
  row("vertices", std::to_string(r.num_vertices));
  row("load ms", std::to_string(r.load_ms));
  if (r.has_reduction) {
    row("qrs generation ms", std::to_string(r.qrs_timings.total_ms()));
    row("uvv fraction", std::to_string(r.reduction.uvv_fraction));
    row("qrs edge fraction",
        std::to_string(safe_ratio(r.reduction.qrs_edges, r.reduction.intersection_edges)));
    row("batch reduction ratio",
        std::to_string(safe_ratio(r.reduction.batch_edges_reduced,
                                  r.reduction.batch_edges_original)));
  }
  row("evaluation ms", std::to_string(r.evaluation_ms));
  row("edges scanned", std::to_string(r.counters.edges_scanned));
  row("candidates", std::to_string(r.counters.candidates));
  row("updates", std::to_string(r.counters.updates));
  row("rounds", std::to_string(r.counters.rounds));
  if (r.oracle) {
    row("unchanged fraction", std::to_string(r.oracle->unchanged_fraction));
    row("uvv recall", std::to_string(r.oracle->uvv_recall));
  }
  return out.str();
}

// Change statistics over the first `window` snapshots.
struct WindowStats {
  std::size_t window = 0;
  std::size_t unchanged_count = 0;
  std::size_t uvv_count = 0;
  double unchanged_fraction = 0.0;
  double uvv_fraction = 0.0;
  double uvv_recall = 0.0;
};

inline std::size_t count_unchanged(const std::vector<ValueArray>& per_snapshot) {
  if (per_snapshot.empty()) return 0;
  std::size_t n = per_snapshot.front().size();
  std::size_t unchanged = 0;
  for (std::size_t v = 0; v < n; ++v) {
    bool same = true;
    for (std::size_t i = 1; i < per_snapshot.size() && same; ++i) {
      same = per_snapshot[i][v] == per_snapshot.front()[v];
    }
    unchanged += same ? 1 : 0;
  }
  return unchanged;
}

inline WindowStats measure_window(const SnapshotSeries& series, std::size_t window,
                                  const QueryContext& q, const EvalOptions& eval = {}) {
  if (window == 0 || window > series.size()) {
    throw RangeError("window of " + std::to_string(window) + " snapshots on a series of " +
                     std::to_string(series.size()));
  }
  SnapshotSeries prefix;
  prefix.num_vertices = series.num_vertices;
  prefix.edge_sets.assign(series.edge_sets.begin(),
                          series.edge_sets.begin() + static_cast<std::ptrdiff_t>(window));

  std::vector<ValueArray> truth;
  truth.reserve(window);
  for (std::size_t i = 0; i < window; ++i) {
    truth.push_back(evaluate_full(prefix.snapshot_graph(i), q, nullptr, eval));
  }
  QrsOptions qopts;
  qopts.eval = eval;
  QrsBundle bundle = qrs_pipeline(prefix, q, nullptr, qopts);

  WindowStats w;
  w.window = window;
  w.unchanged_count = count_unchanged(truth);
  w.uvv_count = bundle.uvv.size();
  std::size_t n = series.num_vertices;
  w.unchanged_fraction = n == 0 ? 0.0 : static_cast<double>(w.unchanged_count) / static_cast<double>(n);
  w.uvv_fraction = bundle.uvv.fraction();
  // The source never changes, so the denominator is positive.
  w.uvv_recall = w.unchanged_count == 0
                     ? 1.0
                     : static_cast<double>(w.uvv_count) / static_cast<double>(w.unchanged_count);
  return w;
}

inline nlohmann::json windows_to_json(const std::string& algorithm, std::uint64_t source,
                                      const std::vector<WindowStats>& windows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const WindowStats& w : windows) {
    arr.push_back({{"window", w.window},
                   {"unchanged_count", w.unchanged_count},
                   {"uvv_count", w.uvv_count},
                   {"unchanged_fraction", w.unchanged_fraction},
                   {"uvv_fraction", w.uvv_fraction},
                   {"uvv_recall", w.uvv_recall}});
  }
  return nlohmann::json{{"query", {{"algorithm", algorithm}, {"source", source}}},
                        {"windows", arr}};
}

}  // namespace evograph
