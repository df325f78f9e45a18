// Copyright (c) evograph contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line surface: generate synthetic evolution traces, evaluate
// queries over snapshot series in four modes, verify modes against full
// recomputation, and report change statistics.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "evograph/evograph.hpp"

namespace fs = std::filesystem;
using namespace evograph;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

enum class Mode { Full, DirectHop, Qrs, Cqrs };

Mode mode_from_string(const std::string& name) {
  if (name == "full") return Mode::Full;
  if (name == "direct-hop") return Mode::DirectHop;
  if (name == "qrs") return Mode::Qrs;
  if (name == "cqrs") return Mode::Cqrs;
  throw ConfigError("unknown mode '" + name + "' (expected full|direct-hop|qrs|cqrs)");
}

std::string delta_file_name(std::size_t i) {
  std::string num = std::to_string(i);
  while (num.size() < 4) num.insert(num.begin(), '0');
  return "delta_" + num + ".del";
}

std::string snapshot_file_name(std::size_t i) {
  std::string num = std::to_string(i);
  while (num.size() < 4) num.insert(num.begin(), '0');
  return "snapshot_" + num + ".res";
}

std::ofstream open_out(const fs::path& p) {
  std::ofstream out(p);
  if (!out) throw IoError("cannot write " + p.string());
  return out;
}

struct GenerateArgs {
  GeneratorConfig cfg;
  std::string out_dir;
  bool real_weights = false;
};

int run_generate(GenerateArgs& a) {
  if (a.real_weights) a.cfg.integer_weights = false;
  GeneratedTrace trace = generate_evolving(a.cfg);
  fs::path dir(a.out_dir);
  fs::create_directories(dir);
  IdMap ids = IdMap::identity(trace.num_vertices);

  {
    auto out = open_out(dir / "base.el");
    write_edge_list(out, trace.base, ids);
  }
  Manifest m;
  m.vertices = trace.num_vertices;
  m.base = "base.el";
  for (std::size_t i = 0; i < trace.deltas.size(); ++i) {
    std::string name = delta_file_name(i + 1);
    auto out = open_out(dir / name);
    write_delta_file(out, trace.deltas[i], ids);
    m.deltas.push_back(name);
  }
  save_manifest(dir / "manifest.json", m);
  std::cout << "wrote " << (trace.deltas.size() + 2) << " files to " << dir.string() << " ("
            << trace.num_vertices << " vertices, " << trace.base.size() << " base edges, "
            << trace.deltas.size() << " deltas)\n";
  return 0;
}

struct QueryArgs {
  std::string manifest;
  std::string alg = "sssp";
  std::uint64_t source = 0;
  std::string mode = "cqrs";
  std::string out_dir;
  std::string stats_file;
  unsigned threads = 0;
  std::string layout = "snapshot-major";
  bool union_full = false;
  bool oracle = false;
  bool telemetry = false;
};

struct QueryRun {
  std::vector<ValueArray> results;  // one per snapshot
  StatsReport report;
  LoadedSeries loaded;
};

// Shared by cmd_query and cmd_verify: load the trace, run the requested
// mode, and fill the stats report.
QueryRun run_query_mode(const QueryArgs& a) {
  QueryRun run;
  auto t_total = Clock::now();
  auto t0 = Clock::now();
  run.loaded = load_series(fs::path(a.manifest));
  const SnapshotSeries& series = run.loaded.series;
  run.report.load_ms = ms_since(t0);

  AlgorithmKind kind = algorithm_kind_from_string(a.alg);
  Mode mode = mode_from_string(a.mode);
  auto internal = run.loaded.ids.lookup(a.source);
  if (!internal) {
    throw RangeError("source vertex " + std::to_string(a.source) +
                     " is not in the vertex universe");
  }
  QueryContext q{algorithm_spec(kind), *internal};
  EvalOptions eval{a.threads};

  // One domain pass over every edge that appears anywhere in the window.
  validate_weights(build_graph(build_union(series), series.num_vertices), kind);

  run.report.algorithm = a.alg;
  run.report.source = a.source;
  run.report.mode = a.mode;
  run.report.num_vertices = series.num_vertices;
  run.report.num_snapshots = series.size();
  run.report.threads = resolve_threads(a.threads);

  QrsOptions qopts;
  qopts.union_from_scratch = a.union_full;
  qopts.eval = eval;

  switch (mode) {
    case Mode::Full: {
      t0 = Clock::now();
      for (std::size_t i = 0; i < series.size(); ++i) {
        run.results.push_back(
            evaluate_full(series.snapshot_graph(i), q, &run.report.counters, eval));
      }
      run.report.evaluation_ms = ms_since(t0);
      break;
    }
    case Mode::DirectHop: {
      t0 = Clock::now();
      std::vector<EdgeTriple> inter = build_intersection(series);
      Graph common = build_graph(inter, series.num_vertices);
      std::vector<AdditionBatch> batches = build_addition_batches(series, inter);
      ValueArray bootstrap = evaluate_full(common, q, nullptr, eval);
      run.results = direct_hop_all(common, bootstrap, batches, q, &run.report.counters,
                                   DirectHopOptions{a.threads, false});
      run.report.evaluation_ms = ms_since(t0);
      break;
    }
    case Mode::Qrs:
    case Mode::Cqrs: {
      QrsBundle bundle = qrs_pipeline(series, q, nullptr, qopts);
      run.report.has_reduction = true;
      run.report.qrs_timings = bundle.timings;
      run.report.reduction = bundle.stats;
      t0 = Clock::now();
      if (mode == Mode::Qrs) {
        run.results = direct_hop_all(bundle.qrs, bundle.bootstrap(), bundle.reduced_batches,
                                     q, &run.report.counters, DirectHopOptions{a.threads, false});
      } else {
        VersionedGraph vg = build_versioned_graph(bundle.qrs, bundle.reduced_batches);
        ConcurrentOptions copts;
        copts.threads = a.threads;
        copts.layout = a.layout == "vertex-major" ? Layout::VertexMajor : Layout::SnapshotMajor;
        ConcurrentTelemetry telemetry;
        MultiResult mr = evaluate_concurrent(vg, bundle.bootstrap(), bundle.reduced_batches,
                                             q, &run.report.counters,
                                             a.telemetry ? &telemetry : nullptr, copts);
        for (std::size_t i = 0; i < mr.num_snapshots(); ++i) {
          run.results.push_back(mr.snapshot_values(i));
        }
        if (a.telemetry) run.report.telemetry = std::move(telemetry);
      }
      run.report.evaluation_ms = ms_since(t0);
      break;
    }
  }

  if (a.oracle) {
    WindowStats w = measure_window(series, series.size(), q, eval);
    OracleStats o;
    o.unchanged_count = w.unchanged_count;
    o.unchanged_fraction = w.unchanged_fraction;
    o.uvv_recall = w.uvv_recall;
    run.report.oracle = o;
  }
  run.report.total_ms = ms_since(t_total);
  return run;
}

int run_query(const QueryArgs& a) {
  QueryRun run = run_query_mode(a);
  fs::path dir(a.out_dir);
  fs::create_directories(dir);
  AlgorithmKind kind = algorithm_kind_from_string(a.alg);
  for (std::size_t i = 0; i < run.results.size(); ++i) {
    auto out = open_out(dir / snapshot_file_name(i));
    write_result_file(out, run.results[i], run.loaded.ids, kind, a.source, i);
  }
  std::cout << human_table(run.report);
  if (!a.stats_file.empty()) {
    auto out = open_out(fs::path(a.stats_file));
    out << stats_to_json(run.report).dump(2) << '\n';
  }
  return 0;
}

int run_verify(const QueryArgs& a) {
  QueryRun run = run_query_mode(a);
  const SnapshotSeries& series = run.loaded.series;
  AlgorithmKind kind = algorithm_kind_from_string(a.alg);
  QueryContext q{algorithm_spec(kind), *run.loaded.ids.lookup(a.source)};
  EvalOptions eval{a.threads};
  for (std::size_t i = 0; i < series.size(); ++i) {
    ValueArray want = evaluate_full(series.snapshot_graph(i), q, nullptr, eval);
    const ValueArray& got = run.results[i];
    for (VertexId v = 0; v < want.size(); ++v) {
      if (got[v] != want[v]) {
        std::cout << "mismatch: snapshot " << i << " vertex " << v << " (external "
                  << run.loaded.ids.external(v) << "): got " << format_double(got[v])
                  << " want " << format_double(want[v]) << '\n';
        return 1;
      }
    }
  }
  std::cout << "verified: " << series.size() << " snapshots, " << series.num_vertices
            << " vertices, mode " << a.mode << " matches full recomputation\n";
  return 0;
}

struct StatsArgs {
  std::string manifest;
  std::string alg = "sssp";
  std::uint64_t source = 0;
  std::vector<std::size_t> windows;
  unsigned threads = 0;
  std::string out_file;
};

int run_stats(const StatsArgs& a) {
  LoadedSeries loaded = load_series(fs::path(a.manifest));
  AlgorithmKind kind = algorithm_kind_from_string(a.alg);
  auto internal = loaded.ids.lookup(a.source);
  if (!internal) {
    throw RangeError("source vertex " + std::to_string(a.source) +
                     " is not in the vertex universe");
  }
  QueryContext q{algorithm_spec(kind), *internal};
  validate_weights(build_graph(build_union(loaded.series), loaded.series.num_vertices), kind);

  std::vector<std::size_t> windows = a.windows;
  if (windows.empty()) windows.push_back(loaded.series.size());
  std::vector<WindowStats> measured;
  for (std::size_t w : windows) {
    measured.push_back(measure_window(loaded.series, w, q, EvalOptions{a.threads}));
  }
  nlohmann::json j = windows_to_json(a.alg, a.source, measured);
  std::cout << j.dump(2) << '\n';
  if (!a.out_file.empty()) {
    auto out = open_out(fs::path(a.out_file));
    out << j.dump(2) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"evolving-graph query engine"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* cmd_gen = app.add_subcommand("generate", "generate a synthetic evolution trace");
  cmd_gen->add_option("--vertices", gen.cfg.num_vertices, "vertex count")->required();
  cmd_gen->add_option("--edges", gen.cfg.num_edges, "base edge count")->required();
  cmd_gen->add_option("--snapshots", gen.cfg.num_deltas, "number of delta files")->required();
  cmd_gen->add_option("--batch-size", gen.cfg.batch_size, "edge updates per delta")->required();
  cmd_gen->add_option("--add-fraction", gen.cfg.add_fraction, "fraction of updates that are additions");
  cmd_gen->add_option("--seed", gen.cfg.seed, "RNG seed");
  cmd_gen->add_option("--weight-min", gen.cfg.weight_min, "minimum edge weight");
  cmd_gen->add_option("--weight-max", gen.cfg.weight_max, "maximum edge weight");
  cmd_gen->add_flag("--real-weights", gen.real_weights, "draw real-valued weights");
  cmd_gen->add_flag("--reassign-weight-on-readd", gen.cfg.reassign_weight_on_readd,
                    "re-added edges draw a fresh weight instead of restoring the old one");
  cmd_gen->add_option("--out-dir", gen.out_dir, "output directory")->required();

  QueryArgs qa;
  CLI::App* cmd_query = app.add_subcommand("query", "evaluate a query over every snapshot");
  auto add_query_flags = [&](CLI::App* c) {
    c->add_option("--manifest", qa.manifest, "manifest JSON path")->required();
    c->add_option("--alg", qa.alg, "bfs|sssp|sswp|ssnp|viterbi")->required();
    c->add_option("--source", qa.source, "source vertex (external id)")->required();
    c->add_option("--mode", qa.mode, "full|direct-hop|qrs|cqrs");
    c->add_option("--threads", qa.threads, "engine threads (0 = auto)");
    c->add_flag("--union-full", qa.union_full, "evaluate the union bound from scratch");
  };
  add_query_flags(cmd_query);
  cmd_query->add_option("--out-dir", qa.out_dir, "result file directory")->required();
  cmd_query->add_option("--stats", qa.stats_file, "write stats JSON here");
  cmd_query->add_option("--layout", qa.layout, "snapshot-major|vertex-major")
      ->check(CLI::IsMember({"snapshot-major", "vertex-major"}));
  cmd_query->add_flag("--oracle", qa.oracle, "measure ground-truth change stats (runs full recomputation)");
  cmd_query->add_flag("--telemetry", qa.telemetry, "collect per-round telemetry (cqrs)");

  CLI::App* cmd_verify = app.add_subcommand("verify", "run a mode and diff against full recomputation");
  add_query_flags(cmd_verify);

  StatsArgs sa;
  CLI::App* cmd_stats = app.add_subcommand("stats", "report change statistics over snapshot windows");
  cmd_stats->add_option("--manifest", sa.manifest, "manifest JSON path")->required();
  cmd_stats->add_option("--alg", sa.alg, "bfs|sssp|sswp|ssnp|viterbi")->required();
  cmd_stats->add_option("--source", sa.source, "source vertex (external id)")->required();
  cmd_stats->add_option("--windows", sa.windows, "snapshot window sizes")->delimiter(',');
  cmd_stats->add_option("--threads", sa.threads, "engine threads (0 = auto)");
  cmd_stats->add_option("--out", sa.out_file, "also write the JSON here");

  try {
    app.parse(argc, argv);
    if (cmd_gen->parsed()) return run_generate(gen);
    if (cmd_query->parsed()) return run_query(qa);
    if (cmd_verify->parsed()) return run_verify(qa);
    if (cmd_stats->parsed()) return run_stats(sa);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
