// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

// On-disk pipeline artifacts. Everything is a plain text file under one work
// directory:
//
//   corpus.jsonl            raw trajectories (generate)
//   corpus.clean.jsonl      cleaned trajectories (ingest)
//   graph_nodes.csv         node statistics (build)
//   graph_edges.csv         edge statistics (build)
//   out_degree.csv          out-degree histogram (stats)
//   utilities/*.csv         one utility table per feasible weight vector (learn)
//   grid_manifest.json      grid entries, feasibility, trace summaries (learn)
//   selection.json          PIM per grid point and the selected vector (select)
//   report.json/.txt        benchmark report (benchmark)
//   pim_deltas.csv          per-path PIM deltas for box plots (plot-data)

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "careerplan/benchmark.hpp"
#include "careerplan/graph.hpp"
#include "careerplan/muld.hpp"
#include "careerplan/weights.hpp"

#include "json.hpp"

namespace careerplan {

inline constexpr int kSchemaVersion = 1;

// Raised when a required artifact file does not exist.
class MissingArtifact : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ArtifactPaths {
  std::filesystem::path root;

  std::filesystem::path raw_corpus() const { return root / "corpus.jsonl"; }
  std::filesystem::path clean_corpus() const { return root / "corpus.clean.jsonl"; }
  std::filesystem::path nodes() const { return root / "graph_nodes.csv"; }
  std::filesystem::path edges() const { return root / "graph_edges.csv"; }
  std::filesystem::path histogram() const { return root / "out_degree.csv"; }
  std::filesystem::path utilities_dir() const { return root / "utilities"; }
  std::filesystem::path manifest() const { return root / "grid_manifest.json"; }
  std::filesystem::path selection() const { return root / "selection.json"; }
  std::filesystem::path report_json() const { return root / "report.json"; }
  std::filesystem::path report_text() const { return root / "report.txt"; }
  std::filesystem::path pim_deltas() const { return root / "pim_deltas.csv"; }

  // utilities/lambda_<n1>_<n2>_<n3>.csv, numerators over H
  std::filesystem::path utility_table(std::span<const int> numerators) const;
};

void require_file(const std::filesystem::path& path);

// `s_id,d_id,utility`, one row per edge in edge order.
void write_utility_csv(std::ostream& out, const TransitionGraph& graph,
                       std::span<const double> utilities);
std::vector<double> read_utility_csv(std::istream& in, const TransitionGraph& graph);

nlohmann::json grid_manifest(const WeightGrid& grid, std::span<const LearnedUtility> learned,
                             const ValueIterationOptions& options, const ArtifactPaths& paths);

// Writes every table plus the manifest.
void save_learned(const ArtifactPaths& paths, const TransitionGraph& graph,
                  const WeightGrid& grid, std::span<const LearnedUtility> learned,
                  const ValueIterationOptions& options);

struct LoadedGrid {
  WeightGrid grid;
  ValueIterationOptions options;
  std::vector<LearnedUtility> learned;  // feasible order
};

LoadedGrid load_learned(const ArtifactPaths& paths, const TransitionGraph& graph);

struct Selection {
  WeightVector lambda_star;
  double pim_star = 0.0;
  std::vector<std::pair<WeightVector, double>> pims;  // feasible order
};

nlohmann::json selection_to_json(std::span<const GridScore> scores, const WeightVector& star,
                                 std::size_t path_count);
Selection selection_from_json(const nlohmann::json& doc);

void write_json_file(const std::filesystem::path& path, const nlohmann::json& doc);
nlohmann::json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace careerplan
