// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

#include "careerplan/artifacts.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "careerplan/graph_io.hpp"

namespace careerplan {

using nlohmann::json;

std::filesystem::path ArtifactPaths::utility_table(std::span<const int> numerators) const {
  std::string name = "lambda";
  for (int n : numerators) name += "_" + std::to_string(n);
  return utilities_dir() / (name + ".csv");
}

void require_file(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) {
    throw MissingArtifact("missing input artifact '" + path.string() + "'");
  }
}

void write_utility_csv(std::ostream& out, const TransitionGraph& graph,
                       std::span<const double> utilities) {
  out << "s_id,d_id,utility\n";
  for (EdgeIndex e = 0; e < graph.edge_count(); ++e) {
    const Edge& edge = graph.edge(e);
    out << edge.source << ',' << edge.target << ',' << format_real(utilities[e]) << '\n';
  }
}

std::vector<double> read_utility_csv(std::istream& in, const TransitionGraph& graph) {
  std::string line;
  if (!std::getline(in, line) || line != "s_id,d_id,utility") {
    throw std::invalid_argument("utility CSV has an unexpected header");
  }
  std::vector<double> values(graph.edge_count(), 0.0);
  std::vector<bool> seen(graph.edge_count(), false);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto fields = csv_split(line);
    if (fields.size() != 3) throw std::invalid_argument("utility CSV row needs 3 fields");
    JobId s = 0, d = 0;
    double u = 0.0;
    std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), s);
    std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), d);
    auto [ptr, ec] = std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(), u);
    if (ec != std::errc()) throw std::invalid_argument("bad utility value '" + fields[2] + "'");
    auto e = graph.find_edge(s, d);
    if (!e) throw std::invalid_argument("utility CSV names an edge missing from the graph");
    values[*e] = u;
    seen[*e] = true;
  }
  for (bool b : seen) {
    if (!b) throw std::invalid_argument("utility CSV does not cover every edge");
  }
  return values;
}

json grid_manifest(const WeightGrid& grid, std::span<const LearnedUtility> learned,
                   const ValueIterationOptions& options, const ArtifactPaths& paths) {
  json doc = json::object();
  doc["schema_version"] = kSchemaVersion;
  doc["M"] = grid.M;
  doc["H"] = grid.H;
  doc["gamma"] = options.gamma;
  doc["T_max"] = options.max_iter;
  doc["mode"] = options.mode == UpdateMode::kSync ? "sync" : "async";
  doc["stop_tol"] = options.stop_tol ? json(*options.stop_tol) : json(nullptr);
  doc["raw_count"] = grid.raw_count();
  doc["feasible_count"] = grid.feasible_count();
  json entries = json::array();
  std::size_t j = 0;
  for (const GridEntry& entry : grid.entries) {
    json e = json::object();
    e["lambda"] = entry.lambda;
    e["numerators"] = entry.numerators;
    e["feasible"] = entry.feasible;
    if (entry.feasible && j < learned.size()) {
      const UtilityTable& table = learned[j].table;
      e["file"] = std::filesystem::relative(paths.utility_table(entry.numerators), paths.root)
                      .generic_string();
      e["iterations"] = table.trace.size();
      e["trace"] = table.trace;
      ++j;
    } else {
      e["file"] = nullptr;
    }
    entries.push_back(std::move(e));
  }
  doc["entries"] = std::move(entries);
  return doc;
}

void save_learned(const ArtifactPaths& paths, const TransitionGraph& graph,
                  const WeightGrid& grid, std::span<const LearnedUtility> learned,
                  const ValueIterationOptions& options) {
  std::filesystem::create_directories(paths.utilities_dir());
  std::size_t j = 0;
  for (const GridEntry& entry : grid.entries) {
    if (!entry.feasible) continue;
    std::ofstream out(paths.utility_table(entry.numerators), std::ios::binary);
    if (!out) throw std::runtime_error("cannot write utility table");
    write_utility_csv(out, graph, learned[j].table.values);
    ++j;
  }
  write_json_file(paths.manifest(), grid_manifest(grid, learned, options, paths));
}

LoadedGrid load_learned(const ArtifactPaths& paths, const TransitionGraph& graph) {
  require_file(paths.manifest());
  json doc = read_json_file(paths.manifest());
  LoadedGrid out;
  out.grid = make_weight_grid(doc.at("M").get<int>(), doc.at("H").get<int>());
  out.options.gamma = doc.at("gamma").get<double>();
  out.options.max_iter = doc.at("T_max").get<int>();
  out.options.mode = doc.at("mode").get<std::string>() == "async" ? UpdateMode::kAsync
                                                                  : UpdateMode::kSync;
  if (!doc.at("stop_tol").is_null()) out.options.stop_tol = doc.at("stop_tol").get<double>();
  for (const GridEntry& entry : out.grid.entries) {
    if (!entry.feasible) continue;
    auto file = paths.utility_table(entry.numerators);
    require_file(file);
    std::ifstream in(file);
    LearnedUtility l;
    l.lambda = WeightVector(entry.lambda);
    l.table.lambda = entry.lambda;
    l.table.gamma = out.options.gamma;
    l.table.values = read_utility_csv(in, graph);
    out.learned.push_back(std::move(l));
  }
  // restore traces from the manifest
  std::size_t j = 0;
  for (const auto& e : doc.at("entries")) {
    if (!e.at("feasible").get<bool>()) continue;
    if (j < out.learned.size() && e.contains("trace")) {
      out.learned[j].table.trace = e.at("trace").get<std::vector<double>>();
    }
    ++j;
  }
  return out;
}

json selection_to_json(std::span<const GridScore> scores, const WeightVector& star,
                       std::size_t path_count) {
  json doc = json::object();
  doc["schema_version"] = kSchemaVersion;
  doc["paths"] = path_count;
  std::vector<double> star_components(star.components().begin(), star.components().end());
  doc["lambda_star"] = star_components;
  json grid = json::array();
  for (const GridScore& s : scores) {
    if (s.lambda == star) doc["pim_star"] = s.pim;
    grid.push_back({{"lambda", std::vector<double>(s.lambda.components().begin(),
                                                   s.lambda.components().end())},
                    {"pim", s.pim},
                    {"mu", s.means.mu}});
  }
  doc["grid"] = std::move(grid);
  return doc;
}

Selection selection_from_json(const json& doc) {
  Selection s;
  s.lambda_star = WeightVector(doc.at("lambda_star").get<std::vector<double>>());
  s.pim_star = doc.value("pim_star", 0.0);
  for (const auto& g : doc.at("grid")) {
    s.pims.emplace_back(WeightVector(g.at("lambda").get<std::vector<double>>()),
                        g.at("pim").get<double>());
  }
  return s;
}

void write_json_file(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << doc.dump(2) << '\n';
}

json read_json_file(const std::filesystem::path& path) {
  require_file(path);
  std::ifstream in(path);
  return json::parse(in);
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace careerplan
