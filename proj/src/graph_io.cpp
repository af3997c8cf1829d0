// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

#include "careerplan/graph_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace careerplan {

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::vector<std::string> csv_split(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          fields.back().push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        fields.back().push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back().push_back(c);
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quote in CSV line");
  return fields;
}

std::string format_real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void write_edges_csv(std::ostream& out, const TransitionGraph& graph) {
  out << kEdgeCsvHeader << '\n';
  for (const Edge& e : graph.edges()) {
    out << e.source << ',' << e.target << ',' << e.stats.hop_count << ','
        << format_real(e.stats.duration_cost) << ',' << format_real(e.stats.level_gain) << ','
        << format_real(e.stats.desirability_gain) << '\n';
  }
}

void write_nodes_csv(std::ostream& out, const TransitionGraph& graph) {
  out << kNodeCsvHeader << '\n';
  for (JobId id = 0; id < graph.job_count(); ++id) {
    const JobKey& job = graph.job(id);
    const NodeStats& node = graph.node(id);
    out << id << ',' << csv_escape(job.industry) << ',' << to_string(job.company_size) << ','
        << csv_escape(job.title) << ',' << format_real(node.level) << ','
        << format_real(node.pagerank) << ',' << node.out_degree << '\n';
  }
}

void write_histogram_csv(std::ostream& out,
                         const std::map<std::uint32_t, std::size_t>& histogram) {
  out << kHistogramCsvHeader << '\n';
  for (const auto& [degree, count] : histogram) out << degree << ',' << count << '\n';
}

namespace {

template <typename T>
T parse_number(const std::string& field, std::size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw std::invalid_argument("line " + std::to_string(line) + ": bad number '" + field + "'");
  }
  return value;
}

std::vector<std::vector<std::string>> read_rows(std::istream& in, std::string_view header,
                                                std::size_t columns) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("missing CSV header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header) {
    throw std::invalid_argument("unexpected CSV header '" + line + "'");
  }
  std::vector<std::vector<std::string>> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto fields = csv_split(line);
    if (fields.size() != columns) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(columns) + " fields");
    }
    rows.push_back(std::move(fields));
  }
  return rows;
}

}  // namespace

TransitionGraph read_graph_csv(std::istream& nodes_in, std::istream& edges_in) {
  auto node_rows = read_rows(nodes_in, kNodeCsvHeader, 7);
  std::vector<JobKey> jobs;
  std::vector<NodeStats> nodes;
  for (std::size_t i = 0; i < node_rows.size(); ++i) {
    const auto& row = node_rows[i];
    if (parse_number<JobId>(row[0], i + 2) != i) {
      throw std::invalid_argument("node ids must be dense and ordered");
    }
    jobs.push_back(JobKey::make(row[1], parse_company_size(row[2]), row[3]));
    NodeStats node;
    node.level = parse_number<double>(row[4], i + 2);
    node.pagerank = parse_number<double>(row[5], i + 2);
    nodes.push_back(node);
  }
  auto edge_rows = read_rows(edges_in, kEdgeCsvHeader, 6);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < edge_rows.size(); ++i) {
    const auto& row = edge_rows[i];
    Edge e;
    e.source = parse_number<JobId>(row[0], i + 2);
    e.target = parse_number<JobId>(row[1], i + 2);
    e.stats.hop_count = parse_number<std::uint32_t>(row[2], i + 2);
    e.stats.duration_cost = parse_number<double>(row[3], i + 2);
    e.stats.level_gain = parse_number<double>(row[4], i + 2);
    e.stats.desirability_gain = parse_number<double>(row[5], i + 2);
    edges.push_back(e);
  }
  return TransitionGraph(std::move(jobs), std::move(edges), std::move(nodes));
}

void save_graph(const std::string& nodes_path, const std::string& edges_path,
                const TransitionGraph& graph) {
  std::ofstream nodes(nodes_path, std::ios::binary);
  std::ofstream edges(edges_path, std::ios::binary);
  if (!nodes || !edges) throw std::runtime_error("cannot write graph CSV files");
  write_nodes_csv(nodes, graph);
  write_edges_csv(edges, graph);
}

TransitionGraph load_graph(const std::string& nodes_path, const std::string& edges_path) {
  std::ifstream nodes(nodes_path);
  std::ifstream edges(edges_path);
  if (!nodes) throw std::runtime_error("cannot open '" + nodes_path + "'");
  if (!edges) throw std::runtime_error("cannot open '" + edges_path + "'");
  return read_graph_csv(nodes, edges);
}

}  // namespace careerplan
