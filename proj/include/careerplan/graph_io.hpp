// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

// CSV import/export for the transition graph. Reals are written with 17
// significant digits so a reload reproduces the in-memory graph exactly.

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "careerplan/graph.hpp"

namespace careerplan {

inline constexpr std::string_view kEdgeCsvHeader =
    "s_id,d_id,hop_count,duration_cost,level_gain,desirability_gain";
inline constexpr std::string_view kNodeCsvHeader =
    "job_id,industry,company_size,title,level,pagerank,out_degree";
inline constexpr std::string_view kHistogramCsvHeader = "out_degree,job_count";

void write_edges_csv(std::ostream& out, const TransitionGraph& graph);
void write_nodes_csv(std::ostream& out, const TransitionGraph& graph);
void write_histogram_csv(std::ostream& out, const std::map<std::uint32_t, std::size_t>& histogram);

TransitionGraph read_graph_csv(std::istream& nodes, std::istream& edges);

void save_graph(const std::string& nodes_path, const std::string& edges_path,
                const TransitionGraph& graph);
TransitionGraph load_graph(const std::string& nodes_path, const std::string& edges_path);

// Minimal RFC 4180 helpers shared by the CSV writers.
std::string csv_escape(std::string_view field);
std::vector<std::string> csv_split(std::string_view line);
std::string format_real(double value);

}  // namespace careerplan
