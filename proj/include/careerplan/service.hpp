// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

// Query layer over learned artifacts, shared by the CLI `plan` command and the
// HTTP API so both answer a logical query identically. The state is built
// once and never mutated afterwards.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "careerplan/artifacts.hpp"
#include "careerplan/benchmark.hpp"
#include "careerplan/config.hpp"
#include "careerplan/graph.hpp"
#include "careerplan/planner.hpp"

#include "json.hpp"

namespace httplib {
class Server;
}

namespace careerplan {

struct ServiceState {
  TransitionGraph graph;
  WeightGrid grid;
  ValueIterationOptions options;
  std::vector<LearnedUtility> learned;  // feasible grid order
  std::optional<Selection> selection;
  std::optional<nlohmann::json> report;
  // baseline tables, learned on load from the graph
  std::map<Method, std::vector<double>> baseline_tables;
  int default_max_len = kDefaultMaxLen;
};

// Loads graph, grid tables, and (when present) selection and report from the
// work directory. Throws MissingArtifact when graph or grid files are absent.
std::shared_ptr<const ServiceState> load_service_state(const PipelineConfig& config);

// Builds the state from in-memory pieces (tests and embedding).
std::shared_ptr<const ServiceState> make_service_state(
    TransitionGraph graph, WeightGrid grid, std::vector<LearnedUtility> learned,
    const ValueIterationOptions& options, std::optional<Selection> selection,
    std::optional<nlohmann::json> report, int default_max_len = kDefaultMaxLen);

struct AutoLambda {};

struct PlanRequest {
  JobId origin = 0;
  std::variant<AutoLambda, std::vector<double>> lambda = AutoLambda{};
  Method method = Method::kMuld;
  std::optional<int> max_len;
  bool snap = false;
};

// An HTTP-style outcome: status 200 with a body, or an error status and message.
struct ApiResult {
  int status = 200;
  nlohmann::json body;
};

// Parses a POST /api/plan body. Malformed input gives status 400.
std::variant<PlanRequest, ApiResult> parse_plan_request(const nlohmann::json& body);

// 404 unknown origin; 400 malformed lambda (negative, wrong length, sum off by
// more than 1e-6); 409 lambda not in the learned grid without snap, or "auto"
// before a selection exists.
ApiResult plan_query(const ServiceState& state, const PlanRequest& request);

nlohmann::json job_to_json(const TransitionGraph& graph, JobId id);
nlohmann::json path_to_json(const TransitionGraph& graph, const PlannedPath& path,
                            const std::optional<WeightVector>& lambda);

// Index of the learned vector nearest in L1 (ties to the lexicographically
// smallest), or the exact match when `snap` is false.
std::optional<std::size_t> match_grid_point(const ServiceState& state,
                                            const std::vector<double>& lambda, bool snap);

ApiResult api_jobs(const ServiceState& state, const std::string& query, std::size_t limit);
ApiResult api_weights(const ServiceState& state);
ApiResult api_plan(const ServiceState& state, const std::string& body);
ApiResult api_benchmark(const ServiceState& state);
ApiResult api_neighbors(const ServiceState& state, const std::string& id_text);

// Registers every route on `server`.
void register_routes(httplib::Server& server, std::shared_ptr<const ServiceState> state,
                     const std::string& static_dir = {});

}  // namespace careerplan
