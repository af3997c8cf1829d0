// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

#include "careerplan/service.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

#include "careerplan/graph_io.hpp"
#include "careerplan/trajectory.hpp"
#include "httplib.h"

namespace careerplan {

using nlohmann::json;

namespace {

ApiResult error(int status, const std::string& message) {
  return ApiResult{status, json{{"schema_version", kSchemaVersion},
                                {"status", status},
                                {"error", message}}};
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::map<Method, std::vector<double>> learn_baselines(const TransitionGraph& graph,
                                                      const ValueIterationOptions& options) {
  std::map<Method, std::vector<double>> tables;
  tables[Method::kUtilityDuration] =
      value_iteration(graph, criterion_payoff(graph, Criterion::kNegDuration), options).values;
  tables[Method::kUtilityLevel] =
      value_iteration(graph, criterion_payoff(graph, Criterion::kLevel), options).values;
  tables[Method::kUtilityDesirability] =
      value_iteration(graph, criterion_payoff(graph, Criterion::kDesirability), options).values;
  tables[Method::kEquallyWeighted] =
      value_iteration(graph, equally_weighted_payoff(graph), options).values;
  return tables;
}

GreedyCriterion greedy_for(Method method) {
  switch (method) {
    case Method::kGreedyMostCommon: return GreedyCriterion::kMostCommon;
    case Method::kGreedyShortestDuration: return GreedyCriterion::kShortestDuration;
    case Method::kGreedyLevelGain: return GreedyCriterion::kLevelGain;
    default: return GreedyCriterion::kDesirabilityGain;
  }
}

}  // namespace

std::shared_ptr<const ServiceState> make_service_state(
    TransitionGraph graph, WeightGrid grid, std::vector<LearnedUtility> learned,
    const ValueIterationOptions& options, std::optional<Selection> selection,
    std::optional<json> report, int default_max_len) {
  auto state = std::make_shared<ServiceState>();
  state->baseline_tables = learn_baselines(graph, options);
  state->graph = std::move(graph);
  state->grid = std::move(grid);
  state->options = options;
  state->learned = std::move(learned);
  state->selection = std::move(selection);
  state->report = std::move(report);
  state->default_max_len = default_max_len;
  return state;
}

std::shared_ptr<const ServiceState> load_service_state(const PipelineConfig& config) {
  ArtifactPaths paths{config.workdir};
  require_file(paths.nodes());
  require_file(paths.edges());
  TransitionGraph graph = load_graph(paths.nodes().string(), paths.edges().string());
  LoadedGrid loaded = load_learned(paths, graph);
  std::optional<Selection> selection;
  if (std::filesystem::exists(paths.selection())) {
    selection = selection_from_json(read_json_file(paths.selection()));
  }
  std::optional<json> report;
  if (std::filesystem::exists(paths.report_json())) report = read_json_file(paths.report_json());
  return make_service_state(std::move(graph), std::move(loaded.grid), std::move(loaded.learned),
                            loaded.options, std::move(selection), std::move(report),
                            config.max_len);
}

json job_to_json(const TransitionGraph& graph, JobId id) {
  const JobKey& job = graph.job(id);
  const NodeStats& node = graph.node(id);
  return json{{"id", id},
              {"industry", job.industry},
              {"company_size", std::string(to_string(job.company_size))},
              {"title", job.title},
              {"level", node.level},
              {"pagerank", node.pagerank},
              {"out_degree", node.out_degree}};
}

json path_to_json(const TransitionGraph& graph, const PlannedPath& path,
                  const std::optional<WeightVector>& lambda) {
  json doc = json::object();
  doc["schema_version"] = kSchemaVersion;
  doc["origin"] = job_to_json(graph, path.origin);
  doc["method"] = path.method;
  doc["lambda"] = lambda ? json(std::vector<double>(lambda->components().begin(),
                                                    lambda->components().end()))
                         : json(nullptr);
  json hops = json::array();
  for (EdgeIndex e : path.hops) {
    const Edge& edge = graph.edge(e);
    hops.push_back({{"from", job_to_json(graph, edge.source)},
                    {"to", job_to_json(graph, edge.target)},
                    {"hop_count", edge.stats.hop_count},
                    {"D", edge.stats.duration_cost},
                    {"L", edge.stats.level_gain},
                    {"R", edge.stats.desirability_gain}});
  }
  doc["hops"] = std::move(hops);
  doc["length"] = path.hops.size();
  doc["totals"] = {{"D", -path.totals[0]}, {"L", path.totals[1]}, {"R", path.totals[2]}};
  return doc;
}

std::optional<std::size_t> match_grid_point(const ServiceState& state,
                                            const std::vector<double>& lambda, bool snap) {
  std::optional<std::size_t> best;
  double best_distance = 0.0;
  for (std::size_t j = 0; j < state.learned.size(); ++j) {
    auto components = state.learned[j].lambda.components();
    if (components.size() != lambda.size()) continue;
    double distance = 0.0;
    for (std::size_t i = 0; i < lambda.size(); ++i) distance += std::abs(components[i] - lambda[i]);
    if (!best || distance < best_distance) {
      best = j;
      best_distance = distance;
    }
  }
  if (best && !snap && best_distance > 1e-9) return std::nullopt;
  return best;
}

std::variant<PlanRequest, ApiResult> parse_plan_request(const json& body) {
  if (!body.is_object()) return error(400, "request body must be a JSON object");
  PlanRequest request;
  auto origin = body.find("origin_job_id");
  if (origin == body.end() || !origin->is_number_integer() || origin->get<long long>() < 0) {
    return error(400, "origin_job_id must be a nonnegative integer");
  }
  request.origin = static_cast<JobId>(origin->get<long long>());

  auto lambda = body.find("lambda");
  if (lambda == body.end() || (lambda->is_string() && lambda->get<std::string>() == "auto")) {
    request.lambda = AutoLambda{};
  } else if (lambda->is_array()) {
    std::vector<double> values;
    for (const auto& v : *lambda) {
      if (!v.is_number()) return error(400, "lambda entries must be numbers");
      values.push_back(v.get<double>());
    }
    request.lambda = std::move(values);
  } else {
    return error(400, "lambda must be an array of weights or \"auto\"");
  }

  if (auto method = body.find("method"); method != body.end() && !method->is_null()) {
    if (!method->is_string()) return error(400, "method must be a string");
    try {
      request.method = parse_method(method->get<std::string>());
    } catch (const std::invalid_argument& e) {
      return error(400, e.what());
    }
  }
  if (auto max_len = body.find("max_len"); max_len != body.end() && !max_len->is_null()) {
    if (!max_len->is_number_integer()) return error(400, "max_len must be an integer");
    request.max_len = max_len->get<int>();
  }
  if (auto snap = body.find("snap"); snap != body.end() && !snap->is_null()) {
    if (!snap->is_boolean()) return error(400, "snap must be a boolean");
    request.snap = snap->get<bool>();
  }
  return request;
}

ApiResult plan_query(const ServiceState& state, const PlanRequest& request) {
  const TransitionGraph& graph = state.graph;
  if (request.origin >= graph.job_count()) {
    return error(404, "unknown job id " + std::to_string(request.origin));
  }
  const int max_len = request.max_len.value_or(state.default_max_len);
  if (max_len < 1) return error(400, "max_len must be positive");

  if (is_greedy(request.method)) {
    PlannedPath path = greedy_path(graph, request.origin, greedy_for(request.method), max_len);
    return ApiResult{200, path_to_json(graph, path, std::nullopt)};
  }
  if (request.method != Method::kMuld) {
    const auto& table = state.baseline_tables.at(request.method);
    PlannedPath path = utility_path(graph, table, request.origin, max_len,
                                    std::string(method_label(request.method)));
    return ApiResult{200, path_to_json(graph, path, std::nullopt)};
  }

  std::vector<double> wanted;
  if (std::holds_alternative<AutoLambda>(request.lambda)) {
    if (!state.selection) return error(409, "no selected weight vector yet; run select first");
    auto c = state.selection->lambda_star.components();
    wanted.assign(c.begin(), c.end());
  } else {
    wanted = std::get<std::vector<double>>(request.lambda);
    if (wanted.size() != static_cast<std::size_t>(state.grid.M)) {
      return error(400, "lambda must have " + std::to_string(state.grid.M) + " components");
    }
    double sum = 0.0;
    for (double w : wanted) {
      if (!std::isfinite(w) || w < 0.0) return error(400, "lambda components must be nonnegative");
      sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-6) return error(400, "lambda components must sum to 1");
  }
  auto index = match_grid_point(state, wanted, request.snap);
  if (!index) {
    return error(409, "lambda is not a learned grid point; set snap to use the nearest one");
  }
  const LearnedUtility& learned = state.learned[*index];
  PlannedPath path = utility_path(graph, learned.table.values, request.origin, max_len, "muld");
  return ApiResult{200, path_to_json(graph, path, learned.lambda)};
}

ApiResult api_jobs(const ServiceState& state, const std::string& query, std::size_t limit) {
  const std::string needle = lowercase(query);
  json jobs = json::array();
  for (JobId id = 0; id < state.graph.job_count() && jobs.size() < limit; ++id) {
    const JobKey& job = state.graph.job(id);
    bool match = needle.empty() || needle == std::to_string(id) ||
                 lowercase(job.title).find(needle) != std::string::npos ||
                 lowercase(job.industry).find(needle) != std::string::npos;
    if (match) jobs.push_back(job_to_json(state.graph, id));
  }
  return ApiResult{200, json{{"schema_version", kSchemaVersion}, {"jobs", std::move(jobs)}}};
}

ApiResult api_weights(const ServiceState& state) {
  std::optional<WeightVector> star;
  if (state.selection) star = state.selection->lambda_star;
  json entries = json::array();
  for (const LearnedUtility& l : state.learned) {
    json entry = json::object();
    entry["lambda"] = std::vector<double>(l.lambda.components().begin(), l.lambda.components().end());
    entry["pim"] = nullptr;
    if (state.selection) {
      for (const auto& [lambda, value] : state.selection->pims) {
        if (lambda == l.lambda) entry["pim"] = value;
      }
    }
    entry["is_star"] = star && *star == l.lambda;
    entry["iterations"] = l.table.trace.size();
    entries.push_back(std::move(entry));
  }
  json doc = json::object();
  doc["schema_version"] = kSchemaVersion;
  doc["M"] = state.grid.M;
  doc["H"] = state.grid.H;
  doc["raw_count"] = state.grid.raw_count();
  doc["feasible_count"] = state.grid.feasible_count();
  doc["lambda_star"] = star ? json(std::vector<double>(star->components().begin(),
                                                       star->components().end()))
                            : json(nullptr);
  doc["entries"] = std::move(entries);
  return ApiResult{200, std::move(doc)};
}

ApiResult api_plan(const ServiceState& state, const std::string& body) {
  json parsed = json::parse(body, nullptr, false);
  if (parsed.is_discarded()) return error(400, "request body is not valid JSON");
  auto request = parse_plan_request(parsed);
  if (auto* failure = std::get_if<ApiResult>(&request)) return *failure;
  return plan_query(state, std::get<PlanRequest>(request));
}

ApiResult api_benchmark(const ServiceState& state) {
  if (!state.report) return error(404, "no benchmark report; run benchmark first");
  json doc = *state.report;
  doc["schema_version"] = kSchemaVersion;
  return ApiResult{200, std::move(doc)};
}

ApiResult api_neighbors(const ServiceState& state, const std::string& id_text) {
  JobId id = 0;
  auto [ptr, ec] = std::from_chars(id_text.data(), id_text.data() + id_text.size(), id);
  if (ec != std::errc() || ptr != id_text.data() + id_text.size()) {
    return error(400, "job id must be an integer");
  }
  if (id >= state.graph.job_count()) return error(404, "unknown job id " + id_text);
  json edges = json::array();
  auto [first, last] = state.graph.out_edge_range(id);
  for (EdgeIndex e = first; e < last; ++e) {
    const Edge& edge = state.graph.edge(e);
    edges.push_back({{"to", job_to_json(state.graph, edge.target)},
                     {"hop_count", edge.stats.hop_count},
                     {"D", edge.stats.duration_cost},
                     {"L", edge.stats.level_gain},
                     {"R", edge.stats.desirability_gain}});
  }
  return ApiResult{200, json{{"schema_version", kSchemaVersion},
                             {"job", job_to_json(state.graph, id)},
                             {"out_edges", std::move(edges)}}};
}

void register_routes(httplib::Server& server, std::shared_ptr<const ServiceState> state,
                     const std::string& static_dir) {
  auto reply = [](httplib::Response& res, const ApiResult& result) {
    res.status = result.status;
    res.set_content(result.body.dump(), "application/json");
  };
  server.Get("/api/jobs", [state, reply](const httplib::Request& req, httplib::Response& res) {
    std::size_t limit = 50;
    if (req.has_param("limit")) {
      const std::string text = req.get_param_value("limit");
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), limit);
      if (ec != std::errc() || ptr != text.data() + text.size()) {
        reply(res, error(400, "limit must be a nonnegative integer"));
        return;
      }
    }
    reply(res, api_jobs(*state, req.get_param_value("q"), limit));
  });
  server.Get("/api/weights", [state, reply](const httplib::Request&, httplib::Response& res) {
    reply(res, api_weights(*state));
  });
  server.Post("/api/plan", [state, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, api_plan(*state, req.body));
  });
  server.Get("/api/benchmark", [state, reply](const httplib::Request&, httplib::Response& res) {
    reply(res, api_benchmark(*state));
  });
  server.Get(R"(/api/graph/neighbors/([^/]+))",
             [state, reply](const httplib::Request& req, httplib::Response& res) {
               reply(res, api_neighbors(*state, req.matches[1].str()));
             });
  if (!static_dir.empty()) server.set_mount_point("/", static_dir);
}

}  // namespace careerplan
