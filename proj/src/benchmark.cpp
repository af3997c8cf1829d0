// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

#include "careerplan/benchmark.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "careerplan/wilcoxon.hpp"

namespace careerplan {

using nlohmann::json;

std::string_view method_label(Method method) {
  switch (method) {
    case Method::kGreedyMostCommon: return "greedy_most_common";
    case Method::kGreedyShortestDuration: return "greedy_shortest_duration";
    case Method::kGreedyLevelGain: return "greedy_level_gain";
    case Method::kGreedyDesirabilityGain: return "greedy_desirability_gain";
    case Method::kUtilityDuration: return "utility_duration";
    case Method::kUtilityLevel: return "utility_level";
    case Method::kUtilityDesirability: return "utility_desirability";
    case Method::kEquallyWeighted: return "equally_weighted";
    case Method::kMuld: return "muld";
  }
  return "unknown";
}

std::string_view method_display_name(Method method) {
  switch (method) {
    case Method::kGreedyMostCommon: return "Greedy most common";
    case Method::kGreedyShortestDuration: return "Greedy shortest duration";
    case Method::kGreedyLevelGain: return "Greedy level gain";
    case Method::kGreedyDesirabilityGain: return "Greedy desirability gain";
    case Method::kUtilityDuration: return "Single-criterion utility (-D)";
    case Method::kUtilityLevel: return "Single-criterion utility (L)";
    case Method::kUtilityDesirability: return "Single-criterion utility (R)";
    case Method::kEquallyWeighted: return "Equally weighted utility";
    case Method::kMuld: return "Multicriteria utility (MUL/D)";
  }
  return "unknown";
}

Method parse_method(std::string_view label) {
  for (Method m : kAllMethods) {
    if (method_label(m) == label) return m;
  }
  throw std::invalid_argument("unknown method '" + std::string(label) + "'");
}

bool is_greedy(Method method) {
  return method == Method::kGreedyMostCommon || method == Method::kGreedyShortestDuration ||
         method == Method::kGreedyLevelGain || method == Method::kGreedyDesirabilityGain;
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

namespace {

template <typename Planner>
std::vector<PlannedPath> plan_each(std::span<const PlannedPath> actual, Planner plan) {
  std::map<JobId, PlannedPath> by_origin;
  std::vector<PlannedPath> out;
  out.reserve(actual.size());
  for (const PlannedPath& a : actual) {
    auto it = by_origin.find(a.origin);
    if (it == by_origin.end()) it = by_origin.emplace(a.origin, plan(a.origin)).first;
    out.push_back(it->second);
  }
  return out;
}

GreedyCriterion greedy_criterion(Method method) {
  switch (method) {
    case Method::kGreedyMostCommon: return GreedyCriterion::kMostCommon;
    case Method::kGreedyShortestDuration: return GreedyCriterion::kShortestDuration;
    case Method::kGreedyLevelGain: return GreedyCriterion::kLevelGain;
    default: return GreedyCriterion::kDesirabilityGain;
  }
}

}  // namespace

std::vector<PlannedPath> plan_for_origins(const TransitionGraph& graph,
                                          std::span<const double> utilities,
                                          std::span<const PlannedPath> actual, int max_len,
                                          const std::string& method) {
  return plan_each(actual, [&](JobId origin) {
    return utility_path(graph, utilities, origin, max_len, method);
  });
}

std::vector<GridScore> score_grid(const TransitionGraph& graph,
                                  std::span<const LearnedUtility> learned,
                                  std::span<const PlannedPath> actual, int max_len) {
  std::vector<GridScore> scores;
  scores.reserve(learned.size());
  for (const LearnedUtility& l : learned) {
    GridScore score;
    score.lambda = l.lambda;
    auto optimized = plan_for_origins(graph, l.table.values, actual, max_len, "muld");
    score.means = improvement_means(optimized, actual);
    score.pim = pim(score.means.mu);
    score.iterations = l.table.trace.size();
    if (!l.table.trace.empty()) {
      score.first_delta = l.table.trace.front();
      score.final_delta = l.table.trace.back();
    }
    scores.push_back(std::move(score));
  }
  return scores;
}

WeightVector select_lambda_star(std::span<const GridScore> scores) {
  std::vector<std::pair<WeightVector, double>> pims;
  pims.reserve(scores.size());
  for (const auto& s : scores) pims.emplace_back(s.lambda, s.pim);
  return select_lambda_star(std::span<const std::pair<WeightVector, double>>(pims));
}

BenchmarkReport benchmark(const TransitionGraph& graph,
                          std::span<const CareerTrajectory> trajectories,
                          std::span<const Method> methods, const BenchmarkOptions& options) {
  BenchmarkReport report;
  report.options = options;
  const std::vector<PlannedPath> actual = actual_paths(graph, trajectories);
  if (actual.empty()) throw std::invalid_argument("no observed path with at least one hop");
  report.path_count = actual.size();
  const auto& vi = options.value_iteration;

  const bool with_muld = std::find(methods.begin(), methods.end(), Method::kMuld) != methods.end();
  std::vector<PlannedPath> muld_paths;
  if (with_muld) {
    WeightGrid grid = make_weight_grid(static_cast<int>(kCriteria), options.H);
    auto learned = muld_learn(graph, grid, vi, options.threads);
    report.grid = score_grid(graph, learned, actual, options.max_len);
    report.lambda_star = select_lambda_star(std::span<const GridScore>(report.grid));
    for (const auto& l : learned) {
      if (l.lambda == *report.lambda_star) {
        muld_paths = plan_for_origins(graph, l.table.values, actual, options.max_len, "muld");
      }
    }
  }

  auto plan_method = [&](Method method) -> std::vector<PlannedPath> {
    const std::string label(method_label(method));
    if (method == Method::kMuld) return muld_paths;
    if (is_greedy(method)) {
      return plan_each(actual, [&](JobId origin) {
        return greedy_path(graph, origin, greedy_criterion(method), options.max_len);
      });
    }
    EdgePayoff payoff;
    switch (method) {
      case Method::kUtilityDuration: payoff = criterion_payoff(graph, Criterion::kNegDuration); break;
      case Method::kUtilityLevel: payoff = criterion_payoff(graph, Criterion::kLevel); break;
      case Method::kUtilityDesirability: payoff = criterion_payoff(graph, Criterion::kDesirability); break;
      default:
        payoff = equally_weighted_payoff(graph, options.equal_w1, options.equal_w2, options.equal_w3);
    }
    UtilityTable table = value_iteration(graph, payoff, vi);
    return plan_for_origins(graph, table.values, actual, options.max_len, label);
  };

  // per-path improvement series, criterion-major
  auto improvements = [&](const std::vector<PlannedPath>& paths) {
    std::array<std::vector<double>, kCriteria> series;
    for (std::size_t k = 0; k < paths.size(); ++k) {
      PayoffVector diff = path_improvement(paths[k], actual[k]);
      for (std::size_t i = 0; i < kCriteria; ++i) series[i].push_back(diff[i]);
    }
    return series;
  };

  std::array<std::vector<double>, kCriteria> muld_series;
  std::vector<double> muld_path_pims;
  if (with_muld) {
    muld_series = improvements(muld_paths);
    for (std::size_t k = 0; k < actual.size(); ++k) {
      muld_path_pims.push_back(path_pim(muld_paths[k], actual[k]));
    }
  }

  for (Method method : methods) {
    MethodRow row;
    row.method = method;
    std::vector<PlannedPath> paths = plan_method(method);
    ImprovementMeans means = improvement_means(paths, actual);
    std::copy(means.mu.begin(), means.mu.end(), row.mean.begin());
    row.pim = pim(means.mu);
    for (std::size_t k = 0; k < actual.size(); ++k) row.path_pims.push_back(path_pim(paths[k], actual[k]));
    row.path_pim_mean = std::accumulate(row.path_pims.begin(), row.path_pims.end(), 0.0) /
                        static_cast<double>(row.path_pims.size());

    if (with_muld && method != Method::kMuld) {
      auto series = improvements(paths);
      for (std::size_t i = 0; i < kCriteria; ++i) {
        WilcoxonResult test = wilcoxon_signed_rank(muld_series[i], series[i]);
        row.p_value[i] = test.p_value;
        if (test.p_value < options.significance) {
          double muld_mean = std::accumulate(muld_series[i].begin(), muld_series[i].end(), 0.0) /
                             static_cast<double>(muld_series[i].size());
          row.marker[i] = row.mean[i] > muld_mean ? '+' : '-';
        }
      }
      for (std::size_t k = 0; k < actual.size(); ++k) {
        row.pim_deltas.push_back(muld_path_pims[k] - row.path_pims[k]);
      }
      row.delta_mean = std::accumulate(row.pim_deltas.begin(), row.pim_deltas.end(), 0.0) /
                       static_cast<double>(row.pim_deltas.size());
      row.delta_median = median(row.pim_deltas);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

constexpr std::array<const char*, kCriteria> kCriterionKeys = {"D", "L", "R"};

json criterion_object(const std::array<double, kCriteria>& values) {
  json out = json::object();
  for (std::size_t i = 0; i < kCriteria; ++i) out[kCriterionKeys[i]] = values[i];
  return out;
}

}  // namespace

json report_to_json(const BenchmarkReport& report, bool include_path_deltas) {
  json out = json::object();
  out["schema_version"] = 1;
  out["paths"] = report.path_count;
  out["gamma"] = report.options.value_iteration.gamma;
  out["T_max"] = report.options.value_iteration.max_iter;
  out["H"] = report.options.H;
  out["max_len"] = report.options.max_len;
  out["lambda_star"] = report.lambda_star
                           ? json(std::vector<double>(report.lambda_star->components().begin(),
                                                      report.lambda_star->components().end()))
                           : json(nullptr);
  json rows = json::array();
  for (const MethodRow& row : report.rows) {
    json r = json::object();
    r["method"] = std::string(method_label(row.method));
    r["name"] = std::string(method_display_name(row.method));
    r["pim"] = row.pim;
    // D is reported as D_actual - D_optimized, which equals the -D criterion mean.
    r["mean_improvement"] = criterion_object(row.mean);
    json p = json::object();
    json marker = json::object();
    for (std::size_t i = 0; i < kCriteria; ++i) {
      p[kCriterionKeys[i]] = row.p_value[i] ? json(*row.p_value[i]) : json(nullptr);
      marker[kCriterionKeys[i]] = row.marker[i] == ' ' ? std::string() : std::string(1, row.marker[i]);
    }
    r["p_value"] = std::move(p);
    r["marker"] = std::move(marker);
    r["path_pim_mean"] = row.path_pim_mean;
    if (!row.pim_deltas.empty()) {
      r["pim_delta"] = {{"mean", row.delta_mean},
                        {"median", row.delta_median},
                        {"count", row.pim_deltas.size()}};
    } else {
      r["pim_delta"] = nullptr;
    }
    rows.push_back(std::move(r));
  }
  out["methods"] = std::move(rows);

  json grid = json::array();
  for (const GridScore& g : report.grid) {
    grid.push_back({{"lambda", std::vector<double>(g.lambda.components().begin(),
                                                   g.lambda.components().end())},
                    {"pim", g.pim},
                    {"mu", g.means.mu},
                    {"iterations", g.iterations},
                    {"first_delta", g.first_delta},
                    {"final_delta", g.final_delta}});
  }
  out["grid"] = std::move(grid);

  if (include_path_deltas) {
    json deltas = json::object();
    for (const MethodRow& row : report.rows) {
      if (!row.pim_deltas.empty()) deltas[std::string(method_label(row.method))] = row.pim_deltas;
    }
    out["path_pim_deltas"] = std::move(deltas);
  }
  return out;
}

std::string render_report_table(const BenchmarkReport& report) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof(line), "%-32s %12s  %10s %10s  %10s %10s  %10s %10s  %s\n", "Method",
                "PIM", "mean dD", "p", "mean dL", "p", "mean dR", "p", "marker");
  out << line;
  out << std::string(120, '-') << '\n';
  for (const MethodRow& row : report.rows) {
    std::string p[kCriteria];
    std::string markers;
    for (std::size_t i = 0; i < kCriteria; ++i) {
      if (row.p_value[i]) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.2e", *row.p_value[i]);
        p[i] = buf;
      } else {
        p[i] = "-";
      }
      markers += row.marker[i] == ' ' ? '.' : row.marker[i];
    }
    if (row.method == Method::kMuld) markers = "";
    std::snprintf(line, sizeof(line), "%-32s %12.2f  %10.2f %10s  %10.2f %10s  %10.2f %10s  %s\n",
                  std::string(method_display_name(row.method)).c_str(), row.pim, row.mean[0],
                  p[0].c_str(), row.mean[1], p[1].c_str(), row.mean[2], p[2].c_str(),
                  markers.c_str());
    out << line;
  }
  out << "marker per criterion (D, L, R): + significantly better than MUL/D, - significantly "
         "worse, . not significant\n";
  return out.str();
}

}  // namespace careerplan
